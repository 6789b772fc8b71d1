"""
Tests for normal subgroup lattices, composition series and the
anti-solvable predicate.
"""

from concurrent.futures import ThreadPoolExecutor

import pytest

from src.catalog.group_spec import make_named
from src.structure.composition import composition_factors, identify_simple, is_anti_solvable
from src.structure.normal import (
    characteristic_subgroups,
    is_characteristically_simple,
    normal_subgroup_lattice,
    normal_subgroups,
)
from src.utils.exceptions import KernelSplitError
from src.utils.helpers import KeyedLocks
from tests.test_structure_case.data import CHARACTERISTIC_CASES, NORMAL_COUNTS, TEST_CASES


@pytest.mark.parametrize("test_case", TEST_CASES, ids=lambda tc: tc["spec"])
def test_composition_factors(test_case, logger):
    group = make_named(test_case["spec"])
    series = composition_factors(group)
    logger.info(f"{test_case['spec']}: factors {series.names()}")
    assert sorted(series.names()) == test_case["factors"]
    assert series.subgroups[0] is group
    assert series.subgroups[-1].order == 1
    product = 1
    for factor in series.factors:
        product *= factor.order
    assert product == group.order


@pytest.mark.parametrize("test_case", TEST_CASES, ids=lambda tc: tc["spec"])
def test_factors_do_not_depend_on_series(test_case):
    group = make_named(test_case["spec"])
    largest = composition_factors(group, "largest")
    smallest = composition_factors(group, "smallest")
    assert largest.factor_signature() == smallest.factor_signature()
    assert sorted(largest.names()) == sorted(smallest.names())


@pytest.mark.parametrize("test_case", TEST_CASES, ids=lambda tc: tc["spec"])
def test_anti_solvable(test_case):
    assert is_anti_solvable(make_named(test_case["spec"])) == test_case["anti_solvable"]


def test_unknown_strategy_rejected():
    with pytest.raises(KernelSplitError):
        composition_factors(make_named("S4"), "middle")


def test_identify_simple_by_fingerprint():
    assert str(identify_simple(make_named("PSL(2,4)"))) == "Alt(5)"
    assert str(identify_simple(make_named("PSL(2,5)"))) == "Alt(5)"
    assert str(identify_simple(make_named("C7"))) == "Cyclic(7)"
    assert str(identify_simple(make_named("PSL(2,8)"))) == "PSL2(8)"


@pytest.mark.parametrize("spec", sorted(NORMAL_COUNTS), ids=lambda s: s)
def test_normal_subgroup_lattice(spec):
    group = make_named(spec)
    lattice = normal_subgroup_lattice(group)
    assert len(lattice) == NORMAL_COUNTS[spec]
    assert lattice[0].order == 1
    assert lattice[-1].order == group.order
    for normal in lattice:
        assert group.is_normal_subgroup(normal.group)
        assert group.order % normal.order == 0


@pytest.mark.parametrize("spec", sorted(CHARACTERISTIC_CASES), ids=lambda s: s)
def test_characteristic_subgroups(spec, workbench):
    count, char_simple = CHARACTERISTIC_CASES[spec]
    group, aut = workbench.group(spec), workbench.aut(spec)
    assert len(characteristic_subgroups(group, aut)) == count
    assert is_characteristically_simple(group, aut) == char_simple


def test_characteristic_subgroups_reject_foreign_aut(workbench):
    with pytest.raises(KernelSplitError):
        characteristic_subgroups(workbench.group("S4"), workbench.aut("A5"))


def test_normal_subgroups_sorted_by_order():
    orders = [n.order for n in normal_subgroups(make_named("S4"))]
    assert orders == [1, 4, 12, 24]


def test_lattice_is_computed_once_across_threads():
    group = make_named("S5")
    with ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(lambda _: normal_subgroup_lattice(group), range(8)))
    # every thread sees the single cached lattice
    assert all(r is results[0] for r in results)
    assert [n.order for n in results[0]] == [1, 60, 120]


def test_keyed_locks():
    locks = KeyedLocks()
    assert locks("a") is locks("a")
    assert locks("a") is not locks("b")
    with locks("a"):
        # reentrant for the owning thread
        with locks("a"):
            pass
    group = make_named("C3")
    weak = KeyedLocks(weak=True)
    assert weak(group) is weak(group)
