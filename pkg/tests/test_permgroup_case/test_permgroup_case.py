"""
Tests for permutations, stabilizer chains and element tables.

Orders are cross-checked against sympy's Schreier-Sims implementation.
"""

import numpy as np
import pytest
from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup as SymPermutationGroup

from src.groups.cayley import CayleyTable
from src.groups.homomorphism import GroupHom
from src.groups.permgroup import (
    PermGroup,
    center,
    conjugacy_classes,
    contains,
    coset_action,
    derived_subgroup,
    group_from_generators,
    normal_closure,
)
from src.groups.permutation import Permutation
from src.utils.exceptions import HomomorphismError, NotNormalError, PermutationError
from src.utils.helpers import format_cycles, parse_cycles, parse_generator_list
from tests.test_permgroup_case.data import (
    CENTER_CASES,
    CLASS_SIZE_CASES,
    DERIVED_CASES,
    NORMAL_CLOSURE_CASES,
    TEST_CASES,
)


def _group(text: str) -> PermGroup:
    return PermGroup(parse_generator_list(text))


def _sympy_order(group: PermGroup) -> int:
    gens = [SymPermutation([int(x) for x in g.images]) for g in group.generators]
    return int(SymPermutationGroup(gens).order())


@pytest.mark.parametrize("test_case", TEST_CASES, ids=lambda tc: tc["name"])
def test_order_matches_sympy(test_case, logger):
    group = _group(test_case["generators"])
    logger.info(f"{test_case['name']}: order {group.order}")
    assert group.order == test_case["order"]
    assert group.order == _sympy_order(group)


@pytest.mark.parametrize("test_case", TEST_CASES, ids=lambda tc: tc["name"])
def test_element_table_is_closed(test_case):
    group = _group(test_case["generators"])
    table = CayleyTable(group)
    assert table.size == group.order
    assert table.permutation(0).is_identity()
    for row in table.table:
        assert sorted(row.tolist()) == list(range(table.size))


def test_composition_applies_left_factor_first():
    p = parse_cycles("(1 2)", 3)
    q = parse_cycles("(2 3)", 3)
    # 0 -> 1 under p, then 1 -> 2 under q
    assert (p * q)(0) == 2
    assert np.array_equal((p * q).images, q.images[p.images])
    assert (p * q).inverse() == q.inverse() * p.inverse()


def test_cycle_notation_round_trip():
    perm = Permutation([1, 2, 0, 4, 3])
    assert format_cycles(perm) == "(1 2 3)(4 5)"
    assert parse_cycles("(1 2 3)(4 5)") == perm
    assert format_cycles(Permutation.identity(4)) == "()"


def test_invalid_permutation_rejected():
    with pytest.raises(PermutationError):
        Permutation([0, 0, 1])
    with pytest.raises(PermutationError):
        Permutation([1, 0]) * Permutation([0, 1, 2])


def test_membership():
    s5 = _group("(1 2); (1 2 3 4 5)")
    a5 = _group("(1 2 3); (1 2 3 4 5)")
    transposition = parse_cycles("(1 2)", 5)
    assert s5.contains(transposition)
    assert not a5.contains(transposition)
    assert a5.contains(parse_cycles("(1 2)(3 4)", 5))
    assert s5.is_normal_subgroup(a5)


@pytest.mark.parametrize("test_case", NORMAL_CLOSURE_CASES, ids=lambda tc: tc["name"])
def test_normal_closure(test_case):
    group = _group(test_case["generators"])
    seed = parse_cycles(test_case["seed"], group.degree)
    closure = group.normal_closure([seed])
    assert closure.order == test_case["order"]
    assert group.is_normal_subgroup(closure)


@pytest.mark.parametrize("test_case", DERIVED_CASES, ids=lambda tc: tc["name"])
def test_derived_subgroup(test_case):
    assert _group(test_case["generators"]).derived_subgroup().order == test_case["order"]


@pytest.mark.parametrize("test_case", CLASS_SIZE_CASES, ids=lambda tc: tc["name"])
def test_class_sizes(test_case):
    group = _group(test_case["generators"])
    assert group.elements.class_size_multiset() == test_case["sizes"]
    assert sum(size for _, size in group.conjugacy_classes()) == group.order


@pytest.mark.parametrize("test_case", CENTER_CASES, ids=lambda tc: tc["name"])
def test_center(test_case):
    assert _group(test_case["generators"]).center().order == test_case["order"]


def test_coset_action_quotient():
    s5 = _group("(1 2); (1 2 3 4 5)")
    a5 = _group("(1 2 3); (1 2 3 4 5)")
    quotient, projection = coset_action(s5, a5)
    assert quotient.order == 2
    assert projection.kernel().order == 60
    assert projection.is_surjective()


def test_coset_action_rejects_non_normal():
    s5 = _group("(1 2); (1 2 3 4 5)")
    s4 = PermGroup([parse_cycles("(1 2)", 5), parse_cycles("(1 2 3 4)", 5)])
    with pytest.raises(NotNormalError):
        coset_action(s5, s4)


def test_homomorphism_validation():
    c4 = _group("(1 2 3 4)")
    c2 = _group("(1 2)")
    GroupHom(c4, c2, [parse_cycles("(1 2)", 2)])
    c3 = _group("(1 2 3)")
    with pytest.raises(HomomorphismError):
        GroupHom(c3, c2, [parse_cycles("(1 2)", 2)])


def test_module_level_operations():
    gens = parse_generator_list("(1 2); (1 2 3 4 5)")
    s5 = group_from_generators(gens, name="S5")
    assert s5.label() == "S5"
    three_cycle = parse_cycles("(1 2 3)", 5)
    assert contains(s5, three_cycle)
    assert len(conjugacy_classes(s5)) == 7
    assert center(s5).order == 1
    assert derived_subgroup(s5).order == 60
    assert normal_closure(s5, [three_cycle]).order == 60
    with pytest.raises(PermutationError):
        group_from_generators([])


def test_cycle_type_and_parity():
    perm = parse_cycles("(1 2 3)(4 5)", 6)
    assert perm.cycle_type() == (3, 2)
    assert perm.order() == 6
    assert perm.parity() == 1
    assert parse_cycles("(1 2 3)", 3).parity() == 0
