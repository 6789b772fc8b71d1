"""
Tests for Aut(F) computation, outer classes and the complement search.
"""

import numpy as np
import pytest

from src.autsplit.lifting import find_lift, is_aut_split, min_order_in_coset, verify_complement
from src.catalog.constructors import cyclic
from src.groups.cayley import CayleyTable
from src.utils.exceptions import HomomorphismError
from tests.test_autsplit_case.data import A6_MIN_ORDERS, TEST_CASES


@pytest.mark.parametrize("test_case", TEST_CASES, ids=lambda tc: tc["spec"])
def test_automorphism_group_orders(test_case, workbench, logger):
    aut = workbench.aut(test_case["spec"])
    logger.info(f"{test_case['spec']}: {aut.summary()}")
    assert aut.aut_group.order == test_case["aut_order"]
    assert aut.out_order == test_case["out_order"]
    assert aut.inn.order * aut.out_order == aut.aut_group.order
    assert aut.outer_classes[0].label == "1"


@pytest.mark.parametrize("test_case", TEST_CASES, ids=lambda tc: tc["spec"])
def test_aut_split_verdict(test_case, workbench):
    aut = workbench.aut(test_case["spec"])
    split, witness = is_aut_split(aut)
    assert split == test_case["aut_split"]
    if split:
        assert verify_complement(aut, witness)
    else:
        assert witness is None


@pytest.mark.parametrize("test_case", TEST_CASES, ids=lambda tc: tc["spec"])
def test_generators_are_automorphisms(test_case, workbench):
    aut = workbench.aut(test_case["spec"])
    for g in aut.aut_group.generators:
        assert aut.is_automorphism(g.images)


def test_out_table_is_a_group(workbench):
    aut = workbench.aut("A6")
    k = aut.out_order
    table = aut.out_table
    assert np.array_equal(table[0], np.arange(k))
    for row in table:
        assert sorted(row.tolist()) == list(range(k))
    # Out(A6) is a Klein four group
    assert all(int(table[a, a]) == 0 for a in range(k))


def test_a6_outer_class_labels(workbench):
    aut = workbench.aut("A6")
    labels = {cls.label: cls.min_order for cls in aut.outer_classes}
    assert labels == A6_MIN_ORDERS
    m = aut.out_class("m")
    assert aut.min_order_in_coset(m) == 4
    assert aut.out_class(f"o{m.index}") is m
    with pytest.raises(KeyError):
        aut.out_class("q")


def test_a6_labels_follow_coset_scan_order(workbench):
    aut = workbench.aut("A6")
    nontrivial = aut.outer_classes[1:]
    ranked = sorted(nontrivial, key=lambda c: (c.min_order, c.index))
    assert [c.label for c in ranked] == ["s", "p", "m"]
    # s and p tie on minimal order, so scan position alone separates them
    s, p = aut.out_class("s"), aut.out_class("p")
    assert s.min_order == p.min_order == 2
    assert s.index < p.index


def test_conjugation_composes_left_to_right(workbench):
    aut = workbench.aut("A5")
    T = aut.table.table
    u, v = 5, 17
    # c_u then c_v is c_{uv}
    assert np.array_equal(aut.conj(v)[aut.conj(u)], aut.conj(int(T[u, v])))
    assert aut.inner_element(aut.conj(u)) is not None


def test_coset_elements_stay_in_their_class(workbench):
    aut = workbench.aut("A6")
    for cls in aut.outer_classes:
        rep = aut.representative(cls.index)
        for f in (0, 7, 100):
            element = aut.coset_element(rep, f)
            assert aut.is_automorphism(element)
            assert aut.class_of(element) == cls.index


def test_lift_of_single_class(workbench):
    aut = workbench.aut("A6")
    c2 = CayleyTable(cyclic(2)).table
    for cls in aut.outer_classes[1:]:
        result = find_lift(aut, c2, np.array([0, cls.index]))
        # a lift of an order-2 class is an involution in its coset
        assert result.found == (cls.min_order == 2)


def test_lift_rejects_non_homomorphism(workbench):
    aut = workbench.aut("A5")
    c3 = CayleyTable(cyclic(3)).table
    with pytest.raises(HomomorphismError):
        find_lift(aut, c3, np.array([0, 1, 1]))


def test_min_order_in_coset_matches_class_statistics(workbench):
    aut = workbench.aut("PSL(2,7)")
    for cls in aut.outer_classes:
        assert min_order_in_coset(aut, cls) == cls.min_order
    assert min_order_in_coset(aut, aut.out_class("s")) == 2
