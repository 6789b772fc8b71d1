"""
Tests for liens: construction, the pullback extension, neutrality, the
characteristic tower, extension counting over C2 and the A6 liens.
"""

from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from src.lien.counterexample import a6_counterexample
from src.lien.enumeration import enumerate_extensions_order2_gamma, solution_orbits
from src.lien.extension import (
    is_neutral,
    neutral_lift,
    pullback_extension,
    verify_lift_section,
    verify_section,
)
from src.lien.lien import (
    admissible_characteristic_subgroups,
    all_kappas,
    make_lien,
    quotient_lien,
)
from src.lien.tower import check_hypothesis, split_via_tower
from src.utils.exceptions import LienError
from tests.test_lien_case.data import ENUMERATION_CASES, INVALID_LIENS, KAPPA_COUNTS, TEST_CASES


def _case_id(tc) -> str:
    return f"{tc['f']}|{tc['gamma']}|{tc['kappa'] or 'trivial'}"


@pytest.mark.parametrize("test_case", TEST_CASES, ids=_case_id)
def test_neutrality(test_case, workbench, logger):
    lien = workbench.lien(test_case["f"], test_case["gamma"], test_case["kappa"])
    neutral, section = is_neutral(lien, workbench.deadline("neutrality"))
    logger.info(f"{lien.describe()}: neutral={neutral}")
    assert neutral == test_case["neutral"]
    if neutral:
        extension = pullback_extension(lien)
        assert verify_section(extension, section)
    else:
        assert section is None


@pytest.mark.parametrize("test_case", TEST_CASES, ids=_case_id)
def test_pullback_extension(test_case, workbench):
    lien = workbench.lien(test_case["f"], test_case["gamma"], test_case["kappa"])
    extension = pullback_extension(lien)
    assert extension.E.order == lien.F.order * lien.gamma.order
    kernel = extension.kernel_embedding.image()
    assert kernel.order == lien.F.order
    assert extension.E.is_normal_subgroup(kernel)
    for g in extension.E.generators:
        a, gamma_index = extension.split(g)
        assert lien.aut.class_of(a) == int(lien.kappa[gamma_index])


@pytest.mark.parametrize("test_case", TEST_CASES, ids=_case_id)
def test_tower_agrees_with_lift_search(test_case, workbench):
    lien = workbench.lien(test_case["f"], test_case["gamma"], test_case["kappa"])
    result = split_via_tower(lien, deadline=workbench.deadline("tower"))
    assert result.applicable == test_case["tower"]
    if result.applicable:
        assert result.split
        assert verify_lift_section(lien, result.section)
        assert result.trace
    else:
        assert result.reason


@pytest.mark.parametrize("test_case", INVALID_LIENS, ids=lambda tc: tc["name"])
def test_invalid_liens_rejected(test_case, workbench):
    with pytest.raises(LienError):
        workbench.lien(test_case["f"], test_case["gamma"], test_case["kappa"])


def test_centered_kernel_message(workbench):
    with pytest.raises(LienError, match="trivial center and hence"):
        workbench.lien("A5 x C2", "C2", "")


def test_make_lien_rejects_bad_kappa_table(workbench):
    F, aut = workbench.group("A5"), workbench.aut("A5")
    gamma, table = workbench.group("C3"), workbench.gamma_table("C3")
    with pytest.raises(LienError):
        make_lien(F, gamma, [0, 1, 1], aut=aut, gamma_table=table)
    with pytest.raises(LienError):
        make_lien(F, gamma, [0, 0], aut=aut, gamma_table=table)
    with pytest.raises(LienError):
        make_lien(F, gamma, [0, 5, 5], aut=aut, gamma_table=table)


def test_lien_labels(workbench):
    lien = workbench.lien("A6", "C2 x C2", "1:s,2:p")
    assert sorted(lien.kappa_labels()) == ["1", "m", "p", "s"]
    assert lien.generator_labels() == {1: "s", 2: "p"}
    assert "1:s" in lien.describe()
    assert not lien.is_trivial()
    assert workbench.lien("A6", "C2 x C2", "").is_trivial()


def test_pullback_of_a5_is_s5(workbench):
    lien = workbench.lien("A5", "C2", "1:s")
    extension = pullback_extension(lien)
    assert extension.E.elements.class_size_multiset() == [1, 10, 15, 20, 20, 24, 30]


def test_trivial_lien_pullback_is_direct_product(workbench):
    lien = workbench.lien("A5", "C2", "")
    extension = pullback_extension(lien)
    assert extension.E.center().order == 2


def test_tampered_section_fails_verification(workbench):
    lien = workbench.lien("A5", "C2", "1:s")
    lift = neutral_lift(lien)
    assert verify_lift_section(lien, lift.section)
    identity = np.arange(lien.aut.degree)
    assert not verify_lift_section(lien, [identity, identity])
    assert not verify_lift_section(lien, lift.section[:1])


@pytest.mark.parametrize("test_case", KAPPA_COUNTS, ids=lambda tc: f"{tc['f']}|{tc['gamma']}")
def test_all_kappas(test_case, workbench):
    aut = workbench.aut(test_case["f"])
    table = workbench.gamma_table(test_case["gamma"])
    kappas = all_kappas(aut, table)
    assert len(kappas) == test_case["count"]
    assert np.all(kappas[0] == 0)


@pytest.mark.parametrize("test_case", ENUMERATION_CASES, ids=lambda tc: f"{tc['f']}|{tc['kappa']}")
def test_unique_extension_class_over_c2(test_case, workbench):
    lien = workbench.lien(test_case["f"], "C2", test_case["kappa"])
    count = enumerate_extensions_order2_gamma(lien)
    cls = lien.aut.outer_classes[int(lien.kappa[1])]
    assert count.classes == 1
    assert count.solutions == lien.F.order
    assert count.neutral == test_case["neutral"]
    expected_neutral = cls.min_order_count if cls.min_order == 2 else 0
    assert count.neutral_solutions == expected_neutral


def test_enumeration_needs_gamma_of_order_two(workbench):
    with pytest.raises(LienError):
        enumerate_extensions_order2_gamma(workbench.lien("A5", "C4", ""))


@pytest.mark.parametrize("test_case", ENUMERATION_CASES, ids=lambda tc: f"{tc['f']}|{tc['kappa']}")
def test_solutions_are_a_union_of_orbits(test_case, workbench):
    lien = workbench.lien(test_case["f"], "C2", test_case["kappa"])
    valid, z_of, labels = solution_orbits(lien)
    for label in np.unique(labels[valid]):
        orbit = labels == label
        # every member of an orbit that meets the solutions is a solution
        assert np.all(valid[orbit])
    assert np.all(z_of[valid] >= 0)
    assert np.all(z_of[~valid] == -1)
    # raw solutions regrouped by orbit match the reported classes
    count = enumerate_extensions_order2_gamma(lien)
    sizes = np.unique(labels[valid], return_counts=True)[1]
    assert int(sizes.sum()) == count.solutions
    assert sizes.size == count.classes


def test_admissible_subgroups_and_quotient(workbench):
    lien = workbench.lien("A5 x S3", "C2", "1:s")
    admissible = admissible_characteristic_subgroups(lien)
    assert [n.order for n in admissible] == [6, 60]
    quotient = quotient_lien(lien, admissible[0].group)
    assert quotient.lien.F.order == 60
    assert quotient.lien.kappa_labels() == ["1", "s"]
    assert quotient.preimage(0) == 0
    assert quotient.induce(np.arange(lien.F.order)).tolist() == list(range(60))


def test_quotient_lien_rejects_non_characteristic(workbench):
    lien = workbench.lien("A5 x A5", "C2", "1:swap")
    factor = workbench.group("A5 x A5").normal_closure([workbench.group("A5 x A5").generators[0]])
    assert factor.order == 60
    with pytest.raises(LienError):
        quotient_lien(lien, factor)


def test_tower_induction_through_solvable_layer(workbench):
    lien = workbench.lien("A5 x S3", "C2", "1:s")
    refused = split_via_tower(lien)
    assert not refused.applicable
    assert "anti-solvable" in refused.reason
    result = split_via_tower(lien, require_hypothesis=False)
    assert result.applicable and result.split
    assert verify_lift_section(lien, result.section)
    assert any(line.lstrip().startswith("quotient") for line in result.trace)


def test_a6_counterexample(workbench):
    report = a6_counterexample(workbench.aut("A6"), workbench.deadline("A6"))
    assert report["out_order"] == 4
    assert report["non_neutral_class"] == "m"
    by_label = {c["label"]: c for c in report["classes"]}
    assert set(by_label) == {"s", "p", "m"}
    assert not by_label["m"]["involution_in_coset"]
    assert by_label["m"]["min_order_in_coset"] == 4
    assert by_label["s"]["section_witness"] is not None
    assert by_label["m"]["section_witness"] is None
    assert all(c["extension_classes"] == 1 for c in report["classes"])


def test_hypothesis_check_shared_across_threads(workbench):
    liens = [workbench.lien("A5 x S3", "C2", "1:s"), workbench.lien("A5", "C2", "1:s")] * 4
    with ThreadPoolExecutor(max_workers=4) as pool:
        reasons = list(pool.map(check_hypothesis, liens))
    assert all("anti-solvable" in r for r in reasons[0::2])
    assert all(r is None for r in reasons[1::2])
