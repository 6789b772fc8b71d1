"""
A6: the lien over C2 given by the outer class with no involution in its
coset has a unique extension class, and that class is not neutral.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from src.autsplit.automorphisms import AutData, automorphism_group
from src.catalog.constructors import alternating, cyclic
from src.lien.enumeration import enumerate_extensions_order2_gamma
from src.lien.extension import neutral_lift, verify_lift_section
from src.lien.lien import gamma_cayley_table, make_lien
from src.utils.exceptions import ClaimFailed
from src.utils.helpers import Deadline, format_cycles
from src.utils.logger import logger


def a6_counterexample(aut: Optional[AutData] = None, deadline: Optional[Deadline] = None) -> dict:
    """
    Build the three nontrivial liens (A6, C2, kappa) and report neutrality.

    Args:
        aut: precomputed Aut(A6)
        deadline: cooperative timeout for the searches

    Returns:
        dict: per-class labels, minimal coset orders, neutrality and
            extension counts, plus the non-neutral class label

    Raises:
        ClaimFailed: if the classes do not behave as stated in the module docstring
    """
    F = aut.base_group if aut is not None else alternating(6)
    aut = aut or automorphism_group(F, deadline)
    gamma = cyclic(2)
    gamma_table = gamma_cayley_table(gamma)

    if aut.out_order != 4:
        raise ClaimFailed("Out(A6) has order 4", f"found {aut.out_order}")

    classes = []
    for cls in aut.outer_classes[1:]:
        kappa = np.array([0, cls.index], dtype=np.int64)
        lien = make_lien(F, gamma, kappa, aut=aut, gamma_table=gamma_table)
        lift = neutral_lift(lien, deadline)
        if lift.found and not verify_lift_section(lien, lift.section):
            raise ClaimFailed("section witness re-verifies", f"class {cls.label}")
        count = enumerate_extensions_order2_gamma(lien)
        witness = None
        if lift.found:
            witness = format_cycles(lift.generator_images()[0])
        classes.append({
            "label": cls.label,
            "min_order_in_coset": cls.min_order,
            "involution_in_coset": cls.min_order <= 2,
            "neutral": lift.found,
            "extension_classes": count.classes,
            "extension_solutions": count.solutions,
            "section_witness": witness,
        })
        logger.info(f"A6 class {cls.label}: min order {cls.min_order}, neutral={lift.found}, "
                    f"{count.classes} extension class(es)")

    non_neutral = [c for c in classes if not c["neutral"]]
    if len(non_neutral) != 1:
        raise ClaimFailed("exactly one non-neutral A6 lien over C2", f"found {len(non_neutral)}")
    bad = non_neutral[0]
    if bad["label"] != "m":
        raise ClaimFailed("the non-neutral class is the m-type class", f"got {bad['label']}")
    if bad["involution_in_coset"]:
        raise ClaimFailed("non-neutral class has no involution in its coset",
                          f"class {bad['label']} has minimal order {bad['min_order_in_coset']}")
    for c in classes:
        if c["extension_classes"] != 1:
            raise ClaimFailed("unique extension class", f"class {c['label']} has {c['extension_classes']}")
        if c["neutral"] and not c["involution_in_coset"]:
            raise ClaimFailed("neutral classes contain an involution", f"class {c['label']}")

    return {
        "group": F.label(),
        "out_order": aut.out_order,
        "classes": classes,
        "non_neutral_class": bad["label"],
    }
