"""
The claims reproduced by `kernelsplit reproduce`.
"""

from typing import List

from src.config.constants import (
    AUT_SPLIT_CLAIMS,
    CROSSCHECK_FIELDS,
    SWEEP_GAMMAS,
    SWEEP_KERNELS,
    UNIQUENESS_KERNELS,
)
from src.evaluation.claim_case import ClaimCase, ClaimKind

# spec -> expected anti-solvable verdict
STRUCTURE_CLAIMS = {
    "S5": False,
    "A5 x A5": True,
    "S5 x C2": False,
    "A5 wr C2": False,
}


def get_claim_cases() -> List[ClaimCase]:
    """
    Return every claim, in canonical key order.

    Returns:
        List[ClaimCase]: aut-split verdicts, the Lie-type cross-check, the A6
            counterexample, uniqueness at Gamma = C2, the lien sweep and the
            composition-series invariants
    """
    cases: List[ClaimCase] = []
    for spec, expected in AUT_SPLIT_CLAIMS.items():
        cases.append(ClaimCase(
            key=f"aut_split:{spec}",
            kind=ClaimKind.AUT_SPLIT,
            params={"spec": spec},
            expected=expected,
            description=f"Inn({spec}) {'has' if expected else 'has no'} complement in Aut({spec})",
        ))
    for q in CROSSCHECK_FIELDS:
        cases.append(ClaimCase(
            key=f"lie_crosscheck:{q:02d}",
            kind=ClaimKind.LIE_CROSSCHECK,
            params={"q": q},
            description=f"closed form for A1({q}) matches the complement search on PSL(2,{q})",
        ))
    cases.append(ClaimCase(
        key="counterexample:A6",
        kind=ClaimKind.COUNTEREXAMPLE,
        expected="m",
        description="exactly one nontrivial A6 lien over C2 is non-neutral, the m-type one",
    ))
    for spec in UNIQUENESS_KERNELS:
        cases.append(ClaimCase(
            key=f"uniqueness:{spec}",
            kind=ClaimKind.UNIQUENESS,
            params={"spec": spec},
            expected=1,
            description=f"every nontrivial lien ({spec}, C2, kappa) has exactly one extension class",
        ))
    for f_spec in SWEEP_KERNELS:
        for gamma_spec in SWEEP_GAMMAS:
            cases.append(ClaimCase(
                key=f"sweep:{f_spec}|{gamma_spec}",
                kind=ClaimKind.SWEEP,
                params={"f": f_spec, "gamma": gamma_spec},
                description=f"every lien ({f_spec}, {gamma_spec}, kappa) is neutral and splits along the tower",
            ))
    for spec, expected in STRUCTURE_CLAIMS.items():
        cases.append(ClaimCase(
            key=f"structure:{spec}",
            kind=ClaimKind.STRUCTURE,
            params={"spec": spec},
            expected=expected,
            description=f"composition factors of {spec} do not depend on the series; anti-solvable={expected}",
        ))
    return sorted(cases, key=lambda c: c.key)
