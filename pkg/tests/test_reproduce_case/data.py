"""
A quick subset of the reproduction claims, plus one deliberately wrong claim.
"""

from src.evaluation.claim_case import ClaimCase, ClaimKind

TEST_CASES = [
    ClaimCase(key="aut_split:A5", kind=ClaimKind.AUT_SPLIT, params={"spec": "A5"}, expected=True),
    ClaimCase(key="aut_split:A6", kind=ClaimKind.AUT_SPLIT, params={"spec": "A6"}, expected=False),
    ClaimCase(key="lie_crosscheck:05", kind=ClaimKind.LIE_CROSSCHECK, params={"q": 5}),
    ClaimCase(key="lie_crosscheck:09", kind=ClaimKind.LIE_CROSSCHECK, params={"q": 9}),
    ClaimCase(key="uniqueness:A5", kind=ClaimKind.UNIQUENESS, params={"spec": "A5"}, expected=1),
    ClaimCase(key="sweep:A5|C2", kind=ClaimKind.SWEEP, params={"f": "A5", "gamma": "C2"}),
    ClaimCase(key="sweep:A5|S3", kind=ClaimKind.SWEEP, params={"f": "A5", "gamma": "S3"}),
    ClaimCase(key="structure:S5", kind=ClaimKind.STRUCTURE, params={"spec": "S5"}, expected=False),
    ClaimCase(key="structure:A5 x A5", kind=ClaimKind.STRUCTURE, params={"spec": "A5 x A5"}, expected=True),
    ClaimCase(key="counterexample:A6", kind=ClaimKind.COUNTEREXAMPLE, expected="m"),
]

WRONG_CLAIM = ClaimCase(
    key="aut_split:A6",
    kind=ClaimKind.AUT_SPLIT,
    params={"spec": "A6"},
    expected=True,
    description="deliberately wrong: A6 is not aut-split",
)
