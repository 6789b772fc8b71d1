"""
Lien cases: (F, Gamma, generator:label pairs) with the expected neutrality
and whether the characteristic-tower hypothesis holds for F.
"""

TEST_CASES = [
    {"f": "A5", "gamma": "C2", "kappa": "", "neutral": True, "tower": True},
    {"f": "A5", "gamma": "C2", "kappa": "1:s", "neutral": True, "tower": True},
    {"f": "A5", "gamma": "S3", "kappa": "1:s", "neutral": True, "tower": True},
    {"f": "A5", "gamma": "C2 x C2", "kappa": "1:s,2:s", "neutral": True, "tower": True},
    {"f": "PSL(2,7)", "gamma": "C2", "kappa": "1:s", "neutral": True, "tower": True},
    {"f": "A5 x A5", "gamma": "C2", "kappa": "1:swap", "neutral": True, "tower": True},
    {"f": "A6", "gamma": "C2", "kappa": "1:s", "neutral": True, "tower": False},
    {"f": "A6", "gamma": "C2", "kappa": "1:p", "neutral": True, "tower": False},
    {"f": "A6", "gamma": "C2", "kappa": "1:m", "neutral": False, "tower": False},
    {"f": "A6", "gamma": "C4", "kappa": "1:m", "neutral": True, "tower": False},
    {"f": "A6", "gamma": "C2 x C2", "kappa": "1:s,2:p", "neutral": False, "tower": False},
]

INVALID_LIENS = [
    {"name": "centered kernel", "f": "A5 x C2", "gamma": "C2", "kappa": "1:s"},
    {"name": "not a homomorphism", "f": "A5", "gamma": "C3", "kappa": "1:s"},
    {"name": "unknown label", "f": "A5", "gamma": "C2", "kappa": "1:q"},
    {"name": "generator out of range", "f": "A5", "gamma": "C2", "kappa": "2:s"},
    {"name": "malformed pair", "f": "A5", "gamma": "C2", "kappa": "1=s"},
    {"name": "no swap class", "f": "A5", "gamma": "C2", "kappa": "1:swap"},
]

# (F, Gamma) -> number of homomorphisms Gamma -> Out(F)
KAPPA_COUNTS = [
    {"f": "A5", "gamma": "C2", "count": 2},
    {"f": "A5", "gamma": "C3", "count": 1},
    {"f": "A6", "gamma": "C2", "count": 4},
    {"f": "A6", "gamma": "C2 x C2", "count": 16},
    {"f": "A6", "gamma": "S3", "count": 4},
]

# Gamma = C2 liens whose extension classes are enumerated
ENUMERATION_CASES = [
    {"f": "A5", "kappa": "1:s", "neutral": True},
    {"f": "PSL(2,7)", "kappa": "1:s", "neutral": True},
    {"f": "A6", "kappa": "1:s", "neutral": True},
    {"f": "A6", "kappa": "1:p", "neutral": True},
    {"f": "A6", "kappa": "1:m", "neutral": False},
]
