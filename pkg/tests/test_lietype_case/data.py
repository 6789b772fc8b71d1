"""
Lie-type verdict cases: (family, rank, p, m) and the expected outcome.
"""

TEST_CASES = [
    {"family": "A", "rank": 1, "p": 3, "m": 2, "aut_split": False, "d": 2, "branch": "chevalley"},
    {"family": "A", "rank": 1, "p": 2, "m": 3, "aut_split": True, "d": 1, "branch": "chevalley"},
    {"family": "A", "rank": 1, "p": 5, "m": 2, "aut_split": False, "d": 2, "branch": "chevalley"},
    {"family": "A", "rank": 1, "p": 7, "m": 1, "aut_split": True, "d": 2, "branch": "chevalley"},
    {"family": "A", "rank": 2, "p": 7, "m": 1, "aut_split": True, "d": 3, "branch": "chevalley"},
    {"family": "A", "rank": 2, "p": 2, "m": 6, "aut_split": False, "d": 3, "branch": "chevalley"},
    {"family": "D", "rank": 4, "p": 3, "m": 1, "aut_split": True, "d": 4, "branch": "chevalley_d"},
    {"family": "D", "rank": 4, "p": 3, "m": 2, "aut_split": False, "d": 4, "branch": "chevalley_d"},
    {"family": "2D", "rank": 4, "p": 3, "m": 1, "aut_split": False, "d": 2, "branch": "twisted_d"},
    {"family": "2D", "rank": 5, "p": 3, "m": 1, "aut_split": True, "d": 4, "branch": "twisted_d"},
    {"family": "2D", "rank": 4, "p": 2, "m": 1, "aut_split": True, "d": 1, "branch": "twisted_d"},
    {"family": "E6", "rank": None, "p": 7, "m": 3, "aut_split": False, "d": 3, "branch": "chevalley"},
    {"family": "E8", "rank": None, "p": 5, "m": 4, "aut_split": True, "d": 1, "branch": "chevalley"},
    {"family": "2A", "rank": 2, "p": 2, "m": 3, "aut_split": False, "d": 3, "branch": "twisted"},
    {"family": "2B2", "rank": None, "p": 2, "m": 3, "aut_split": True, "d": 1, "branch": "twisted"},
]

INVALID_CASES = [
    {"name": "A1(2) not simple", "family": "A", "rank": 1, "p": 2, "m": 1},
    {"name": "2B2 with even m", "family": "2B2", "rank": None, "p": 2, "m": 2},
    {"name": "p not prime", "family": "A", "rank": 1, "p": 4, "m": 1},
    {"name": "rank too small", "family": "D", "rank": 3, "p": 3, "m": 1},
    {"name": "m zero", "family": "B", "rank": 2, "p": 3, "m": 0},
    {"name": "2G2 needs p=3", "family": "2G2", "rank": None, "p": 2, "m": 3},
]

# q -> the closed form for A1(q) agrees with the complement search on PSL(2,q)
CROSSCHECK_FIELDS = [4, 5, 7, 8, 9]
