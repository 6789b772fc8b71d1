"""
Automorphism group cases: |Aut(F)|, |Out(F)| and the aut-split verdict.
"""

TEST_CASES = [
    {"spec": "A5", "aut_order": 120, "out_order": 2, "aut_split": True},
    {"spec": "S4", "aut_order": 24, "out_order": 1, "aut_split": True},
    {"spec": "S5", "aut_order": 120, "out_order": 1, "aut_split": True},
    {"spec": "PSL(2,7)", "aut_order": 336, "out_order": 2, "aut_split": True},
    {"spec": "PSL(2,8)", "aut_order": 1512, "out_order": 3, "aut_split": True},
    {"spec": "PSL(2,11)", "aut_order": 1320, "out_order": 2, "aut_split": True},
    {"spec": "A6", "aut_order": 1440, "out_order": 4, "aut_split": False},
    {"spec": "A5 x A5", "aut_order": 28800, "out_order": 8, "aut_split": True},
]

# label -> smallest element order in the coset of that Out(A6) class
A6_MIN_ORDERS = {"1": 1, "s": 2, "p": 2, "m": 4}
