"""
Permutation group cases: 1-indexed generator lists with known orders.
"""

TEST_CASES = [
    {"name": "A5", "generators": "(1 2 3); (1 2 3 4 5)", "order": 60},
    {"name": "S5", "generators": "(1 2); (1 2 3 4 5)", "order": 120},
    {"name": "A6", "generators": "(1 2 3); (2 3 4 5 6)", "order": 360},
    {"name": "D8", "generators": "(1 2 3 4); (1 3)", "order": 8},
    {"name": "C6", "generators": "(1 2 3 4 5 6)", "order": 6},
    {"name": "C2xC2", "generators": "(1 2); (3 4)", "order": 4},
    {"name": "identity", "generators": "()", "order": 1},
]

# (group generators, normal closure seed, expected closure order)
NORMAL_CLOSURE_CASES = [
    {"name": "3-cycle in S5", "generators": "(1 2); (1 2 3 4 5)", "seed": "(1 2 3)", "order": 60},
    {"name": "transposition in S5", "generators": "(1 2); (1 2 3 4 5)", "seed": "(1 2)", "order": 120},
    {"name": "reflection in D8", "generators": "(1 2 3 4); (1 3)", "seed": "(1 3)", "order": 4},
]

DERIVED_CASES = [
    {"name": "S5", "generators": "(1 2); (1 2 3 4 5)", "order": 60},
    {"name": "A5", "generators": "(1 2 3); (1 2 3 4 5)", "order": 60},
    {"name": "D8", "generators": "(1 2 3 4); (1 3)", "order": 2},
    {"name": "C6", "generators": "(1 2 3 4 5 6)", "order": 1},
]

CLASS_SIZE_CASES = [
    {"name": "A5", "generators": "(1 2 3); (1 2 3 4 5)", "sizes": [1, 12, 12, 15, 20]},
    {"name": "S5", "generators": "(1 2); (1 2 3 4 5)", "sizes": [1, 10, 15, 20, 20, 24, 30]},
    {"name": "D8", "generators": "(1 2 3 4); (1 3)", "sizes": [1, 1, 2, 2, 2]},
]

CENTER_CASES = [
    {"name": "A5", "generators": "(1 2 3); (1 2 3 4 5)", "order": 1},
    {"name": "D8", "generators": "(1 2 3 4); (1 3)", "order": 2},
    {"name": "C6", "generators": "(1 2 3 4 5 6)", "order": 6},
]
