"""
Constants and enumerations for kernelsplit.

This module defines:
- CLI exit codes
- Lie-type families and classification branches
- Simple-group tags used in composition factor reports
- Field polynomials and the PSL(2,q) whitelist
- The catalog swept by the lien reproduction
"""

from enum import Enum, IntEnum


# ============================================================================
# EXIT CODES
# ============================================================================

class ExitCode(IntEnum):
    """Process exit codes of the kernelsplit CLI."""
    SUCCESS = 0
    ERROR = 1              # anything not classified below
    PARSE_ERROR = 2
    BOUND_EXCEEDED = 3
    CLAIM_FAILED = 4


# ============================================================================
# LIE-TYPE FAMILIES
# ============================================================================

class LieFamily(Enum):
    """Families of finite simple groups of Lie type (value = CLI spelling)."""
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"
    F4 = "F4"
    G2 = "G2"
    TWISTED_A = "2A"
    TWISTED_B2 = "2B2"
    TWISTED_D = "2D"
    TRIALITY_D4 = "3D4"
    TWISTED_E6 = "2E6"
    TWISTED_F4 = "2F4"
    TWISTED_G2 = "2G2"

    @property
    def is_twisted(self) -> bool:
        return self.value[0] in "23"

    @property
    def has_rank(self) -> bool:
        return self in RANKED_FAMILIES


RANKED_FAMILIES = frozenset({
    LieFamily.A, LieFamily.B, LieFamily.C, LieFamily.D,
    LieFamily.TWISTED_A, LieFamily.TWISTED_D,
})

# Smallest admissible rank per ranked family
MIN_RANK = {
    LieFamily.A: 1,
    LieFamily.B: 2,
    LieFamily.C: 3,   # C2 coincides with B2
    LieFamily.D: 4,
    LieFamily.TWISTED_A: 2,
    LieFamily.TWISTED_D: 4,
}

# Implicit rank for the exceptional families (reported only)
FIXED_RANK = {
    LieFamily.E6: 6,
    LieFamily.E7: 7,
    LieFamily.E8: 8,
    LieFamily.F4: 4,
    LieFamily.G2: 2,
    LieFamily.TWISTED_B2: 2,
    LieFamily.TRIALITY_D4: 4,
    LieFamily.TWISTED_E6: 6,
    LieFamily.TWISTED_F4: 4,
    LieFamily.TWISTED_G2: 2,
}


class LieBranch(Enum):
    """Which rule of the aut-split classification decided a verdict."""
    CHEVALLEY = "chevalley"            # untwisted, not D
    CHEVALLEY_D = "chevalley_d"        # D_l(q)
    TWISTED = "twisted"                # twisted, not 2D
    TWISTED_D = "twisted_d"            # 2D_l(q)


# ============================================================================
# SIMPLE GROUP TAGS
# ============================================================================

class SimpleTag(Enum):
    """Kinds of names attached to composition factors."""
    CYCLIC = "Cyclic"
    ALT = "Alt"
    PSL2 = "PSL2"
    UNKNOWN = "Unknown"


# ============================================================================
# FINITE FIELDS
# ============================================================================

# Irreducible polynomials, highest degree first, for the non-prime fields
FIELD_POLYNOMIALS = {
    4: (2, [1, 1, 1]),       # x^2 + x + 1 over F_2
    8: (2, [1, 0, 1, 1]),    # x^3 + x + 1 over F_2
    9: (3, [1, 0, 1]),       # x^2 + 1 over F_3
}

PSL2_WHITELIST = (4, 5, 7, 8, 9, 11, 13)


# ============================================================================
# OUTER CLASS LABELS
# ============================================================================

TRIVIAL_OUTER_LABEL = "1"
SWAP_ALIAS = "swap"
# Labels for a Klein four Out(F) with one involution-free coset
KLEIN_OUTER_LABELS = ("s", "p", "m")


# ============================================================================
# REPRODUCTION CATALOG
# ============================================================================

SWEEP_KERNELS = ("A5", "PSL(2,7)", "A5 x A5")
SWEEP_GAMMAS = ("C2", "C3", "C2 x C2", "S3")
UNIQUENESS_KERNELS = ("A5", "A6", "PSL(2,7)")
AUT_SPLIT_CLAIMS = {"A5": True, "A7": True, "A6": False}
CROSSCHECK_FIELDS = (4, 5, 7, 8, 9, 11)
