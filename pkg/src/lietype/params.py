"""
Parameters of finite simple groups of Lie type and the diagonal order d.

The d values are the standard orders of the diagonal outer automorphism
group (automorphisms induced by diagonal matrices modulo inner ones).
Twisted families use q for the field F_q with the group defined relative to
F_{q^2} (F_{q^3} for 3D4); m is the exponent in q = p^m.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

import galois

from src.config.constants import FIXED_RANK, MIN_RANK, LieFamily
from src.utils.exceptions import LieParamsError

# (family, rank or None, q) combinations that are not simple
_NOT_SIMPLE = {
    (LieFamily.A, 1, 2),
    (LieFamily.A, 1, 3),
    (LieFamily.B, 2, 2),
    (LieFamily.G2, None, 2),
    (LieFamily.TWISTED_A, 2, 2),
    (LieFamily.TWISTED_B2, None, 2),
    (LieFamily.TWISTED_G2, None, 3),
    (LieFamily.TWISTED_F4, None, 2),
}


def parse_family(text: str) -> LieFamily:
    normalized = text.strip().upper().replace("^", "").replace("_", "")
    for family in LieFamily:
        if family.value.upper() == normalized:
            return family
    raise LieParamsError(f"Unknown Lie family '{text}'")


@dataclass(frozen=True)
class LieTypeParams:
    """
    A finite simple group of Lie type X_l(q), q = p^m.

    Attributes:
        family: Lie family
        rank: l for the classical families, None for the exceptional ones
        p: prime characteristic
        m: exponent, q = p^m
    """
    family: LieFamily
    rank: Optional[int]
    p: int
    m: int

    def __post_init__(self):
        if not isinstance(self.family, LieFamily):
            raise LieParamsError(f"family must be a LieFamily, got {self.family!r}")
        if self.m < 1:
            raise LieParamsError(f"m must be >= 1, got {self.m}")
        if self.p < 2 or not galois.is_prime(self.p):
            raise LieParamsError(f"p must be prime, got {self.p}")
        if self.family.has_rank:
            if self.rank is None or self.rank < MIN_RANK[self.family]:
                raise LieParamsError(
                    f"{self.family.value} needs rank >= {MIN_RANK[self.family]}, got {self.rank}"
                )
        elif self.rank is not None and self.rank != FIXED_RANK[self.family]:
            raise LieParamsError(f"{self.family.value} has fixed rank {FIXED_RANK[self.family]}, got {self.rank}")

        if self.family == LieFamily.TWISTED_B2 and (self.p != 2 or self.m % 2 == 0):
            raise LieParamsError("2B2(q) needs q = 2^m with m odd")
        if self.family == LieFamily.TWISTED_F4 and (self.p != 2 or self.m % 2 == 0):
            raise LieParamsError("2F4(q) needs q = 2^m with m odd")
        if self.family == LieFamily.TWISTED_G2 and (self.p != 3 or self.m % 2 == 0):
            raise LieParamsError("2G2(q) needs q = 3^m with m odd")

        key_rank = self.rank if self.family.has_rank else None
        if (self.family, key_rank, self.q) in _NOT_SIMPLE:
            raise LieParamsError(f"{self.name} is not simple")

    @property
    def q(self) -> int:
        return self.p ** self.m

    @property
    def name(self) -> str:
        family = self.family.value
        if self.family.has_rank:
            return f"{family}{self.rank}({self.q})"
        return f"{family}({self.q})"

    @property
    def common_name(self) -> Optional[str]:
        if self.family == LieFamily.A:
            return f"PSL({self.rank + 1},{self.q})"
        if self.family == LieFamily.TWISTED_A:
            return f"PSU({self.rank + 1},{self.q})"
        if self.family == LieFamily.TWISTED_B2:
            return f"Sz({self.q})"
        return None


def diagonal_order_d(params: LieTypeParams) -> int:
    """Order of the diagonal automorphisms modulo inner automorphisms."""
    q, family, rank = params.q, params.family, params.rank
    if family == LieFamily.A:
        return gcd(rank + 1, q - 1)
    if family in (LieFamily.B, LieFamily.C, LieFamily.E7):
        return gcd(2, q - 1)
    if family == LieFamily.D:
        return gcd(4, q ** rank - 1)
    if family == LieFamily.E6:
        return gcd(3, q - 1)
    if family == LieFamily.TWISTED_A:
        return gcd(rank + 1, q + 1)
    if family == LieFamily.TWISTED_D:
        return gcd(4, q ** rank + 1)
    if family == LieFamily.TWISTED_E6:
        return gcd(3, q + 1)
    # E8, F4, G2, 2B2, 2F4, 2G2, 3D4
    return 1
