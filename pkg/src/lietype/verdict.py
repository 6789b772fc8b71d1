"""
Closed-form aut-split criterion for simple groups of Lie type.

F is aut-split iff one of:
- F untwisted, not D_l(q), and gcd((q-1)/d, d, m) = 1
- F = D_l(q) and gcd((q^l-1)/d, d, m) = 1
- F twisted, not 2D_l(q), and gcd((q+1)/d, d, m) = 1
- F = 2D_l(q) and l is odd or p = 2
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Tuple

import galois

from src.autsplit.automorphisms import automorphism_group
from src.autsplit.lifting import is_aut_split
from src.catalog.constructors import psl2
from src.config.constants import LieBranch, LieFamily
from src.lietype.params import LieTypeParams, diagonal_order_d
from src.utils.exceptions import LieParamsError
from src.utils.logger import logger


@dataclass(frozen=True)
class LieVerdict:
    """
    Attributes:
        aut_split: the verdict
        d: diagonal order used
        triple: the three gcd arguments, None for the 2D_l branch
        branch: rule that decided
    """
    params: LieTypeParams
    aut_split: bool
    d: int
    triple: Optional[Tuple[int, int, int]]
    branch: LieBranch

    def to_dict(self) -> dict:
        return {
            "group": self.params.name,
            "common_name": self.params.common_name,
            "q": self.params.q,
            "d": self.d,
            "triple": list(self.triple) if self.triple else None,
            "branch": self.branch.value,
            "aut_split": self.aut_split,
        }


def select_branch(params: LieTypeParams) -> LieBranch:
    if params.family == LieFamily.D:
        return LieBranch.CHEVALLEY_D
    if params.family == LieFamily.TWISTED_D:
        return LieBranch.TWISTED_D
    return LieBranch.TWISTED if params.family.is_twisted else LieBranch.CHEVALLEY


def is_aut_split_lie(params: LieTypeParams) -> LieVerdict:
    d = diagonal_order_d(params)
    q, m = params.q, params.m
    branch = select_branch(params)

    if branch == LieBranch.TWISTED_D:
        verdict = LieVerdict(params, params.rank % 2 == 1 or params.p == 2, d, None, branch)
        logger.debug(f"{params.name}: branch {branch.value}, aut_split={verdict.aut_split}")
        return verdict

    if branch == LieBranch.CHEVALLEY:
        numerator = q - 1
    elif branch == LieBranch.CHEVALLEY_D:
        numerator = q ** params.rank - 1
    else:
        numerator = q + 1
    if numerator % d:
        raise LieParamsError(f"{params.name}: d={d} does not divide {numerator}")
    triple = (numerator // d, d, m)
    verdict = LieVerdict(params, gcd(*triple) == 1, d, triple, branch)
    logger.debug(f"{params.name}: branch {branch.value}, triple {triple}, aut_split={verdict.aut_split}")
    return verdict


def crosscheck_psl2(q: int, deadline=None) -> bool:
    """
    Compare the closed form for A1(q) with a complement search on PSL(2,q).

    Raises:
        GroupSpecParseError: if q is outside the PSL(2,q) whitelist
    """
    group = psl2(q)
    primes, exponents = galois.factors(q)
    verdict = is_aut_split_lie(LieTypeParams(LieFamily.A, 1, int(primes[0]), int(exponents[0])))
    searched, _ = is_aut_split(automorphism_group(group, deadline), deadline)
    agree = verdict.aut_split == searched
    logger.info(f"PSL(2,{q}): closed form {verdict.aut_split}, search {searched}, agree={agree}")
    return agree
