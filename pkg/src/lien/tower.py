"""
Splitting a lien through a tower of characteristic subgroups.

Base case: F aut-split (characteristically simple F is a power of one
simple group, and for anti-solvable aut-split factors its Aut splits over
Inn). A section Out(F) -> Aut(F) composed with kappa lifts kappa.

Inductive case: for a characteristic N with N and F/N centerless, split
the induced lien on F/N, take the preimage of that section in Aut(F), read
off the lien it induces on N, split that one and correct the preimage by
inner automorphisms of N.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional
from weakref import WeakKeyDictionary

import numpy as np

from src.autsplit.automorphisms import AutData, automorphism_group
from src.autsplit.lifting import aut_split_section
from src.config.constants import SimpleTag
from src.lien.extension import verify_lift_section
from src.lien.lien import Lien, LienQuotient, admissible_characteristic_subgroups, make_lien, quotient_lien
from src.structure.composition import composition_factors
from src.structure.normal import is_characteristically_simple
from src.utils.exceptions import HypothesisError, LienError
from src.utils.helpers import Deadline, KeyedLocks
from src.utils.logger import logger


@dataclass
class TowerResult:
    """
    Attributes:
        applicable: False when the hypothesis fails or no step applies
        split: whether a section was produced
        section: lift Gamma -> Aut(F) as a Gamma-indexed list of index permutations
        trace: one line per tower step, outermost first
        reason: why the procedure stopped when not split
    """
    applicable: bool
    split: bool
    section: Optional[List[np.ndarray]] = field(default=None, repr=False)
    trace: List[str] = field(default_factory=list)
    reason: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "split": self.split,
            "trace": list(self.trace),
            "reason": self.reason,
        }


# Aut-splitness of simple factors, keyed by their identified name
_FACTOR_CACHE: Dict[str, bool] = {}
_HYPOTHESIS_CACHE: "WeakKeyDictionary" = WeakKeyDictionary()
_SECTION_CACHE: "WeakKeyDictionary" = WeakKeyDictionary()
_LENGTH_CACHE: "WeakKeyDictionary" = WeakKeyDictionary()
_FACTOR_LOCKS = KeyedLocks()
_OBJECT_LOCKS = KeyedLocks(weak=True)


def _composition_length(F) -> int:
    with _OBJECT_LOCKS(F):
        if F not in _LENGTH_CACHE:
            _LENGTH_CACHE[F] = len(composition_factors(F).factors)
        return _LENGTH_CACHE[F]


def _out_section(aut: AutData, deadline: Optional[Deadline]):
    with _OBJECT_LOCKS(aut):
        if aut not in _SECTION_CACHE:
            _SECTION_CACHE[aut] = aut_split_section(aut, deadline)
        return _SECTION_CACHE[aut]


def check_hypothesis(lien: Lien, deadline: Optional[Deadline] = None) -> Optional[str]:
    """
    None when F is anti-solvable with aut-split composition factors,
    otherwise the reason it is not.
    """
    with _OBJECT_LOCKS(lien.F):
        if lien.F not in _HYPOTHESIS_CACHE:
            _HYPOTHESIS_CACHE[lien.F] = _hypothesis_failure(lien.F, deadline)
        return _HYPOTHESIS_CACHE[lien.F]


def _hypothesis_failure(F, deadline: Optional[Deadline]) -> Optional[str]:
    for factor in composition_factors(F).factors:
        if factor.is_abelian:
            return f"{F.label()} is not anti-solvable (factor {factor.simple_id})"
        key = str(factor.simple_id)
        if factor.simple_id.tag == SimpleTag.UNKNOWN:
            split = _factor_is_aut_split(factor, deadline)
        else:
            with _FACTOR_LOCKS(key):
                if key not in _FACTOR_CACHE:
                    _FACTOR_CACHE[key] = _factor_is_aut_split(factor, deadline)
                split = _FACTOR_CACHE[key]
        if not split:
            return f"composition factor {factor.simple_id} is not aut-split"
    return None


def _factor_is_aut_split(factor, deadline: Optional[Deadline]) -> bool:
    return aut_split_section(automorphism_group(factor.quotient, deadline), deadline).found


class _Tower:
    def __init__(self, max_depth: int, deadline: Optional[Deadline]):
        self.max_depth = max_depth
        self.deadline = deadline
        self.trace: List[str] = []

    def split(self, lien: Lien, depth: int = 0) -> TowerResult:
        if depth > self.max_depth:
            raise HypothesisError(f"Tower recursion depth {depth} exceeds composition length {self.max_depth}")
        indent = "  " * depth
        F, aut = lien.F, lien.aut
        if F.order == 1:
            self.trace.append(f"{indent}trivial {F.label()}")
            return TowerResult(True, True, [np.arange(1)] * lien.gamma_table.size)

        admissible = [] if is_characteristically_simple(F, aut) else admissible_characteristic_subgroups(lien)
        if not admissible:
            return self.base_case(lien, indent)
        return self.inductive_step(lien, admissible[0].group, depth, indent)

    def base_case(self, lien: Lien, indent: str) -> TowerResult:
        F, aut = lien.F, lien.aut
        lift = _out_section(aut, self.deadline)
        if not lift.found:
            reason = f"{F.label()} has no admissible characteristic subgroup and is not aut-split"
            self.trace.append(f"{indent}base {F.label()}: not aut-split")
            return TowerResult(False, False, None, reason=reason)
        section = [lift.section[int(c)] for c in lien.kappa]
        self.trace.append(f"{indent}base {F.label()} (|Out|={aut.out_order})")
        return TowerResult(True, True, section)

    def inductive_step(self, lien: Lien, normal, depth: int, indent: str) -> TowerResult:
        F, aut = lien.F, lien.aut
        self.trace.append(f"{indent}quotient {F.label()} by characteristic subgroup of order {normal.order}")
        quotient: LienQuotient = quotient_lien(lien, normal)
        upper = self.split(quotient.lien, depth + 1)
        if not upper.split:
            return upper

        aut_q = quotient.lien.aut
        preimages = []
        for g in range(lien.gamma_table.size):
            rep = aut.representative(int(lien.kappa[g]))
            rep_bar = quotient.induce(rep)
            rep_bar_inv = np.empty_like(rep_bar)
            rep_bar_inv[rep_bar] = np.arange(rep_bar.size)
            # b = rep_bar * c_q
            q = aut_q.inner_element(upper.section[g][rep_bar_inv])
            if q is None:
                raise LienError("Quotient section leaves the induced outer class")
            preimages.append(aut.coset_element(rep, quotient.preimage(q)))

        aut_n = automorphism_group(normal, self.deadline)
        n_to_f = aut.table.indices_from_base_images(aut_n.table.perms[:, aut.table.base])
        f_to_n = np.full(aut.degree, -1, dtype=np.int64)
        f_to_n[n_to_f] = np.arange(n_to_f.size)

        def restrict(a: np.ndarray) -> np.ndarray:
            return f_to_n[a[n_to_f]]

        restricted = [restrict(a) for a in preimages]
        kappa_n = np.array([aut_n.class_of(r) for r in restricted], dtype=np.int64)
        lien_n = make_lien(normal, lien.gamma, kappa_n, aut=aut_n, gamma_table=lien.gamma_table)
        self.trace.append(f"{indent}restrict to characteristic subgroup of order {normal.order}")
        lower = self.split(lien_n, depth + 1)
        if not lower.split:
            return lower

        section = []
        for a0, r, d in zip(preimages, restricted, lower.section):
            r_inv = np.empty_like(r)
            r_inv[r] = np.arange(r.size)
            f = aut_n.inner_element(d[r_inv])
            if f is None:
                raise LienError("Kernel section leaves the induced outer class")
            section.append(aut.coset_element(a0, int(n_to_f[f])))
        return TowerResult(True, True, section)


def split_via_tower(lien: Lien, require_hypothesis: bool = True,
                    deadline: Optional[Deadline] = None) -> TowerResult:
    """
    Build a section of the pullback extension along a characteristic tower.

    Args:
        lien: a centerless lien
        require_hypothesis: refuse to run unless F is anti-solvable with
            aut-split composition factors
        deadline: cooperative timeout for the searches

    Returns:
        TowerResult: section and trace, or the reason the procedure is inapplicable
    """
    if require_hypothesis:
        reason = check_hypothesis(lien, deadline)
        if reason is not None:
            logger.info(f"Tower for {lien.describe()} inapplicable: {reason}")
            return TowerResult(False, False, None, [f"hypothesis: {reason}"], reason)

    max_depth = _composition_length(lien.F)
    tower = _Tower(max_depth, deadline)
    result = tower.split(lien)
    result.trace = tower.trace
    if result.split and not verify_lift_section(lien, result.section):
        result.split = False
        result.reason = "assembled section failed verification"
        logger.warning(f"Tower section for {lien.describe()} failed verification")
    logger.info(f"Tower for {lien.describe()}: split={result.split}, steps={len(result.trace)}")
    return result
