"""
Finite-level liens (F, Gamma, kappa).

Gamma is a small finite group and kappa: Gamma -> Out(F) is stored as a full
table indexed by Gamma's canonical element indices. Only centerless F are
accepted: for those the lien determines a unique extension class.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Mapping, Optional, Sequence, Union

import numpy as np

from src.autsplit.automorphisms import AutData, automorphism_group
from src.autsplit.lifting import check_table_hom, minimal_generating_tuple
from src.config.constants import SWAP_ALIAS
from src.config.settings import config
from src.groups.cayley import CayleyTable
from src.groups.permgroup import PermGroup, coset_action
from src.structure.normal import characteristic_lattice, normal_subgroup_lattice
from src.utils.exceptions import LienError, OrderBoundExceeded
from src.utils.logger import logger


@dataclass
class Lien:
    """
    Attributes:
        F: the kernel group (centerless)
        aut: automorphism data of F
        gamma: the finite Galois-type group
        gamma_table: Cayley table of gamma
        kappa: outer class index for every element index of gamma
    """
    F: PermGroup
    aut: AutData
    gamma: PermGroup
    gamma_table: CayleyTable
    kappa: np.ndarray

    def kappa_labels(self) -> List[str]:
        return [self.aut.outer_classes[int(c)].label for c in self.kappa]

    def generator_labels(self) -> Dict[int, str]:
        """1-indexed gamma generator -> outer class label."""
        result = {}
        for i, g in enumerate(self.gamma.generators, start=1):
            idx = self.gamma_table.index_of(g)
            result[i] = self.aut.outer_classes[int(self.kappa[idx])].label
        return result

    def is_trivial(self) -> bool:
        return bool(np.all(self.kappa == 0))

    def describe(self) -> str:
        pairs = ", ".join(f"{i}:{label}" for i, label in self.generator_labels().items())
        return f"({self.F.label()}, {self.gamma.label()}, kappa={{{pairs}}})"


def gamma_cayley_table(gamma: PermGroup) -> CayleyTable:
    if gamma.order > config.GAMMA_MAX_ORDER:
        raise OrderBoundExceeded(f"Gamma {gamma.label()}", gamma.order, config.GAMMA_MAX_ORDER)
    return CayleyTable(gamma)


def require_centerless(F: PermGroup) -> None:
    if not F.center().is_trivial():
        raise LienError(
            f"{F.label()} has nontrivial center; liens are only represented for groups that have "
            f"trivial center and hence a unique extension class"
        )


def make_lien(F: PermGroup, gamma: PermGroup, kappa_table: Union[Sequence[int], np.ndarray],
              aut: Optional[AutData] = None, gamma_table: Optional[CayleyTable] = None) -> Lien:
    """
    Validate and build a lien.

    Args:
        F: kernel group
        gamma: finite group
        kappa_table: outer class index for each element index of gamma
        aut: precomputed Aut(F), computed when omitted
        gamma_table: precomputed Cayley table of gamma

    Raises:
        LienError: if F has nontrivial center or kappa is not a homomorphism
    """
    require_centerless(F)
    aut = aut or automorphism_group(F)
    gamma_table = gamma_table or gamma_cayley_table(gamma)
    kappa = np.asarray(kappa_table, dtype=np.int64)
    if kappa.shape != (gamma_table.size,):
        raise LienError(f"kappa table has {kappa.size} entries, gamma has {gamma_table.size} elements")
    if np.any(kappa < 0) or np.any(kappa >= aut.out_order):
        raise LienError(f"kappa values must be outer class indices below {aut.out_order}")
    if not check_table_hom(gamma_table.table, aut.out_table, kappa):
        raise LienError(f"kappa is not a homomorphism {gamma.label()} -> Out({F.label()})")
    return Lien(F, aut, gamma, gamma_table, kappa)


# ============================================================================
# KAPPA FROM GENERATOR ASSIGNMENTS
# ============================================================================

def resolve_outer_label(aut: AutData, label: str) -> int:
    """Outer class index for a label, an 'o<i>' index or the 'swap' alias."""
    if label == SWAP_ALIAS:
        return swap_class(aut)
    try:
        return aut.out_class(label).index
    except KeyError as e:
        raise LienError(str(e.args[0])) from e


def swap_class(aut: AutData) -> int:
    """
    First outer class of order 2 moving a minimal normal subgroup of F
    (the factor-swapping class of a direct power).
    """
    lattice = normal_subgroup_lattice(aut.base_group)
    nontrivial = [n for n in lattice if n.order > 1]
    minimal = [n for n in nontrivial if not any(m.order < n.order and m.is_subset_of(n) for m in nontrivial)]
    for cls in aut.outer_classes[1:]:
        if cls.order_in_out != 2:
            continue
        rep = cls.representative.images
        if any(not np.all(n.mask[rep[n.indices]]) for n in minimal):
            return cls.index
    raise LienError(f"Out({aut.base_group.label()}) has no class swapping minimal normal subgroups")


def _extend_kappa(aut: AutData, gamma_table: CayleyTable, gens: Sequence[int],
                  values: Sequence[int]) -> Optional[np.ndarray]:
    """Propagate generator values over gamma's Cayley graph; None on a conflict."""
    kappa = np.full(gamma_table.size, -1, dtype=np.int64)
    kappa[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, v in zip(gens, values):
                y = int(gamma_table.table[x, g])
                value = int(aut.out_table[kappa[x], v])
                if kappa[y] < 0:
                    kappa[y] = value
                    nxt.append(y)
                elif kappa[y] != value:
                    return None
        frontier = nxt
    if not check_table_hom(gamma_table.table, aut.out_table, kappa):
        return None
    return kappa


def complete_kappa(aut: AutData, gamma_table: CayleyTable, assignments: Mapping[int, int]) -> np.ndarray:
    """
    Extend generator assignments to a full kappa table.

    Args:
        assignments: 0-indexed position in gamma.generators -> outer class index;
            unassigned generators map to the trivial class

    Raises:
        LienError: if the assignment does not extend to a homomorphism
    """
    gens = list(gamma_table.group.generators)
    for pos in assignments:
        if pos < 0 or pos >= len(gens):
            raise LienError(f"Gamma has {len(gens)} generators, got generator index {pos + 1}")
    gen_idx = [gamma_table.index_of(g) for g in gens]
    values = [int(assignments.get(i, 0)) for i in range(len(gens))]
    kappa = _extend_kappa(aut, gamma_table, gen_idx, values)
    if kappa is None:
        raise LienError("kappa assignment does not extend to a homomorphism")
    return kappa


def all_kappas(aut: AutData, gamma_table: CayleyTable) -> List[np.ndarray]:
    """Every homomorphism gamma -> Out(F), as kappa tables (trivial first)."""
    gens = minimal_generating_tuple(gamma_table.table)
    orders = gamma_table.orders
    choices = [
        [c for c in range(aut.out_order) if orders[g] % aut.out_orders[c] == 0] for g in gens
    ]
    found: Dict[bytes, np.ndarray] = {}
    for values in product(*choices):
        kappa = _extend_kappa(aut, gamma_table, gens, values)
        if kappa is not None:
            found.setdefault(kappa.tobytes(), kappa)
    return sorted(found.values(), key=lambda k: tuple(k.tolist()))


# ============================================================================
# QUOTIENT LIENS
# ============================================================================

@dataclass
class LienQuotient:
    """
    The lien induced on F/N together with the index maps used to move
    automorphisms between F and F/N.

    Attributes:
        normal: N
        projection: F element index -> F/N element index
        lien: the induced lien on F/N
    """
    normal: PermGroup
    projection: np.ndarray
    lien: Optional[Lien] = None

    def induce(self, automorphism: np.ndarray) -> np.ndarray:
        """Automorphism of F/N induced by one of F."""
        result = np.empty(int(self.projection.max()) + 1, dtype=np.int64)
        result[self.projection] = self.projection[automorphism]
        return result

    def preimage(self, q: int) -> int:
        """Smallest F element index mapping to the quotient element q."""
        return int(np.flatnonzero(self.projection == q)[0])


def quotient_lien(lien: Lien, normal: PermGroup) -> LienQuotient:
    """
    The lien induced on F/N by a characteristic subgroup N.

    Raises:
        LienError: if N is not proper, not characteristic, or F/N has center
    """
    F, aut = lien.F, lien.aut
    if normal.order in (1, F.order):
        raise LienError("quotient_lien needs a proper nontrivial characteristic subgroup")
    mask = aut.table.mask_of(normal)
    members = np.flatnonzero(mask)
    if not all(np.all(mask[a.images[members]]) for a in aut.aut_group.generators):
        raise LienError(f"{normal.label()} is not characteristic in {F.label()}")

    quotient, proj = coset_action(F, normal)
    if F.name and not quotient.name:
        quotient.name = f"{F.name}/N{normal.order}"
    if not quotient.center().is_trivial():
        raise LienError(f"{quotient.label()} has nontrivial center")
    aut_q = automorphism_group(quotient)

    coset_to_q = np.empty(aut_q.degree, dtype=np.int64)
    coset_to_q[aut_q.table.perms[:, 0]] = np.arange(aut_q.degree)
    projection = coset_to_q[proj.coset_of]

    partial = LienQuotient(normal, projection)
    kappa = np.array([
        aut_q.class_of(partial.induce(aut.representative(int(c)))) for c in lien.kappa
    ], dtype=np.int64)
    partial.lien = make_lien(quotient, lien.gamma, kappa, aut=aut_q, gamma_table=lien.gamma_table)
    logger.debug(f"Induced lien on {quotient.label()}: kappa={partial.lien.kappa_labels()}")
    return partial


def admissible_characteristic_subgroups(lien: Lien) -> List:
    """
    Proper nontrivial characteristic N with N and F/N centerless, smallest
    first (ties by element indices).
    """
    F = lien.F
    result = []
    for normal in characteristic_lattice(F, lien.aut):
        if normal.order in (1, F.order):
            continue
        if not normal.group.center().is_trivial():
            continue
        quotient, _ = coset_action(F, normal.group)
        if quotient.center().is_trivial():
            result.append(normal)
    return result
