"""
Lifting homomorphisms Q -> Out(F) to homomorphisms Q -> Aut(F).

Both aut-splitness (Q = Out(F), kappa = identity) and neutrality of a lien
(Q = Gamma, kappa given) reduce to this search. Lifts of a generating tuple
q_1..q_k are searched coset by coset: a_i = r_i * c_f with r_i a fixed
representative of kappa(q_i). Conjugating a whole lift by an inner
automorphism gives another lift, so the first image only runs over orbit
representatives of the twisted action f -> r_1(h)^-1 f h.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.autsplit.automorphisms import AutData
from src.config.settings import config
from src.groups.cayley import orbit_labels
from src.groups.permgroup import PermGroup
from src.groups.permutation import Permutation
from src.utils.exceptions import HomomorphismError, OrderBoundExceeded
from src.utils.helpers import Deadline
from src.utils.logger import logger


@dataclass
class LiftResult:
    """
    Outcome of a lift search.

    Attributes:
        found: whether a lifting homomorphism exists
        generators: indices of the generating tuple of Q used
        section: for every element of Q, its lift as an index permutation of F
        nodes: number of partial assignments explored
    """
    found: bool
    generators: Tuple[int, ...]
    section: Optional[List[np.ndarray]] = field(default=None, repr=False)
    nodes: int = 0

    def generator_images(self) -> List[Permutation]:
        if not self.section:
            return []
        return [Permutation.from_array(self.section[q]) for q in self.generators]


def table_orders(table: np.ndarray) -> np.ndarray:
    """Element orders from a multiplication table with identity 0."""
    k = table.shape[0]
    orders = np.ones(k, dtype=np.int64)
    for a in range(1, k):
        x, n = a, 1
        while x != 0:
            x = int(table[x, a])
            n += 1
        orders[a] = n
    return orders


def _generated(table: np.ndarray, gens: Sequence[int]) -> int:
    reached = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = int(table[x, g])
                if y not in reached:
                    reached.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(reached)


def minimal_generating_tuple(table: np.ndarray) -> Tuple[int, ...]:
    """Shortest generating tuple of a small group, lexicographically first."""
    k = table.shape[0]
    if k == 1:
        return ()
    elements = range(1, k)
    for size in range(1, k):
        for combo in combinations(elements, size):
            if _generated(table, combo) == k:
                return combo
    raise HomomorphismError("Table does not describe a group")


def check_table_hom(q_table: np.ndarray, out_table: np.ndarray, kappa: np.ndarray) -> bool:
    """kappa(ab) == kappa(a) kappa(b) for all pairs."""
    return bool(np.array_equal(kappa[q_table], out_table[kappa[:, None], kappa[None, :]]))


class _LiftSearch:
    def __init__(self, aut: AutData, q_table: np.ndarray, kappa: np.ndarray, deadline: Deadline):
        self.aut = aut
        self.q_table = q_table
        self.kappa = kappa
        self.deadline = deadline
        self.q_orders = table_orders(q_table)
        self.gens = minimal_generating_tuple(q_table)
        self.T = aut.table.table
        self.n = aut.degree
        self.nodes = 0
        self._order_cache: Dict[bytes, np.ndarray] = {}

    def orders(self, rep: np.ndarray) -> np.ndarray:
        key = rep.tobytes()
        if key not in self._order_cache:
            self._order_cache[key] = self.aut.coset_orders(rep)
        return self._order_cache[key]

    def first_candidates(self, rep: np.ndarray, q_order: int) -> np.ndarray:
        T, inv = self.T, self.aut.table.inverse
        everyone = np.arange(self.n)
        maps = []
        for h in self.aut.table.generator_indices:
            h = int(h)
            # f -> r(h)^-1 f h
            maps.append(T[T[inv[rep[h]], everyone], h])
        labels = orbit_labels(self.n, maps)
        reps = np.flatnonzero(labels == np.arange(self.n))
        return reps[q_order % self.orders(rep)[reps] == 0]

    def candidates(self, i: int, chosen: List[int]) -> np.ndarray:
        q = self.gens[i]
        rep = self.aut.representative(int(self.kappa[q]))
        if i == 0:
            return self.first_candidates(rep, int(self.q_orders[q]))
        everyone = np.arange(self.n)
        keep = int(self.q_orders[q]) % self.orders(rep) == 0
        for j, f_j in enumerate(chosen):
            q_j = self.gens[j]
            rep_j = self.aut.representative(int(self.kappa[q_j]))
            # (r_j c_fj)(r c_f) = (r_j r) c_(r(f_j) f)
            product_rep = rep[rep_j]
            twist = self.T[rep[f_j], everyone]
            pair_order = int(self.q_orders[self.q_table[q_j, q]])
            keep &= pair_order % self.orders(product_rep)[twist] == 0
        return np.flatnonzero(keep)

    def assemble(self, chosen: List[int]) -> Optional[List[np.ndarray]]:
        """Extend generator lifts over Q's Cayley graph; None on a conflict."""
        lifts = [
            self.aut.coset_element(self.aut.representative(int(self.kappa[q])), f)
            for q, f in zip(self.gens, chosen)
        ]
        k = self.q_table.shape[0]
        section: List[Optional[np.ndarray]] = [None] * k
        section[0] = np.arange(self.n)
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for q, a in zip(self.gens, lifts):
                    y = int(self.q_table[x, q])
                    value = a[section[x]]
                    if section[y] is None:
                        section[y] = value
                        nxt.append(y)
                    elif not np.array_equal(section[y], value):
                        return None
            frontier = nxt
        return section

    def run(self) -> LiftResult:
        if not self.gens:
            return LiftResult(True, (), [np.arange(self.n)], 0)

        def recurse(chosen: List[int]) -> Optional[List[np.ndarray]]:
            self.deadline.check()
            self.nodes += 1
            if len(chosen) == len(self.gens):
                return self.assemble(chosen)
            for f in self.candidates(len(chosen), chosen):
                section = recurse(chosen + [int(f)])
                if section is not None:
                    return section
            return None

        section = recurse([])
        return LiftResult(section is not None, self.gens, section, self.nodes)


def find_lift(aut: AutData, q_table: np.ndarray, kappa: np.ndarray,
              deadline: Optional[Deadline] = None) -> LiftResult:
    """
    Search a homomorphism s: Q -> Aut(F) with class(s(q)) = kappa(q).

    Args:
        aut: automorphism data of F
        q_table: multiplication table of Q, identity at index 0
        kappa: class index in Out(F) for every element of Q
        deadline: cooperative timeout

    Raises:
        HomomorphismError: if kappa is not a homomorphism
    """
    kappa = np.asarray(kappa, dtype=np.int64)
    if not check_table_hom(q_table, aut.out_table, kappa):
        raise HomomorphismError("kappa is not a homomorphism into Out(F)")
    deadline = deadline or Deadline(config.SEARCH_TIMEOUT_SECONDS, "lift search")
    result = _LiftSearch(aut, q_table, kappa, deadline).run()
    logger.debug(f"Lift search over |Q|={q_table.shape[0]}: found={result.found}, nodes={result.nodes}")
    return result


# ============================================================================
# AUT-SPLIT
# ============================================================================

def is_aut_split(aut: AutData, deadline: Optional[Deadline] = None) -> Tuple[bool, Optional[List[Permutation]]]:
    """
    Decide whether Inn(F) has a complement in Aut(F).

    Returns:
        (split, witness): witness generators of a complement when split

    Raises:
        OrderBoundExceeded: if |Out(F)| exceeds OUT_MAX_ORDER
    """
    result = aut_split_section(aut, deadline)
    if not result.found:
        return False, None
    return True, result.generator_images()


def aut_split_section(aut: AutData, deadline: Optional[Deadline] = None) -> LiftResult:
    """The lift search behind is_aut_split, with the full section Out -> Aut."""
    if aut.out_order > config.OUT_MAX_ORDER:
        raise OrderBoundExceeded("complement search", aut.out_order, config.OUT_MAX_ORDER)
    result = find_lift(aut, aut.out_table, np.arange(aut.out_order), deadline)
    logger.info(f"{aut.base_group.label()} aut-split: {result.found}")
    return result


def verify_complement(aut: AutData, generators: Sequence[Permutation]) -> bool:
    """
    Check a complement witness pointwise: |C| = |Out|, C meets Inn trivially
    and every element of C is an automorphism.
    """
    complement = PermGroup(list(generators), degree=aut.degree)
    if complement.order != aut.out_order:
        return False
    table = complement.elements
    classes = set()
    for i in range(table.size):
        phi = table.perms[i].astype(np.int64)
        if not aut.is_automorphism(phi):
            return False
        classes.add(aut.class_of(phi))
    return len(classes) == aut.out_order


def min_order_in_coset(aut: AutData, cls) -> int:
    return aut.min_order_in_coset(cls)
