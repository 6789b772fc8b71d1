"""
Automorphism groups of small groups, realized on element indices.

An automorphism is determined by the images of a small generating tuple
(g_1, ..., g_k). The search fixes such a tuple, restricts candidate images
to elements of the same order and class size, prunes with a sample of short
relations and finally extends the assignment over the Cayley graph.

Aut(F) is assembled as orbit(g_1) x Stab(g_1): first every automorphism
fixing g_1, then one automorphism for each orbit point of g_1 not yet
reached.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.config.constants import KLEIN_OUTER_LABELS, TRIVIAL_OUTER_LABEL
from src.config.settings import config
from src.groups.cayley import CayleyTable
from src.groups.permgroup import PermGroup, StabilizerChain
from src.groups.permutation import Permutation
from src.utils.exceptions import AutomorphismSearchError, OrderBoundExceeded
from src.utils.helpers import Deadline
from src.utils.logger import logger


@dataclass
class OuterClass:
    """
    One Inn(F)-coset of Aut(F).

    Attributes:
        index: position in coset-scan order (0 is the trivial class)
        label: display label ("1", "s", "o2", ...)
        representative: an automorphism in the coset, as an index permutation
        order_in_out: order of the class in Out(F)
        min_order: smallest element order in the coset
        min_order_count: number of coset elements of that order
    """
    index: int
    label: str
    representative: Permutation
    order_in_out: int
    min_order: int
    min_order_count: int
    aliases: Tuple[str, ...] = field(default=())

    def names(self) -> Tuple[str, ...]:
        return (self.label, f"o{self.index}") + self.aliases


# ============================================================================
# GENERATING TUPLES
# ============================================================================

def _candidate_counts(table: CayleyTable) -> np.ndarray:
    """For every element, how many elements share its (order, class size)."""
    keys = table.orders * (table.size + 1) + table.class_sizes
    _, inverse_idx, counts = np.unique(keys, return_inverse=True, return_counts=True)
    return counts[inverse_idx]


def small_generating_tuple(table: CayleyTable, max_attempts: Optional[int] = None) -> Tuple[int, ...]:
    """
    A generating tuple of at most three elements, preferring elements with
    few (order, class size) look-alikes.

    Raises:
        AutomorphismSearchError: if no tuple of size <= 3 is found
    """
    n = table.size
    if n == 1:
        return ()
    max_attempts = max_attempts or config.GENERATOR_PAIR_ATTEMPTS
    orders = table.orders
    full = np.flatnonzero(orders == n)
    if full.size:
        return (int(full[0]),)

    counts = _candidate_counts(table)
    ranking = np.lexsort((np.arange(n), -orders, counts))
    ranking = ranking[ranking != 0]
    reps = [int(r) for r in ranking if table.class_ids[r] == r]

    per_x = max(1, max_attempts // max(1, len(reps)))
    attempts = 0
    for x in reps:
        for y in ranking[:per_x]:
            attempts += 1
            if table.generated_size([x, int(y)]) == n:
                return (x, int(y))
        if attempts > max_attempts:
            break

    for x in reps[:4]:
        for y in ranking[:32]:
            for z in ranking[:per_x]:
                if table.generated_size([x, int(y), int(z)]) == n:
                    return (x, int(y), int(z))
    raise AutomorphismSearchError(f"No generating set of size <= 3 found for {table.group.label()}")


# ============================================================================
# CANDIDATE PRUNING AND EXTENSION
# ============================================================================

class _Searcher:
    """Backtracking search for automorphisms given by generator images."""

    def __init__(self, table: CayleyTable, gens: Tuple[int, ...], deadline: Deadline):
        self.table = table
        self.gens = gens
        self.deadline = deadline
        self.T = table.table
        self.inv = table.inverse
        self.orders = table.orders
        self.sizes = table.class_sizes
        self.candidates = [
            np.flatnonzero((self.orders == self.orders[g]) & (self.sizes == self.sizes[g])) for g in gens
        ]
        self.checked = 0

    def _words(self, a, b):
        T, inv = self.T, self.inv
        ab = T[a, b]
        return (ab, T[a, inv[b]], T[T[a, a], b], T[ab, b], T[T[ab, a], inv[b]])

    def prune(self, i: int, chosen: Sequence[int], candidates: np.ndarray) -> np.ndarray:
        """Keep candidates for generator i whose relation sample matches."""
        keep = np.ones(candidates.size, dtype=bool)
        for j, image in enumerate(chosen):
            source_words = self._words(self.gens[j], self.gens[i])
            image_words = self._words(image, candidates)
            for s, w in zip(source_words, image_words):
                keep &= (self.orders[w] == self.orders[s]) & (self.sizes[w] == self.sizes[s])
        if len(chosen) >= 2 and i >= 2:
            s = self.T[self.T[self.gens[0], self.gens[1]], self.gens[i]]
            w = self.T[self.T[chosen[0], chosen[1]], candidates]
            keep &= (self.orders[w] == self.orders[s]) & (self.sizes[w] == self.sizes[s])
        return candidates[keep]

    def extend(self, images: Sequence[int]) -> Optional[np.ndarray]:
        """Extend gens -> images over the Cayley graph; None unless it is an automorphism."""
        self.checked += 1
        T = self.T
        n = self.table.size
        phi = np.full(n, -1, dtype=np.int64)
        phi[0] = 0
        frontier = np.array([0], dtype=np.int64)
        while frontier.size:
            fresh = []
            for g, h in zip(self.gens, images):
                nxt = T[frontier, g]
                img = T[phi[frontier], h]
                unknown = phi[nxt] < 0
                phi[nxt[unknown]] = img[unknown]
                if not np.array_equal(phi[nxt], img):
                    return None
                fresh.append(nxt[unknown])
            frontier = np.unique(np.concatenate(fresh))
        if np.any(phi < 0) or np.unique(phi).size != n:
            return None
        return phi

    def search(self, first_image: int, find_all: bool) -> List[np.ndarray]:
        """Automorphisms with g_1 -> first_image (all of them, or the first found)."""
        found: List[np.ndarray] = []

        def recurse(chosen: List[int]) -> bool:
            self.deadline.check()
            i = len(chosen)
            if i == len(self.gens):
                phi = self.extend(chosen)
                if phi is not None:
                    found.append(phi)
                    return not find_all
                return False
            for c in self.prune(i, chosen, self.candidates[i]):
                if recurse(chosen + [int(c)]):
                    return True
            return False

        recurse([first_image])
        return found


# ============================================================================
# AUT DATA
# ============================================================================

class AutData:
    """
    Aut(F) as a permutation group on the element indices of F.

    Attributes:
        base_group: F
        table: Cayley table of F (index 0 is the identity)
        gens: generating tuple of F (element indices) determining automorphisms
        aut_group: Aut(F) on |F| points
        inn: Inn(F), generated by conjugations by F's generators
        outer_classes: one OuterClass per Inn-coset, trivial class first
        out_table: multiplication table of Out(F) on class indices
    """

    def __init__(self, base_group: PermGroup, table: CayleyTable, gens: Tuple[int, ...],
                 aut_gens: List[Permutation], inner_gens: List[Permutation]):
        self.base_group = base_group
        self.table = table
        self.gens = gens
        self.degree = table.size
        self.inn = PermGroup(inner_gens, degree=self.degree, name=f"Inn({base_group.label()})")
        self.aut_group = PermGroup(inner_gens + aut_gens, degree=self.degree, name=f"Aut({base_group.label()})")
        self._build_inner_lookup()
        self._build_outer_classes()

    # ------------------------------------------------------------------
    # Inner automorphisms
    # ------------------------------------------------------------------

    def conj(self, f: int) -> np.ndarray:
        return self.table.conj_array(f)

    def _build_inner_lookup(self) -> None:
        T, inv = self.table.table, self.table.inverse
        n = self.degree
        everyone = np.arange(n)
        # column i: c_h(g_i) for every h
        signature = np.stack([T[T[inv, g], everyone] for g in self.gens], axis=1) if self.gens else np.zeros((n, 0), dtype=np.int64)
        self._inner_lookup: Dict[Tuple[int, ...], int] = {}
        for h in range(n - 1, -1, -1):
            self._inner_lookup[tuple(int(v) for v in signature[h])] = h

    def inner_element(self, automorphism: np.ndarray) -> Optional[int]:
        """Index of some h with automorphism == c_h, or None when not inner."""
        key = tuple(int(automorphism[g]) for g in self.gens)
        return self._inner_lookup.get(key)

    def is_inner(self, automorphism: np.ndarray) -> bool:
        return self.inner_element(automorphism) is not None

    # ------------------------------------------------------------------
    # Outer classes
    # ------------------------------------------------------------------

    def class_of(self, automorphism: np.ndarray) -> int:
        """Index of the outer class containing an automorphism."""
        for i, rep_inv in enumerate(self._rep_inverses):
            # rep^-1 * a maps g to a(rep^-1(g))
            key = tuple(int(automorphism[rep_inv[g]]) for g in self.gens)
            if key in self._inner_lookup:
                return i
        raise AutomorphismSearchError("Automorphism lies in no known outer class")

    def _try_class(self, automorphism: np.ndarray, rep_inverses: List[np.ndarray]) -> Optional[int]:
        for i, rep_inv in enumerate(rep_inverses):
            key = tuple(int(automorphism[rep_inv[g]]) for g in self.gens)
            if key in self._inner_lookup:
                return i
        return None

    def _build_outer_classes(self) -> None:
        identity = np.arange(self.degree)
        reps = [identity]
        rep_inverses = [identity]
        outer_gens = [g.images for g in self.aut_group.generators if not self.is_inner(g.images)]
        i = 0
        while i < len(reps):
            for a in outer_gens:
                candidate = a[reps[i]]
                if self._try_class(candidate, rep_inverses) is None:
                    reps.append(candidate)
                    inv = np.empty_like(candidate)
                    inv[candidate] = identity
                    rep_inverses.append(inv)
            i += 1
        self._reps = reps
        self._rep_inverses = rep_inverses

        k = len(reps)
        self.out_table = np.empty((k, k), dtype=np.int64)
        for a in range(k):
            for b in range(k):
                self.out_table[a, b] = self.class_of(reps[b][reps[a]])
        self.out_orders = _table_orders(self.out_table)

        expected = self.aut_group.order // self.inn.order
        if k != expected:
            raise AutomorphismSearchError(f"Found {k} outer classes but |Aut|/|Inn| = {expected}")

        self.outer_classes = []
        for idx, rep in enumerate(reps):
            orders = self.coset_orders(rep)
            least = int(orders.min())
            self.outer_classes.append(OuterClass(
                index=idx,
                label=TRIVIAL_OUTER_LABEL if idx == 0 else f"o{idx}",
                representative=Permutation.from_array(rep),
                order_in_out=int(self.out_orders[idx]),
                min_order=least,
                min_order_count=int(np.count_nonzero(orders == least)),
            ))
        self._assign_labels()

    def _assign_labels(self) -> None:
        nontrivial = self.outer_classes[1:]
        if len(nontrivial) == 1:
            nontrivial[0].label = "s"
        elif (len(nontrivial) == 3 and all(c.order_in_out == 2 for c in nontrivial)
              and sum(c.min_order > 2 for c in nontrivial) == 1):
            ranked = sorted(nontrivial, key=lambda c: (c.min_order, c.index))
            for cls, label in zip(ranked, KLEIN_OUTER_LABELS):
                cls.label = label

    @property
    def out_order(self) -> int:
        return len(self.outer_classes)

    def out_class(self, label: str) -> OuterClass:
        for cls in self.outer_classes:
            if label in cls.names():
                return cls
        known = ", ".join(c.label for c in self.outer_classes)
        raise KeyError(f"Unknown outer class '{label}' (known: {known})")

    def representative(self, index: int) -> np.ndarray:
        return self._reps[index]

    # ------------------------------------------------------------------
    # Coset elements
    # ------------------------------------------------------------------

    def coset_element(self, rep: np.ndarray, f: int) -> np.ndarray:
        """rep * c_f, i.e. x -> f^-1 rep(x) f."""
        return self.conj(f)[rep]

    def coset_orders(self, rep: np.ndarray) -> np.ndarray:
        """Orders of rep * c_f for every f, computed on the generating tuple."""
        T, inv = self.table.table, self.table.inverse
        n = self.degree
        if not self.gens:
            return np.ones(n, dtype=np.int64)
        everyone = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        current = [np.full(n, g, dtype=np.int64) for g in self.gens]
        k = 0
        while np.any(orders == 0):
            k += 1
            current = [T[T[inv, rep[c]], everyone] for c in current]
            back = np.ones(n, dtype=bool)
            for c, g in zip(current, self.gens):
                back &= c == g
            orders[(orders == 0) & back] = k
        return orders

    def min_order_in_coset(self, cls: OuterClass) -> int:
        return int(self.coset_orders(cls.representative.images).min())

    def is_automorphism(self, phi: np.ndarray) -> bool:
        """Full multiplication-table check."""
        T = self.table.table
        if np.unique(phi).size != self.degree:
            return False
        return bool(np.array_equal(phi[T], T[phi][:, phi]))

    def summary(self) -> dict:
        return {
            "order": self.base_group.order,
            "aut_order": self.aut_group.order,
            "inn_order": self.inn.order,
            "out_order": self.out_order,
            "outer_classes": [
                {"label": c.label, "order_in_out": c.order_in_out, "min_order": c.min_order}
                for c in self.outer_classes
            ],
        }


def _table_orders(table: np.ndarray) -> np.ndarray:
    k = table.shape[0]
    orders = np.zeros(k, dtype=np.int64)
    for a in range(k):
        x, n = a, 1
        while x != 0:
            x = int(table[x, a])
            n += 1
        orders[a] = n if a else 1
    return orders


def automorphism_group(group: PermGroup, deadline: Optional[Deadline] = None) -> AutData:
    """
    Compute Aut(F) on the element indices of F.

    Raises:
        OrderBoundExceeded: if |F| exceeds AUT_MAX_ORDER
        AutomorphismSearchError: if no small generating set exists
        SearchTimeout: if the deadline expires
    """
    if group.order > config.AUT_MAX_ORDER:
        raise OrderBoundExceeded(f"automorphism search on {group.label()}", group.order, config.AUT_MAX_ORDER)
    deadline = deadline or Deadline(config.SEARCH_TIMEOUT_SECONDS, f"Aut({group.label()})")
    table = CayleyTable(group)
    gens = small_generating_tuple(table)
    n = table.size
    logger.info(f"Computing Aut({group.label()}): |F|={n}, generating tuple of size {len(gens)}")

    inner_gens = [Permutation.from_array(table.conj_array(int(g))) for g in table.generator_indices]
    inner_gens = [g for g in inner_gens if not g.is_identity()]

    chain = StabilizerChain(n)
    for g in inner_gens:
        chain.extend(g)
    aut_gens: List[Permutation] = []

    def absorb(phi: np.ndarray) -> None:
        perm = Permutation.from_array(phi)
        if not chain.contains(perm):
            chain.extend(perm)
            aut_gens.append(perm)

    if gens:
        searcher = _Searcher(table, gens, deadline)
        g1 = gens[0]
        for phi in searcher.search(g1, find_all=True):
            absorb(phi)
        stabilizer_checks = searcher.checked

        failed = np.zeros(n, dtype=bool)
        while True:
            maps = [g.images for g in inner_gens + aut_gens]
            orbit = _orbit(n, g1, maps)
            pending = [int(c) for c in searcher.candidates[0] if not orbit[c] and not failed[c]]
            if not pending:
                break
            target = pending[0]
            hits = searcher.search(target, find_all=False)
            if hits:
                absorb(hits[0])
            else:
                failed |= _orbit(n, target, maps)
        logger.debug(
            f"Aut search on {group.label()}: {stabilizer_checks} stabilizer checks, "
            f"{searcher.checked} total extensions"
        )

    aut = AutData(group, table, gens, aut_gens, inner_gens)
    logger.info(
        f"Aut({group.label()}) has order {aut.aut_group.order}, |Inn|={aut.inn.order}, |Out|={aut.out_order}"
    )
    return aut


def _orbit(n: int, start: int, maps: Sequence[np.ndarray]) -> np.ndarray:
    reached = np.zeros(n, dtype=bool)
    reached[start] = True
    frontier = np.array([start])
    while frontier.size:
        nxt = np.unique(np.concatenate([m[frontier] for m in maps])) if maps else np.array([], dtype=np.int64)
        nxt = nxt[~reached[nxt]]
        reached[nxt] = True
        frontier = nxt
    return reached
