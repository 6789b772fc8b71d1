"""
Brute-force classification of extensions of Gamma = C2 by a centerless F.

An extension <F, t> with t^2 = z and t x t^-1 = a(x) is recorded as the
pair (a, z). With a = r * c_g for the fixed representative r of the kappa
class, solutions are indexed by g. Replacing t by t f, and relabelling F
by an inner automorphism, move g along orbits; equivalence classes are
these orbits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.config.settings import config
from src.groups.cayley import orbit_labels
from src.lien.lien import Lien
from src.utils.exceptions import LienError, OrderBoundExceeded
from src.utils.logger import logger


@dataclass(frozen=True)
class ExtensionCount:
    """
    Attributes:
        classes: number of equivalence classes of extensions
        solutions: number of pairs (a, z) satisfying the extension equations
        neutral: whether some class is split (has a solution with z = 1)
        neutral_solutions: number of solutions with z = 1
    """
    classes: int
    solutions: int
    neutral: bool
    neutral_solutions: int

    def to_dict(self) -> dict:
        return {
            "classes": self.classes,
            "solutions": self.solutions,
            "neutral": self.neutral,
            "neutral_solutions": self.neutral_solutions,
        }


def solution_orbits(lien: Lien) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Solve the extension equations over Gamma = C2 and label the orbits of
    the equivalence moves on the solution index g.

    Returns:
        Tuple of (valid mask, z index per g or -1, orbit label per g)
    """
    aut = lien.aut
    T, inv = aut.table.table, aut.table.inverse
    n = aut.degree
    rep = aut.representative(int(lien.kappa[1]))

    valid = np.zeros(n, dtype=bool)
    z_of = np.full(n, -1, dtype=np.int64)
    for g in range(n):
        a = aut.coset_element(rep, g)
        h = aut.inner_element(a[a])
        if h is None:
            continue
        # a^2 = c_h is x -> z x z^-1 for z = h^-1
        z = int(inv[h])
        if a[z] == z:
            valid[g] = True
            z_of[g] = z

    # Extensions with the same outer action are equivalent when related by
    # t -> t f or by relabelling F with c_f. With Z(F) = 1 the first move
    # alone is transitive on F, so at most one class exists.
    everyone = np.arange(n)
    maps = []
    for f in aut.table.generator_indices:
        f = int(f)
        maps.append(T[inv[rep[f]], everyone])
        maps.append(T[T[inv[rep[f]], everyone], f])
    return valid, z_of, orbit_labels(n, maps)


def enumerate_extensions_order2_gamma(lien: Lien) -> ExtensionCount:
    """
    Count extension classes realizing a lien over Gamma = C2.

    Raises:
        LienError: if Gamma is not of order 2, or the solutions are not a
            union of equivalence orbits
        OrderBoundExceeded: if |F| exceeds ENUMERATION_MAX_ORDER
    """
    if lien.gamma_table.size != 2:
        raise LienError(f"Enumeration needs Gamma of order 2, got {lien.gamma.label()}")
    aut = lien.aut
    if aut.degree > config.ENUMERATION_MAX_ORDER:
        raise OrderBoundExceeded(f"extension enumeration over {lien.F.label()}", aut.degree,
                                 config.ENUMERATION_MAX_ORDER)
    valid, z_of, labels = solution_orbits(lien)

    solutions = np.flatnonzero(valid)
    hit = np.unique(labels[solutions])
    in_hit_orbits = int(np.count_nonzero(np.isin(labels, hit)))
    if in_hit_orbits != solutions.size:
        raise LienError(f"Extension solutions for {lien.describe()} are not closed under equivalence "
                        f"({solutions.size} solutions in orbits of total size {in_hit_orbits})")
    neutral_solutions = int(np.count_nonzero(z_of[solutions] == 0))
    count = ExtensionCount(int(hit.size), int(solutions.size), neutral_solutions > 0, neutral_solutions)
    logger.info(f"Extensions for {lien.describe()}: {count.classes} class(es), {count.solutions} solutions, "
                f"neutral={count.neutral}")
    return count
