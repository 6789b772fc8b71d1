"""
Permutation groups with a deterministic Schreier-Sims stabilizer chain.

The chain is built incrementally: each level keeps a base point (the lowest
point moved by the first generator reaching it), a transversal of the base
orbit and the generators of the level group. Every generator is sifted
before being added, so the chain is complete after each insertion.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, TYPE_CHECKING

import numpy as np

from src.config.settings import config
from src.groups.permutation import Permutation
from src.utils.exceptions import NotNormalError, OrderBoundExceeded, PermutationError

if TYPE_CHECKING:
    from src.groups.cayley import ElementTable
    from src.groups.homomorphism import GroupHom


class StabilizerChain:
    """One level of a stabilizer chain; the next level is ``stabilizer``."""

    __slots__ = ("degree", "base", "generators", "transversal", "inverses", "stabilizer")

    def __init__(self, degree: int):
        self.degree = degree
        self.base: Optional[int] = None
        self.generators: List[Permutation] = []
        self.transversal: Dict[int, Permutation] = {}
        self.inverses: Dict[int, Permutation] = {}
        self.stabilizer: Optional[StabilizerChain] = None

    def sift(self, g: Permutation) -> Tuple[Permutation, StabilizerChain]:
        """Strip g through the chain; return the residue and the level where it stopped."""
        level, h = self, g
        while level.base is not None:
            point = int(h.images[level.base])
            if point not in level.transversal:
                return h, level
            h = h * level.inverses[point]
            level = level.stabilizer
        return h, level

    def contains(self, g: Permutation) -> bool:
        residue, level = self.sift(g)
        return level.base is None and residue.is_identity()

    def extend(self, g: Permutation) -> None:
        if self.contains(g):
            return
        if self.base is None:
            self.base = g.lowest_moved_point()
            identity = Permutation.identity(self.degree)
            self.transversal = {self.base: identity}
            self.inverses = {self.base: identity}
            self.stabilizer = StabilizerChain(self.degree)
        self.generators.append(g)

        queue = deque()
        for point, u in list(self.transversal.items()):
            self._schreier(point, u, g, queue)
        while queue:
            point = queue.popleft()
            u = self.transversal[point]
            for s in self.generators:
                self._schreier(point, u, s, queue)

    def _schreier(self, point: int, u: Permutation, s: Permutation, queue: deque) -> None:
        image = int(s.images[point])
        if image in self.transversal:
            schreier = u * s * self.inverses[image]
            if not schreier.is_identity():
                self.stabilizer.extend(schreier)
        else:
            v = u * s
            self.transversal[image] = v
            self.inverses[image] = v.inverse()
            queue.append(image)

    def levels(self) -> List[StabilizerChain]:
        result, level = [], self
        while level.base is not None:
            result.append(level)
            level = level.stabilizer
        return result


class PermGroup:
    """
    A permutation group given by generators, with its stabilizer chain.

    Attributes:
        degree: number of points
        generators: tuple of generating permutations (identity allowed)
        name: optional display name (e.g. "A5")
    """

    def __init__(self, generators: Sequence[Permutation], degree: Optional[int] = None, name: Optional[str] = None):
        generators = list(generators)
        if not generators and degree is None:
            raise PermutationError("A group needs at least one generator or an explicit degree")
        degree = degree if degree is not None else generators[0].degree
        for g in generators:
            if not isinstance(g, Permutation):
                raise PermutationError(f"Generator {g!r} is not a Permutation")
            if g.degree != degree:
                raise PermutationError(f"Generator degree {g.degree} differs from group degree {degree}")
        self.degree = degree
        self.generators: Tuple[Permutation, ...] = tuple(generators) or (Permutation.identity(degree),)
        self.name = name
        self.chain = StabilizerChain(degree)
        for g in self.generators:
            if not g.is_identity():
                self.chain.extend(g)

    # ------------------------------------------------------------------
    # Order and membership
    # ------------------------------------------------------------------

    @cached_property
    def order(self) -> int:
        result = 1
        for level in self.chain.levels():
            result *= len(level.transversal)
        return result

    @property
    def base(self) -> List[int]:
        return [level.base for level in self.chain.levels()]

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise PermutationError(f"Degree mismatch: element has degree {g.degree}, group has {self.degree}")
        return self.chain.contains(g)

    def __contains__(self, g: Permutation) -> bool:
        return self.contains(g)

    def sift(self, g: Permutation) -> Permutation:
        return self.chain.sift(g)[0]

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_abelian(self) -> bool:
        gens = self.nontrivial_generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    @property
    def nontrivial_generators(self) -> List[Permutation]:
        return [g for g in self.generators if not g.is_identity()]

    def label(self) -> str:
        return self.name or f"<group of order {self.order} on {self.degree} points>"

    def __repr__(self) -> str:
        return f"PermGroup({self.label()}, order={self.order}, degree={self.degree})"

    # ------------------------------------------------------------------
    # Subgroups
    # ------------------------------------------------------------------

    def subgroup(self, generators: Iterable[Permutation], name: Optional[str] = None) -> PermGroup:
        return PermGroup(list(generators), degree=self.degree, name=name)

    def is_subgroup(self, other: PermGroup) -> bool:
        """True when ``other`` is contained in self."""
        return other.degree == self.degree and all(self.contains(g) for g in other.generators)

    def same_group(self, other: PermGroup) -> bool:
        return self.order == other.order and self.is_subgroup(other)

    def is_normal_subgroup(self, sub: PermGroup) -> bool:
        """True when ``sub`` is a normal subgroup of self."""
        if not self.is_subgroup(sub):
            return False
        return all(sub.contains(n.conjugate(g)) for n in sub.generators for g in self.generators)

    def normal_closure(self, elements: Iterable[Permutation]) -> PermGroup:
        """Smallest normal subgroup of self containing ``elements``."""
        elements = list(elements)
        for s in elements:
            if not self.contains(s):
                raise PermutationError(f"{s!r} is not an element of {self.label()}")
        chain = StabilizerChain(self.degree)
        gens: List[Permutation] = []
        for s in elements:
            if not chain.contains(s):
                chain.extend(s)
                gens.append(s)
        i = 0
        while i < len(gens):
            n = gens[i]
            i += 1
            for g in self.nontrivial_generators:
                c = n.conjugate(g)
                if not chain.contains(c):
                    chain.extend(c)
                    gens.append(c)
        return PermGroup(gens, degree=self.degree)

    def derived_subgroup(self) -> PermGroup:
        gens = self.nontrivial_generators
        commutators = [a.commutator(b) for i, a in enumerate(gens) for b in gens[i + 1:]]
        return self.normal_closure(commutators)

    def require_order_at_most(self, bound: int, what: str) -> None:
        if self.order > bound:
            raise OrderBoundExceeded(what, self.order, bound)

    # ------------------------------------------------------------------
    # Enumeration based routines
    # ------------------------------------------------------------------

    @cached_property
    def elements(self) -> ElementTable:
        """All elements, indexed canonically (identity first). Bounded by MAX_ORDER."""
        from src.groups.cayley import ElementTable

        self.require_order_at_most(config.MAX_ORDER, f"enumerating {self.label()}")
        return ElementTable(self)

    def conjugacy_classes(self) -> List[Tuple[Permutation, int]]:
        """(representative, class size) pairs, the identity class first."""
        table = self.elements
        class_ids = table.class_ids
        reps, sizes = np.unique(class_ids, return_counts=True)
        return [(table.permutation(int(r)), int(s)) for r, s in zip(reps, sizes)]

    def center(self) -> PermGroup:
        table = self.elements
        mask = np.ones(table.size, dtype=bool)
        for g in self.nontrivial_generators:
            mask &= table.right_mult(g) == table.left_mult(g)
        return self.subgroup_from_indices(np.flatnonzero(mask))

    def subgroup_from_indices(self, indices: Iterable[int], name: Optional[str] = None) -> PermGroup:
        """Subgroup generated by enumerated elements, keeping only the needed generators."""
        table = self.elements
        chain = StabilizerChain(self.degree)
        gens = []
        for idx in indices:
            g = table.permutation(int(idx))
            if not g.is_identity() and not chain.contains(g):
                chain.extend(g)
                gens.append(g)
        return PermGroup(gens, degree=self.degree, name=name)


# ============================================================================
# MODULE LEVEL OPERATIONS
# ============================================================================

def group_from_generators(gens: Sequence[Permutation], name: Optional[str] = None) -> PermGroup:
    """
    Build a permutation group from a nonempty generator list.

    Raises:
        PermutationError: on an empty list or mixed degrees
    """
    if not gens:
        raise PermutationError("group_from_generators needs at least one generator")
    return PermGroup(gens, name=name)


def contains(group: PermGroup, g: Permutation) -> bool:
    return group.contains(g)


def conjugacy_classes(group: PermGroup) -> List[Tuple[Permutation, int]]:
    return group.conjugacy_classes()


def center(group: PermGroup) -> PermGroup:
    return group.center()


def derived_subgroup(group: PermGroup) -> PermGroup:
    return group.derived_subgroup()


def normal_closure(group: PermGroup, elements: Sequence[Permutation]) -> PermGroup:
    return group.normal_closure(elements)


def coset_action(group: PermGroup, normal: PermGroup) -> Tuple[PermGroup, GroupHom]:
    """
    Realize G/N as a permutation group on the cosets of N.

    Cosets are numbered by their smallest element index, so the coset of the
    identity is point 0 and a quotient element q corresponds to the coset
    ``q.images[0]``.

    Returns:
        (quotient, projection): the quotient group and the surjection G -> G/N

    Raises:
        NotNormalError: if N is not a normal subgroup of G
    """
    from src.groups.homomorphism import GroupHom

    if not group.is_normal_subgroup(normal):
        raise NotNormalError(f"{normal.label()} is not normal in {group.label()}")
    table = group.elements
    labels = table.coset_labels(normal)
    reps = np.unique(labels)
    compress = np.full(table.size, -1, dtype=np.int64)
    compress[reps] = np.arange(reps.size)
    coset_of = compress[labels]

    def act(g: Permutation) -> Permutation:
        moved = table.right_mult(g)
        return Permutation.from_array(coset_of[moved[reps]])

    images = [act(g) for g in group.generators]
    quotient = PermGroup(images, degree=int(reps.size))
    if group.name and normal.name:
        quotient.name = f"{group.name}/{normal.name}"
    projection = GroupHom(group, quotient, images, check=False)
    projection.coset_of = coset_of
    return quotient, projection
