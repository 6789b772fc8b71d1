"""
Homomorphisms between permutation groups given by generator images.

A map s_i -> t_i is validated through its graph: the group D generated by
the pairs (s_i, t_i) acting on the disjoint union of both point sets. The
map extends to a homomorphism exactly when D projects isomorphically onto
the source, i.e. when |D| equals |source|. Evaluation sifts (g, 1) through
D's chain; the residue is (1, phi(g)^-1).
"""

from __future__ import annotations

from functools import cached_property
from typing import List, Sequence

import numpy as np

from src.groups.permgroup import PermGroup
from src.groups.permutation import Permutation, concat
from src.utils.exceptions import HomomorphismError


class GroupHom:
    """
    A homomorphism source -> target.

    Attributes:
        source: domain
        target: codomain
        images: one target element per source generator
    """

    def __init__(self, source: PermGroup, target: PermGroup, images: Sequence[Permutation], check: bool = True):
        images = list(images)
        if len(images) != len(source.generators):
            raise HomomorphismError(
                f"{len(images)} images given for {len(source.generators)} generators of {source.label()}"
            )
        for img in images:
            if img.degree != target.degree:
                raise HomomorphismError(f"Image degree {img.degree} differs from target degree {target.degree}")
        self.source = source
        self.target = target
        self.images: List[Permutation] = images
        if check:
            self.validate()

    # ------------------------------------------------------------------
    # Graph group
    # ------------------------------------------------------------------

    @cached_property
    def graph(self) -> PermGroup:
        pairs = [concat(s, t) for s, t in zip(self.source.generators, self.images)]
        return PermGroup(pairs, degree=self.source.degree + self.target.degree)

    def is_valid(self) -> bool:
        if not all(self.target.contains(t) for t in self.images):
            return False
        return self.graph.order == self.source.order

    def validate(self) -> None:
        if not all(self.target.contains(t) for t in self.images):
            raise HomomorphismError(f"An image does not lie in {self.target.label()}")
        if self.graph.order != self.source.order:
            raise HomomorphismError(
                f"Generator images do not respect the relations of {self.source.label()} "
                f"(graph order {self.graph.order}, source order {self.source.order})"
            )

    # ------------------------------------------------------------------
    # Evaluation
    # ------------------------------------------------------------------

    def __call__(self, g: Permutation) -> Permutation:
        n = self.source.degree
        padded = concat(g, Permutation.identity(self.target.degree))
        residue = self.graph.sift(padded)
        if not np.array_equal(residue.images[:n], np.arange(n)):
            raise HomomorphismError(f"{g!r} is not an element of {self.source.label()}")
        return Permutation.from_array(residue.images[n:] - n).inverse()

    def image(self) -> PermGroup:
        return self.target.subgroup(self.images)

    def kernel(self) -> PermGroup:
        """Kernel by enumeration of the source."""
        table = self.source.elements
        identity = Permutation.identity(self.target.degree)
        members = [i for i in range(table.size) if self(table.permutation(i)) == identity]
        return self.source.subgroup_from_indices(members)

    def is_surjective(self) -> bool:
        return self.image().order == self.target.order

    def __repr__(self) -> str:
        return f"GroupHom({self.source.label()} -> {self.target.label()})"
