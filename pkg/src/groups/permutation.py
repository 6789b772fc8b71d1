"""
Permutations of the points 0..n-1 backed by numpy image arrays.

Composition reads left to right: ``p * q`` applies ``p`` first and then
``q``, so ``(p * q).images == q.images[p.images]``.
"""

from __future__ import annotations

from math import lcm
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from src.utils.exceptions import PermutationError


def _as_image_array(images) -> np.ndarray:
    arr = np.array(images, dtype=np.int64)
    if arr.ndim != 1 or arr.size == 0:
        raise PermutationError(f"Permutation images must be a nonempty 1-d sequence, got shape {arr.shape}")
    return arr


class Permutation:
    """
    An immutable permutation of {0, ..., degree-1}.

    Attributes:
        images: read-only numpy array, ``images[i]`` is the image of point i
        degree: number of points acted on
    """

    __slots__ = ("_images", "_hash")

    def __init__(self, images: Sequence[int] | np.ndarray, check: bool = True):
        arr = _as_image_array(images)
        if check:
            n = arr.size
            if arr.min() < 0 or arr.max() >= n or np.unique(arr).size != n:
                raise PermutationError(f"Images {arr.tolist()} are not a bijection of 0..{n - 1}")
        arr.flags.writeable = False
        self._images = arr
        self._hash = None

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        if degree < 1:
            raise PermutationError(f"Degree must be positive, got {degree}")
        return cls(np.arange(degree), check=False)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        """
        Build a permutation from 0-indexed cycles.

        Args:
            cycles: iterable of cycles, each a sequence of distinct points
            degree: number of points

        Returns:
            Permutation: the product of the (disjoint or not) cycles, left to right

        Example:
            >>> Permutation.from_cycles([(0, 1, 2)], 4).images.tolist()
            [1, 2, 0, 3]
        """
        result = cls.identity(degree)
        for cycle in cycles:
            cycle = list(cycle)
            if len(set(cycle)) != len(cycle):
                raise PermutationError(f"Cycle {cycle} repeats a point")
            if any(p < 0 or p >= degree for p in cycle):
                raise PermutationError(f"Cycle {cycle} leaves the points 0..{degree - 1}")
            if len(cycle) < 2:
                continue
            images = np.arange(degree)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
            result = result * cls(images, check=False)
        return result

    @classmethod
    def from_array(cls, images: np.ndarray) -> Permutation:
        """Wrap an image array already known to be a bijection."""
        return cls(images, check=False)

    # ------------------------------------------------------------------
    # Basic properties
    # ------------------------------------------------------------------

    @property
    def images(self) -> np.ndarray:
        return self._images

    @property
    def degree(self) -> int:
        return int(self._images.size)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self._images, np.arange(self.degree)))

    def moved_points(self) -> np.ndarray:
        return np.flatnonzero(self._images != np.arange(self.degree))

    def lowest_moved_point(self) -> int | None:
        moved = self.moved_points()
        return int(moved[0]) if moved.size else None

    def cycles(self) -> List[Tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point, sorted by that point."""
        seen = np.zeros(self.degree, dtype=bool)
        result = []
        for start in range(self.degree):
            if seen[start] or self._images[start] == start:
                seen[start] = True
                continue
            cycle = []
            point = start
            while not seen[point]:
                seen[point] = True
                cycle.append(point)
                point = int(self._images[point])
            result.append(tuple(cycle))
        return result

    def cycle_type(self) -> Tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def parity(self) -> int:
        """0 for even permutations, 1 for odd."""
        return sum(len(c) - 1 for c in self.cycles()) % 2

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _check_degree(self, other: Permutation) -> None:
        if other.degree != self.degree:
            raise PermutationError(f"Degree mismatch: {self.degree} vs {other.degree}")

    def __mul__(self, other: Permutation) -> Permutation:
        self._check_degree(other)
        return Permutation(other._images[self._images], check=False)

    def inverse(self) -> Permutation:
        inv = np.empty_like(self._images)
        inv[self._images] = np.arange(self.degree)
        return Permutation(inv, check=False)

    def __invert__(self) -> Permutation:
        return self.inverse()

    def __pow__(self, exponent: int) -> Permutation:
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = Permutation.identity(self.degree)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self, g: Permutation) -> Permutation:
        """Return g^-1 * self * g."""
        return g.inverse() * self * g

    def commutator(self, other: Permutation) -> Permutation:
        """Return self^-1 * other^-1 * self * other."""
        return self.inverse() * other.inverse() * self * other

    def __call__(self, point: int) -> int:
        return int(self._images[point])

    def extend(self, degree: int, offset: int = 0) -> Permutation:
        """
        Embed into a larger symmetric group.

        The points of self are shifted by ``offset``; every other point is fixed.
        """
        if offset + self.degree > degree:
            raise PermutationError(f"Cannot place degree {self.degree} at offset {offset} inside degree {degree}")
        images = np.arange(degree)
        images[offset:offset + self.degree] = self._images + offset
        return Permutation(images, check=False)

    # ------------------------------------------------------------------
    # Dunder helpers
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.degree == other.degree and bool(np.array_equal(self._images, other._images))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._images.tobytes())
        return self._hash

    def __repr__(self) -> str:
        body = "".join("(" + " ".join(str(p) for p in c) + ")" for c in self.cycles()) or "()"
        return f"Permutation{body}[{self.degree}]"


def concat(left: Permutation, right: Permutation) -> Permutation:
    """Act with ``left`` on the first points and ``right`` on the following ones."""
    return Permutation(np.concatenate([left.images, right.images + left.degree]), check=False)
