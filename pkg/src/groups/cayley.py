"""
Element tables and Cayley tables for enumerable permutation groups.

Elements are sorted lexicographically by their image arrays, so index 0 is
always the identity and the numbering depends only on the element set, not
on the generators used to build the group. Lookups go through the images of
the stabilizer-chain base points, which determine an element uniquely.
"""

from __future__ import annotations

from functools import cached_property
from typing import Dict, Iterable, List, Sequence

import numpy as np

from src.groups.permgroup import PermGroup
from src.groups.permutation import Permutation
from src.utils.exceptions import PermutationError
from src.utils.logger import logger

_KEY_LIMIT = 2 ** 62
_CHUNK_ENTRIES = 4_000_000


def orbit_labels(size: int, maps: Sequence[np.ndarray]) -> np.ndarray:
    """
    Label the orbits of the group generated by index permutations.

    Args:
        size: number of points
        maps: permutations of range(size) as integer arrays

    Returns:
        np.ndarray: for every point, the smallest point of its orbit
    """
    labels = np.arange(size, dtype=np.int64)
    if not maps:
        return labels
    while True:
        new = labels.copy()
        for m in maps:
            np.minimum(new, labels[m], out=new)
            new[m] = np.minimum(new[m], labels)
        new = new[new]
        if np.array_equal(new, labels):
            return labels
        labels = new


class ElementTable:
    """
    Canonically indexed elements of a permutation group.

    Attributes:
        group: the enumerated group
        perms: (size x degree) array of image arrays, identity first
        base: base points used as lookup keys
    """

    def __init__(self, group: PermGroup):
        self.group = group
        self.base = np.array(group.base or [0], dtype=np.int64)
        perms = self._enumerate(group)
        order = np.lexsort(perms.T[::-1])
        self.perms = perms[order]
        self.size = int(self.perms.shape[0])
        self._radix = group.degree
        self._use_int_keys = group.degree ** len(self.base) < _KEY_LIMIT
        self._build_lookup()
        logger.debug(f"Enumerated {self.size} elements of {group.label()}")

    @staticmethod
    def _enumerate(group: PermGroup) -> np.ndarray:
        dtype = np.int32
        elements = np.arange(group.degree, dtype=dtype)[None, :]
        for level in reversed(group.chain.levels()):
            coset_reps = [u.images.astype(dtype) for u in level.transversal.values()]
            elements = np.concatenate([u[elements] for u in coset_reps], axis=0)
        return elements

    # ------------------------------------------------------------------
    # Lookup
    # ------------------------------------------------------------------

    def _keys(self, base_images: np.ndarray) -> np.ndarray:
        keys = np.zeros(base_images.shape[:-1], dtype=np.int64)
        for i in range(base_images.shape[-1] - 1, -1, -1):
            keys = keys * self._radix + base_images[..., i]
        return keys

    def _build_lookup(self) -> None:
        base_images = self.perms[:, self.base].astype(np.int64)
        if self._use_int_keys:
            keys = self._keys(base_images)
            self._key_order = np.argsort(keys, kind="stable")
            self._sorted_keys = keys[self._key_order]
        else:
            self._byte_index: Dict[bytes, int] = {row.tobytes(): i for i, row in enumerate(base_images)}

    def indices_from_base_images(self, base_images: np.ndarray, check: bool = True) -> np.ndarray:
        """Indices of the elements whose base-point images are the given rows."""
        base_images = np.asarray(base_images, dtype=np.int64)
        if self._use_int_keys:
            keys = self._keys(base_images)
            pos = np.searchsorted(self._sorted_keys, keys)
            pos = np.minimum(pos, self.size - 1)
            if check and not np.array_equal(self._sorted_keys[pos], keys):
                raise PermutationError(f"Element not found in {self.group.label()}")
            return self._key_order[pos]
        flat = base_images.reshape(-1, base_images.shape[-1])
        try:
            found = np.array([self._byte_index[row.tobytes()] for row in flat], dtype=np.int64)
        except KeyError as e:
            raise PermutationError(f"Element not found in {self.group.label()}") from e
        return found.reshape(base_images.shape[:-1])

    def index_of(self, perm: Permutation) -> int:
        idx = int(self.indices_from_base_images(perm.images[self.base][None, :])[0])
        if not np.array_equal(self.perms[idx], perm.images):
            raise PermutationError(f"{perm!r} is not an element of {self.group.label()}")
        return idx

    def indices_of(self, perms: Iterable[Permutation]) -> np.ndarray:
        return np.array([self.index_of(p) for p in perms], dtype=np.int64)

    def permutation(self, index: int) -> Permutation:
        return Permutation.from_array(self.perms[index])

    def subgroup_indices(self, subgroup: PermGroup) -> np.ndarray:
        """Sorted indices of the elements of a subgroup."""
        rows = subgroup.elements.perms[:, self.base]
        return np.sort(self.indices_from_base_images(rows))

    def mask_of(self, subgroup: PermGroup) -> np.ndarray:
        mask = np.zeros(self.size, dtype=bool)
        mask[self.subgroup_indices(subgroup)] = True
        return mask

    # ------------------------------------------------------------------
    # Multiplication maps
    # ------------------------------------------------------------------

    def right_mult(self, g: Permutation) -> np.ndarray:
        """x -> index of x * g."""
        return self.indices_from_base_images(g.images[self.perms[:, self.base]])

    def left_mult(self, g: Permutation) -> np.ndarray:
        """x -> index of g * x."""
        return self.indices_from_base_images(self.perms[:, g.images[self.base]])

    def conjugation(self, g: Permutation) -> np.ndarray:
        """x -> index of g^-1 * x * g."""
        g_inv = g.inverse()
        return self.indices_from_base_images(g.images[self.perms[:, g_inv.images[self.base]]])

    @cached_property
    def inverse(self) -> np.ndarray:
        rows = np.arange(self.size)[:, None]
        inv_perms = np.empty_like(self.perms)
        inv_perms[rows, self.perms] = np.arange(self.group.degree, dtype=self.perms.dtype)[None, :]
        return self.indices_from_base_images(inv_perms[:, self.base])

    @cached_property
    def orders(self) -> np.ndarray:
        """Element orders, computed by powering on the base points."""
        orders = np.zeros(self.size, dtype=np.int64)
        target = self.base[None, :]
        current = self.perms[:, self.base].astype(np.int64)
        rows = np.arange(self.size)[:, None]
        k = 1
        orders[0] = 1
        while True:
            done = (orders == 0) & np.all(current == target, axis=1)
            orders[done] = k
            if np.all(orders > 0):
                return orders
            current = self.perms[rows, current]
            k += 1

    @cached_property
    def class_ids(self) -> np.ndarray:
        """For every element, the smallest index in its conjugacy class."""
        maps = [self.conjugation(g) for g in self.group.nontrivial_generators]
        return orbit_labels(self.size, maps)

    @cached_property
    def class_sizes(self) -> np.ndarray:
        """For every element, the size of its conjugacy class."""
        _, inverse_idx, counts = np.unique(self.class_ids, return_inverse=True, return_counts=True)
        return counts[inverse_idx]

    def class_size_multiset(self) -> List[int]:
        _, counts = np.unique(self.class_ids, return_counts=True)
        return sorted(int(c) for c in counts)

    def coset_labels(self, subgroup: PermGroup) -> np.ndarray:
        """For every element x, the smallest index in the coset x*H."""
        maps = [self.right_mult(h) for h in subgroup.nontrivial_generators]
        return orbit_labels(self.size, maps)


class CayleyTable(ElementTable):
    """
    Element table plus the full multiplication table.

    ``table[i, j]`` is the index of ``element_i * element_j``.
    """

    def __init__(self, group: PermGroup):
        super().__init__(group)
        self.table = self._build_table()
        self.generator_indices = self.indices_of(group.nontrivial_generators)
        logger.debug(f"Built {self.size}x{self.size} Cayley table for {group.label()}")

    def _build_table(self) -> np.ndarray:
        n = self.size
        base_images = self.perms[:, self.base]
        table = np.empty((n, n), dtype=np.int32)
        step = max(1, _CHUNK_ENTRIES // max(1, n * len(self.base)))
        for start in range(0, n, step):
            cols = self.perms[start:start + step]
            # (x * e_j)(b) = e_j(x(b))
            products = cols[:, base_images]
            table[:, start:start + step] = self.indices_from_base_images(products).T
        return table

    def conj_array(self, g: int) -> np.ndarray:
        """The inner automorphism x -> g^-1 x g as an index array."""
        return self.table[self.table[self.inverse[g]], g]

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def power(self, a: int, k: int) -> int:
        result = 0
        for _ in range(k % int(self.orders[a])):
            result = int(self.table[result, a])
        return result

    def generated_size(self, generators: Sequence[int], limit: int | None = None) -> int:
        """Size of the subgroup generated by element indices (closure by right multiplication)."""
        reached = np.zeros(self.size, dtype=bool)
        reached[0] = True
        frontier = np.array([0], dtype=np.int64)
        count = 1
        while frontier.size:
            nxt = np.unique(np.concatenate([self.table[frontier, g] for g in generators]))
            nxt = nxt[~reached[nxt]]
            reached[nxt] = True
            count += int(nxt.size)
            if limit is not None and count > limit:
                return count
            frontier = nxt
        return count
