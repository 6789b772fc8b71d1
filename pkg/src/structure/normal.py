"""
Normal and characteristic subgroups of enumerable permutation groups.

Normal subgroups are unions of conjugacy classes; every one of them is a
join of normal closures of class representatives, so the lattice is the
join-closure of those closures.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, TYPE_CHECKING
from weakref import WeakKeyDictionary

import numpy as np

from src.groups.permgroup import PermGroup
from src.utils.exceptions import KernelSplitError
from src.utils.helpers import KeyedLocks
from src.utils.logger import logger

if TYPE_CHECKING:
    from src.autsplit.automorphisms import AutData


@dataclass
class NormalSubgroup:
    """A normal subgroup together with its element indices in the ambient table."""
    group: PermGroup
    indices: np.ndarray
    mask: np.ndarray

    @property
    def order(self) -> int:
        return int(self.indices.size)

    def sort_key(self):
        return (self.order, tuple(int(i) for i in self.indices))

    def is_subset_of(self, other: NormalSubgroup) -> bool:
        return bool(np.all(other.mask[self.indices]))


_LATTICE_CACHE: 'WeakKeyDictionary[PermGroup, List[NormalSubgroup]]' = WeakKeyDictionary()
_LATTICE_LOCKS = KeyedLocks(weak=True)


def normal_subgroup_lattice(group: PermGroup) -> List[NormalSubgroup]:
    """All normal subgroups with element masks, sorted by (order, element indices)."""
    with _LATTICE_LOCKS(group):
        if group not in _LATTICE_CACHE:
            _LATTICE_CACHE[group] = _build_lattice(group)
        return _LATTICE_CACHE[group]


def _build_lattice(group: PermGroup) -> List[NormalSubgroup]:
    table = group.elements
    found: dict = {}

    def add(sub: PermGroup) -> bool:
        mask = table.mask_of(sub)
        key = mask.tobytes()
        if key in found:
            return False
        found[key] = NormalSubgroup(sub, np.flatnonzero(mask), mask)
        return True

    add(group.subgroup([]))
    for rep, _ in group.conjugacy_classes()[1:]:
        add(group.normal_closure([rep]))

    changed = True
    while changed:
        changed = False
        current = list(found.values())
        for i, a in enumerate(current):
            for b in current[i + 1:]:
                if a.is_subset_of(b) or b.is_subset_of(a):
                    continue
                join = group.normal_closure(list(a.group.generators) + list(b.group.generators))
                changed |= add(join)

    result = sorted(found.values(), key=NormalSubgroup.sort_key)
    logger.debug(f"{group.label()} has {len(result)} normal subgroups")
    return result


def normal_subgroups(group: PermGroup) -> List[PermGroup]:
    """All normal subgroups of G, sorted by order (ties by element indices)."""
    return [n.group for n in normal_subgroup_lattice(group)]


def _check_aut(group: PermGroup, aut: AutData) -> None:
    if aut.base_group is not group and not aut.base_group.same_group(group):
        raise KernelSplitError(f"Automorphism data belongs to {aut.base_group.label()}, not {group.label()}")


def characteristic_lattice(group: PermGroup, aut: AutData) -> List[NormalSubgroup]:
    _check_aut(group, aut)
    result = []
    for normal in normal_subgroup_lattice(group):
        if all(np.all(normal.mask[a.images[normal.indices]]) for a in aut.aut_group.generators):
            result.append(normal)
    return result


def characteristic_subgroups(group: PermGroup, aut: AutData) -> List[PermGroup]:
    """Normal subgroups mapped to themselves by every automorphism."""
    return [n.group for n in characteristic_lattice(group, aut)]


def is_characteristically_simple(group: PermGroup, aut: AutData) -> bool:
    """True iff G is nontrivial and its only characteristic subgroups are 1 and G."""
    return group.order > 1 and len(characteristic_lattice(group, aut)) == 2
