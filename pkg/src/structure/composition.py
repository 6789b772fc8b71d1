"""
Composition series, simple-factor naming and the anti-solvable predicate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import galois

from src.config.constants import SimpleTag
from src.config.settings import config
from src.groups.permgroup import PermGroup, coset_action
from src.structure.normal import NormalSubgroup, normal_subgroup_lattice
from src.utils.exceptions import KernelSplitError
from src.utils.logger import logger

# Simple groups recognised by fingerprint, checked in this order
_SIMPLE_CATALOG: Tuple[Tuple[str, SimpleTag, int], ...] = (
    ("A5", SimpleTag.ALT, 5),
    ("PSL(2,7)", SimpleTag.PSL2, 7),
    ("A6", SimpleTag.ALT, 6),
    ("PSL(2,8)", SimpleTag.PSL2, 8),
    ("PSL(2,11)", SimpleTag.PSL2, 11),
    ("PSL(2,13)", SimpleTag.PSL2, 13),
    ("A7", SimpleTag.ALT, 7),
)
_FINGERPRINTS: Dict[str, Tuple[int, Tuple[int, ...]]] = {}


@dataclass(frozen=True)
class SimpleId:
    """Name of a simple group, derived from its order and class sizes."""
    tag: SimpleTag
    parameter: Optional[int] = None
    order: int = 0
    class_count: int = 0

    def __str__(self) -> str:
        if self.tag == SimpleTag.UNKNOWN:
            return f"Unknown(order={self.order}, classes={self.class_count})"
        return f"{self.tag.value}({self.parameter})"


@dataclass
class CompositionFactor:
    order: int
    is_abelian: bool
    simple_id: SimpleId
    quotient: PermGroup = field(repr=False, compare=False)

    def to_dict(self) -> dict:
        return {"order": self.order, "abelian": self.is_abelian, "name": str(self.simple_id)}


@dataclass
class CompositionSeries:
    """
    G = G_0 > G_1 > ... > G_k = 1 with its simple factors G_i / G_(i+1).
    """
    subgroups: List[PermGroup]
    factors: List[CompositionFactor]

    def factor_signature(self) -> List[Tuple[int, bool]]:
        """Sorted (order, abelian) pairs; independent of the chosen series."""
        return sorted((f.order, f.is_abelian) for f in self.factors)

    def names(self) -> List[str]:
        return [str(f.simple_id) for f in self.factors]


def _fingerprint(group: PermGroup) -> Tuple[int, Tuple[int, ...]]:
    return group.order, tuple(group.elements.class_size_multiset())


def _catalog_fingerprint(spec: str) -> Tuple[int, Tuple[int, ...]]:
    if spec not in _FINGERPRINTS:
        from src.catalog.group_spec import make_named

        _FINGERPRINTS[spec] = _fingerprint(make_named(spec))
    return _FINGERPRINTS[spec]


def _catalog_order(spec: str) -> int:
    from src.catalog.constructors import psl2_order
    from math import factorial

    if spec.startswith("A"):
        return factorial(int(spec[1:])) // 2
    return psl2_order(int(spec.split(",")[1].rstrip(")")))


def identify_simple(group: PermGroup) -> SimpleId:
    """
    Name a simple group by (order, class-size multiset).

    Unknown fingerprints are reported as Unknown, never as errors.
    """
    order = group.order
    if galois.is_prime(order):
        return SimpleId(SimpleTag.CYCLIC, order, order, order)
    fingerprint = _fingerprint(group)
    for spec, tag, parameter in _SIMPLE_CATALOG:
        if _catalog_order(spec) == order and _catalog_fingerprint(spec) == fingerprint:
            return SimpleId(tag, parameter, order, len(fingerprint[1]))
    return SimpleId(SimpleTag.UNKNOWN, None, order, len(fingerprint[1]))


def _maximal_normal(group: PermGroup, strategy: str) -> NormalSubgroup:
    lattice = normal_subgroup_lattice(group)
    proper = [n for n in lattice if n.order < group.order]
    maximal = [
        n for n in proper
        if not any(m.order > n.order and n.is_subset_of(m) for m in proper)
    ]
    if strategy == "largest":
        return min(maximal, key=lambda n: (-n.order, n.sort_key()[1]))
    if strategy == "smallest":
        return min(maximal, key=NormalSubgroup.sort_key)
    raise KernelSplitError(f"Unknown composition series strategy '{strategy}'")


def composition_factors(group: PermGroup, strategy: Optional[str] = None) -> CompositionSeries:
    """
    A composition series of G through maximal normal subgroups.

    Args:
        group: the group (order bounded by MAX_ORDER)
        strategy: "largest" picks the largest maximal normal subgroup at each
            step, "smallest" the smallest; defaults to the configured strategy

    Returns:
        CompositionSeries: subgroups and named factors
    """
    strategy = strategy or config.SERIES_STRATEGY
    group.require_order_at_most(config.MAX_ORDER, f"composition series of {group.label()}")
    subgroups = [group]
    factors: List[CompositionFactor] = []
    current = group
    while current.order > 1:
        chosen = _maximal_normal(current, strategy)
        quotient, _ = coset_action(current, chosen.group)
        gens = current.nontrivial_generators
        abelian = all(chosen.group.contains(a.commutator(b)) for a in gens for b in gens)
        factors.append(CompositionFactor(quotient.order, abelian, identify_simple(quotient), quotient))
        subgroups.append(chosen.group)
        current = chosen.group
    logger.debug(f"Composition factors of {group.label()}: {[str(f.simple_id) for f in factors]}")
    return CompositionSeries(subgroups, factors)


def is_anti_solvable(group: PermGroup) -> bool:
    """True iff every composition factor is non-abelian (vacuously true for 1)."""
    return all(not f.is_abelian for f in composition_factors(group).factors)
