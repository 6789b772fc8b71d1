"""
Constructors for the named groups and product constructions.

Generators follow fixed conventions so that element numbering and search
witnesses are reproducible:
- A_n: (0 1 2) with (0 1 ... n-1) for odd n, (1 2 ... n-1) for even n
- S_n: (0 1), (0 1 ... n-1)
- C_n: (0 1 ... n-1)
- PSL(2,q): x -> x+1, x -> w^2 x, x -> -1/x on the projective line,
  with infinity encoded as point q
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Tuple

import numpy as np

from src.catalog.field import SmallField
from src.config.constants import PSL2_WHITELIST
from src.groups.homomorphism import GroupHom
from src.groups.permgroup import PermGroup
from src.groups.permutation import Permutation, concat
from src.utils.exceptions import GroupSpecParseError, HomomorphismError
from src.utils.logger import logger


def _cycle(points: List[int], degree: int) -> Permutation:
    return Permutation.from_cycles([points], degree)


def alternating(n: int) -> PermGroup:
    if n < 1:
        raise GroupSpecParseError(f"A_n needs n >= 1, got {n}")
    if n < 3:
        return PermGroup([], degree=n, name=f"A{n}")
    if n % 2:
        gens = [_cycle([0, 1, 2], n), _cycle(list(range(n)), n)]
    else:
        gens = [_cycle([0, 1, 2], n), _cycle(list(range(1, n)), n)]
    return PermGroup(gens, name=f"A{n}")


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise GroupSpecParseError(f"S_n needs n >= 1, got {n}")
    if n == 1:
        return PermGroup([], degree=1, name="S1")
    return PermGroup([_cycle([0, 1], n), _cycle(list(range(n)), n)], name=f"S{n}")


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise GroupSpecParseError(f"C_n needs n >= 1, got {n}")
    if n == 1:
        return PermGroup([], degree=1, name="C1")
    return PermGroup([_cycle(list(range(n)), n)], name=f"C{n}")


def psl2_order(q: int) -> int:
    return q * (q * q - 1) // gcd(2, q - 1)


def psl2(q: int) -> PermGroup:
    """
    PSL(2,q) acting on the q+1 points of the projective line.

    Raises:
        GroupSpecParseError: if q is not a whitelisted prime power
    """
    if q not in PSL2_WHITELIST:
        raise GroupSpecParseError(f"PSL(2,{q}) is outside the supported fields {PSL2_WHITELIST}")
    field = SmallField(q)
    GF = field.GF
    x = GF.elements
    nonzero = x[1:]
    infinity = q

    translate = np.append(field.encode(x + GF(1)), infinity)

    k = GF(field.primitive_element) ** 2
    scale = np.append(field.encode(x * k), infinity)

    invert = np.empty(q + 1, dtype=np.int64)
    invert[0] = infinity
    invert[infinity] = 0
    invert[1:q] = field.encode(-(GF(1) / nonzero))

    gens = [Permutation(translate), Permutation(scale), Permutation(invert)]
    group = PermGroup([g for g in gens if not g.is_identity()], degree=q + 1, name=f"PSL(2,{q})")
    if group.order != psl2_order(q):
        raise GroupSpecParseError(f"PSL(2,{q}) generators produced order {group.order}, expected {psl2_order(q)}")
    logger.debug(f"Constructed PSL(2,{q}) of order {group.order}")
    return group


# ============================================================================
# PRODUCTS
# ============================================================================

def direct_product(first: PermGroup, second: PermGroup) -> Tuple[PermGroup, Tuple[GroupHom, GroupHom]]:
    """
    G x H acting on the disjoint union of the two point sets.

    Returns:
        (product, (embed_first, embed_second))
    """
    n, m = first.degree, second.degree
    left = [g.extend(n + m) for g in first.generators]
    right = [h.extend(n + m, offset=n) for h in second.generators]
    name = None
    if first.name and second.name:
        name = f"{_wrap(first.name)} x {_wrap(second.name)}"
    product = PermGroup(left + right, degree=n + m, name=name)
    embed_first = GroupHom(first, product, left, check=False)
    embed_second = GroupHom(second, product, right, check=False)
    return product, (embed_first, embed_second)


def _wrap(name: str) -> str:
    return f"({name})" if " " in name else name


@dataclass
class SemidirectProduct:
    """
    N x| H with both factors marked.

    Attributes:
        group: the product as a permutation group
        normal: the copy of N (normal subgroup)
        complement: the copy of H
        embed_normal: N -> group
        embed_complement: H -> group
        realization: "normalizer" or "regular"
    """
    group: PermGroup
    normal: PermGroup
    complement: PermGroup
    embed_normal: GroupHom
    embed_complement: GroupHom
    realization: str


def _regular_perms(group: PermGroup) -> List[Permutation]:
    """Right regular representation of the generators on element indices."""
    table = group.elements
    return [Permutation.from_array(table.right_mult(g)) for g in group.generators]


def semidirect_product(normal: PermGroup, complement: PermGroup, action: GroupHom,
                       realization: str = "auto", name: Optional[str] = None) -> SemidirectProduct:
    """
    Build N x| H from an action H -> Aut(N).

    The action may be given in two ways:
    - "normalizer": images are permutations of N's points normalizing N;
      the product acts on N's points plus the regular points of H
    - "regular": images are automorphisms of N as permutations of N's
      element indices; the product acts on |N| + |H| points, N by right
      multiplication

    Raises:
        HomomorphismError: if the action is not a homomorphism into Aut(N)
    """
    if action.source is not complement and not action.source.same_group(complement):
        raise HomomorphismError("Action source differs from the complement group")
    degree = action.target.degree
    if realization == "auto":
        if degree == normal.degree:
            realization = "normalizer"
        elif degree == normal.order:
            realization = "regular"
        else:
            raise HomomorphismError(
                f"Action target degree {degree} matches neither N's degree {normal.degree} nor |N|={normal.order}"
            )
    if not action.is_valid():
        raise HomomorphismError("Action generator images do not define a homomorphism")

    if realization == "normalizer":
        for img in action.images:
            if not all(normal.contains(n.conjugate(img)) for n in normal.generators):
                raise HomomorphismError(f"{img!r} does not normalize {normal.label()}")
        base_normal = list(normal.generators)
        base_degree = normal.degree
    elif realization == "regular":
        table = normal.elements
        base_normal = _regular_perms(normal)
        for img in action.images:
            _require_automorphism(table, normal, img)
        base_degree = normal.order
    else:
        raise HomomorphismError(f"Unknown realization '{realization}'")

    h_regular = _regular_perms(complement)
    total = base_degree + complement.order
    normal_gens = [g.extend(total) for g in base_normal]
    complement_gens = [concat(img, reg) for img, reg in zip(action.images, h_regular)]
    group = PermGroup(normal_gens + complement_gens, degree=total, name=name)
    normal_copy = group.subgroup(normal_gens)
    complement_copy = group.subgroup(complement_gens)
    expected = normal.order * complement.order
    if group.order != expected:
        raise HomomorphismError(f"Semidirect product has order {group.order}, expected {expected}")
    return SemidirectProduct(
        group=group,
        normal=normal_copy,
        complement=complement_copy,
        embed_normal=GroupHom(normal, group, normal_gens, check=False),
        embed_complement=GroupHom(complement, group, complement_gens, check=False),
        realization=realization,
    )


def _require_automorphism(table, normal: PermGroup, img: Permutation) -> None:
    phi = img.images
    for g in normal.generators:
        g_idx = table.index_of(g)
        image_g = table.permutation(int(phi[g_idx]))
        if not np.array_equal(phi[table.right_mult(g)], table.right_mult(image_g)[phi]):
            raise HomomorphismError(f"{img!r} is not an automorphism of {normal.label()}")


def wreath_product(base: PermGroup, k: int) -> SemidirectProduct:
    """
    base wr C_k: k copies of the base permuted cyclically.
    """
    if k < 1:
        raise GroupSpecParseError(f"Wreath product needs k >= 1, got {k}")
    power = base
    for _ in range(k - 1):
        power, _ = direct_product(power, base)
    n = base.degree
    # block i -> block i+1
    block_shift = (np.arange(n * k) + n) % (n * k)
    top = cyclic(k)
    action = GroupHom(top, PermGroup([Permutation(block_shift)]), [Permutation(block_shift)], check=False)
    name = f"{_wrap(base.name)} wr C{k}" if base.name else None
    return semidirect_product(power, top, action, realization="normalizer", name=name)
