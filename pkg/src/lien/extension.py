"""
The pullback extension of a lien and its sections.

E = {(a, gamma) in Aut(F) x Gamma : class(a) = kappa(gamma)} acts faithfully
on |F| + |Gamma| points: a on the element indices of F, gamma by right
multiplication on a regular copy of Gamma shifted by |F|.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from src.autsplit.lifting import LiftResult, find_lift
from src.groups.homomorphism import GroupHom
from src.groups.permgroup import PermGroup
from src.groups.permutation import Permutation
from src.lien.lien import Lien
from src.utils.exceptions import LienError
from src.utils.helpers import Deadline
from src.utils.logger import logger


@dataclass
class Extension:
    """
    Attributes:
        E: the extension group on |F| + |Gamma| points
        kernel_embedding: F -> E, f -> (c_f, 1)
        projection: E -> Gamma
        section: Gamma -> E when known
        lien: the lien the extension realizes
    """
    E: PermGroup
    kernel_embedding: GroupHom
    projection: GroupHom
    section: Optional[GroupHom]
    lien: Lien

    @property
    def split_point(self) -> int:
        """First point of the regular Gamma block."""
        return self.lien.aut.degree

    def element(self, automorphism: np.ndarray, gamma_index: int) -> Permutation:
        """The pair (a, gamma) as a permutation of E's points."""
        regular = self.lien.gamma_table.table[:, gamma_index]
        return Permutation(np.concatenate([automorphism, regular + self.split_point]))

    def split(self, element: Permutation) -> Tuple[np.ndarray, int]:
        """(a, gamma index) for an element of E."""
        n = self.split_point
        images = element.images
        return images[:n].copy(), int(images[n] - n)

    def section_from_lift(self, lift: LiftResult) -> GroupHom:
        """Section Gamma -> E built from a lift Gamma -> Aut(F)."""
        if not lift.found:
            raise LienError("Lift search failed; no section to build")
        table = self.lien.gamma_table
        images = []
        for g in self.lien.gamma.generators:
            idx = table.index_of(g)
            images.append(self.element(lift.section[idx], idx))
        return GroupHom(self.lien.gamma, self.E, images, check=False)


def pullback_extension(lien: Lien) -> Extension:
    """
    Realize the unique extension class of a centerless lien.

    Raises:
        LienError: if the constructed group does not have order |F| |Gamma|
    """
    aut, table = lien.aut, lien.gamma_table
    F, gamma = lien.F, lien.gamma
    n = aut.degree
    identity_gamma = Permutation.identity(gamma.degree)

    def element(a: np.ndarray, g: int) -> Permutation:
        return Permutation(np.concatenate([a, table.table[:, g] + n]))

    f_images = [element(aut.conj(aut.table.index_of(f)), 0) for f in F.generators]
    top = []
    for g in gamma.generators:
        idx = table.index_of(g)
        top.append(element(aut.representative(int(lien.kappa[idx])), idx))
    E = PermGroup(f_images + top, degree=n + table.size, name=f"E{lien.describe()}")
    if E.order != F.order * gamma.order:
        raise LienError(f"Pullback group has order {E.order}, expected {F.order * gamma.order}")

    kernel_embedding = GroupHom(F, E, f_images, check=False)
    projection = GroupHom(E, gamma, [identity_gamma] * len(f_images) + list(gamma.generators), check=False)
    logger.debug(f"Pullback extension of {lien.describe()} has order {E.order}")
    return Extension(E, kernel_embedding, projection, None, lien)


def neutral_lift(lien: Lien, deadline: Optional[Deadline] = None) -> LiftResult:
    """Lift of kappa to Gamma -> Aut(F); found iff the lien is neutral."""
    return find_lift(lien.aut, lien.gamma_table.table, lien.kappa, deadline)


def is_neutral(lien: Lien, deadline: Optional[Deadline] = None) -> Tuple[bool, Optional[GroupHom]]:
    """
    Decide whether the extension class of a lien is neutral.

    A complement to F in E is the same as a lift Gamma -> Aut(F) of kappa, so
    the search runs on Aut(F) cosets and the section is then placed in E.

    Returns:
        (neutral, section): section Gamma -> E when neutral
    """
    lift = neutral_lift(lien, deadline)
    logger.info(f"Lien {lien.describe()} neutral: {lift.found}")
    if not lift.found:
        return False, None
    extension = pullback_extension(lien)
    section = extension.section_from_lift(lift)
    extension.section = section
    return True, section


def verify_lift_section(lien: Lien, section: Sequence[np.ndarray]) -> bool:
    """
    Pointwise checks on a Gamma-indexed list of automorphisms of F:
    homomorphism over Gamma x Gamma, classes follow kappa, identity only at 1.
    """
    aut, table = lien.aut, lien.gamma_table
    k = table.size
    if len(section) != k:
        return False
    for x in range(k):
        if not aut.is_automorphism(section[x]):
            return False
        if aut.class_of(section[x]) != int(lien.kappa[x]):
            return False
    for x in range(k):
        for y in range(k):
            # s(x) then s(y)
            if not np.array_equal(section[int(table.table[x, y])], section[y][section[x]]):
                return False
    return bool(np.array_equal(section[0], np.arange(aut.degree)))


def verify_section(extension: Extension, section: GroupHom) -> bool:
    """
    Re-verify a section Gamma -> E: every image lies in E, projects back to
    its argument, meets the F image only at the identity, and the map is a
    homomorphism over all of Gamma x Gamma.
    """
    lien = extension.lien
    table = lien.gamma_table
    n = extension.split_point
    if not all(extension.E.contains(img) for img in section.images):
        return False
    if not section.is_valid():
        return False
    values = [section(table.permutation(x)) for x in range(table.size)]
    for x, value in enumerate(values):
        if not extension.E.contains(value):
            return False
        _, gamma_index = extension.split(value)
        if gamma_index != x:
            return False
        if value.is_identity() != (x == 0):
            return False
        if not np.array_equal(value.images[n:] - n, table.table[:, x]):
            return False
    for x in range(table.size):
        for y in range(table.size):
            if values[int(table.table[x, y])] != values[x] * values[y]:
                return False
    return True