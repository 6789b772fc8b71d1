"""
Text descriptions of groups and their construction.

Grammar:
    spec    := "perm:" generators | product
    product := wreath ("x" wreath)*
    wreath  := atom ("wr" "C" k)?
    atom    := ("A"|"S"|"C") n | "PSL(2," q ")" | "(" product ")"

Generators are 1-indexed cycles separated by ';', e.g.
``perm:(1 2 3)(4 5); (1 2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from src.catalog import constructors
from src.groups.permgroup import PermGroup
from src.groups.permutation import Permutation
from src.utils.exceptions import GroupSpecParseError
from src.utils.helpers import format_cycles, parse_generator_list

_TOKEN_RE = re.compile(r"\s*(PSL\(\s*2\s*,\s*\d+\s*\)|[ASC]\d+|wr|x|\(|\))", re.IGNORECASE)
_FAMILIES = {"A": "alternating", "S": "symmetric", "C": "cyclic"}


@dataclass(frozen=True)
class GroupSpec:
    """
    Parsed group description.

    Attributes:
        kind: "A" | "S" | "C" | "PSL2" | "product" | "wreath" | "perm"
        n: degree parameter for A/S/C, field size for PSL2, k for wreath
        children: operand specs for product and wreath
        generators: explicit generators for "perm"
    """
    kind: str
    n: Optional[int] = None
    children: Tuple['GroupSpec', ...] = ()
    generators: Tuple[Permutation, ...] = field(default=(), compare=False)

    def __str__(self) -> str:
        if self.kind in _FAMILIES:
            return f"{self.kind}{self.n}"
        if self.kind == "PSL2":
            return f"PSL(2,{self.n})"
        if self.kind == "product":
            return " x ".join(_bracket(c) for c in self.children)
        if self.kind == "wreath":
            return f"{_bracket(self.children[0])} wr C{self.n}"
        return "perm:" + "; ".join(format_cycles(g) for g in self.generators)


def _bracket(spec: GroupSpec) -> str:
    return f"({spec})" if spec.kind in ("product", "wreath") else str(spec)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text: str) -> List[str]:
        tokens, pos = [], 0
        stripped = text.rstrip()
        while pos < len(stripped):
            match = _TOKEN_RE.match(stripped, pos)
            if not match:
                raise GroupSpecParseError(f"Unexpected input at '{stripped[pos:]}' in group spec '{text}'")
            tokens.append(match.group(1))
            pos = match.end()
        if not tokens:
            raise GroupSpecParseError("Empty group spec")
        return tokens

    def peek(self) -> Optional[str]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        token = self.peek()
        if token is None:
            raise GroupSpecParseError(f"Unexpected end of group spec '{self.text}'")
        self.pos += 1
        return token

    def parse(self) -> GroupSpec:
        spec = self.product()
        if self.peek() is not None:
            raise GroupSpecParseError(f"Unexpected '{self.peek()}' in group spec '{self.text}'")
        return spec

    def product(self) -> GroupSpec:
        parts = [self.wreath()]
        while self.peek() is not None and self.peek().lower() == "x":
            self.take()
            parts.append(self.wreath())
        return parts[0] if len(parts) == 1 else GroupSpec("product", children=tuple(parts))

    def wreath(self) -> GroupSpec:
        base = self.atom()
        if self.peek() is not None and self.peek().lower() == "wr":
            self.take()
            top = self.take()
            if not re.fullmatch(r"[Cc]\d+", top):
                raise GroupSpecParseError(f"Wreath products take a cyclic top group C<k>, got '{top}'")
            return GroupSpec("wreath", n=int(top[1:]), children=(base,))
        return base

    def atom(self) -> GroupSpec:
        token = self.take()
        if token == "(":
            inner = self.product()
            if self.take() != ")":
                raise GroupSpecParseError(f"Unbalanced parentheses in group spec '{self.text}'")
            return inner
        upper = token.upper()
        if upper.startswith("PSL"):
            q = int(re.search(r",\s*(\d+)", token).group(1))
            return GroupSpec("PSL2", n=q)
        if upper[0] in _FAMILIES and upper[1:].isdigit():
            return GroupSpec(upper[0], n=int(upper[1:]))
        raise GroupSpecParseError(f"Unexpected '{token}' in group spec '{self.text}'")


def parse_group_spec(text: str) -> GroupSpec:
    """
    Parse a group description.

    Raises:
        GroupSpecParseError: on malformed input
    """
    stripped = text.strip()
    if stripped.lower().startswith("perm:"):
        gens = parse_generator_list(stripped[5:])
        return GroupSpec("perm", generators=tuple(gens))
    return _Parser(stripped).parse()


def make_named(spec: GroupSpec | str) -> PermGroup:
    """Construct the permutation group a spec describes (canonical generators)."""
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    if spec.kind == "A":
        group = constructors.alternating(spec.n)
    elif spec.kind == "S":
        group = constructors.symmetric(spec.n)
    elif spec.kind == "C":
        group = constructors.cyclic(spec.n)
    elif spec.kind == "PSL2":
        group = constructors.psl2(spec.n)
    elif spec.kind == "product":
        group = make_named(spec.children[0])
        for child in spec.children[1:]:
            group, _ = constructors.direct_product(group, make_named(child))
    elif spec.kind == "wreath":
        group = constructors.wreath_product(make_named(spec.children[0]), spec.n).group
    elif spec.kind == "perm":
        group = PermGroup(list(spec.generators))
    else:
        raise GroupSpecParseError(f"Unknown group spec kind '{spec.kind}'")
    group.name = str(spec)
    return group
