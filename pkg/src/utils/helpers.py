"""
Helper utility functions.

This module contains small utilities shared across the package:
- 1-indexed cycle notation input and output
- Cooperative deadlines for long searches
- Compact formatting helpers for reports
- Per-key locks for caches shared between sweep threads
"""

from __future__ import annotations

import re
import threading
import time
from typing import Hashable, Iterable, List, Optional
from weakref import WeakKeyDictionary

from src.groups.permutation import Permutation
from src.utils.exceptions import GroupSpecParseError, SearchTimeout

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def format_cycles(perm: Permutation) -> str:
    """
    Render a permutation in 1-indexed cycle notation.

    Args:
        perm: Permutation to render

    Returns:
        str: e.g. "(1 2 3)(4 5)"; the identity renders as "()"

    Example:
        >>> format_cycles(Permutation([1, 2, 0, 4, 3]))
        '(1 2 3)(4 5)'
    """
    cycles = perm.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(p + 1) for p in cycle) + ")" for cycle in cycles)


def parse_cycles(text: str, degree: Optional[int] = None) -> Permutation:
    """
    Parse 1-indexed cycle notation such as "(1 2 3)(4 5)".

    Args:
        text: cycle notation; "()" or an empty string is the identity
        degree: number of points; defaults to the largest point mentioned

    Returns:
        Permutation: the parsed permutation on 0-indexed points

    Raises:
        GroupSpecParseError: if the notation is malformed
    """
    stripped = text.strip()
    leftover = _CYCLE_RE.sub("", stripped).strip()
    if leftover:
        raise GroupSpecParseError(f"Unexpected text '{leftover}' in cycle notation '{text}'")

    cycles: List[List[int]] = []
    for body in _CYCLE_RE.findall(stripped):
        tokens = body.replace(",", " ").split()
        try:
            points = [int(t) for t in tokens]
        except ValueError as e:
            raise GroupSpecParseError(f"Non-integer point in cycle '({body})'") from e
        if any(p < 1 for p in points):
            raise GroupSpecParseError(f"Points are 1-indexed, got cycle '({body})'")
        cycles.append([p - 1 for p in points])

    largest = max((p + 1 for c in cycles for p in c), default=1)
    degree = degree or largest
    if degree < largest:
        raise GroupSpecParseError(f"Cycle notation '{text}' mentions point {largest} beyond degree {degree}")
    try:
        return Permutation.from_cycles(cycles, degree)
    except Exception as e:
        raise GroupSpecParseError(f"Invalid cycle notation '{text}': {e}") from e


def parse_generator_list(text: str) -> List[Permutation]:
    """Parse ';'-separated generators, padding every one to the common degree."""
    parts = [p for p in (s.strip() for s in text.split(";")) if p]
    if not parts:
        raise GroupSpecParseError("Generator list is empty")
    parsed = [parse_cycles(p) for p in parts]
    degree = max(p.degree for p in parsed)
    return [p if p.degree == degree else p.extend(degree) for p in parsed]


def format_generators(perms: Iterable[Permutation]) -> List[str]:
    return [format_cycles(p) for p in perms]


class Deadline:
    """
    Cooperative timeout for exhaustive searches.

    Searches call ``check()`` inside their loops; a zero or negative budget
    means no limit.
    """

    def __init__(self, seconds: float = 0.0, label: str = "search"):
        self.label = label
        self.seconds = seconds
        self._start = time.monotonic()
        self._expires = self._start + seconds if seconds and seconds > 0 else None

    def expired(self) -> bool:
        return self._expires is not None and time.monotonic() > self._expires

    def check(self) -> None:
        if self.expired():
            raise SearchTimeout(f"{self.label} exceeded {self.seconds:.1f}s")


def format_seconds(seconds: float) -> str:
    return f"{seconds * 1000:.0f} ms" if seconds < 1 else f"{seconds:.2f} s"


class KeyedLocks:
    """
    One reentrant lock per cache key, created on first use.

    With ``weak=True`` the locks are held in a WeakKeyDictionary so that
    keying by a group or Aut object does not keep it alive.
    """

    def __init__(self, weak: bool = False):
        self._locks = WeakKeyDictionary() if weak else {}
        self._guard = threading.Lock()

    def __call__(self, key: Hashable) -> threading.RLock:
        with self._guard:
            lock = self._locks.get(key)
            if lock is None:
                lock = threading.RLock()
                self._locks[key] = lock
            return lock
