"""
ClaimCase dataclass for the reproduction harness.

Defines the structure of a single checkable claim.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional


class ClaimKind(Enum):
    """Kinds of claims the suite knows how to check."""
    AUT_SPLIT = "aut_split"
    LIE_CROSSCHECK = "lie_crosscheck"
    COUNTEREXAMPLE = "counterexample"
    UNIQUENESS = "uniqueness"
    SWEEP = "sweep"
    STRUCTURE = "structure"


@dataclass
class ClaimCase:
    """
    A single claim to reproduce.

    Attributes:
        key: stable identifier used to sort results (e.g. "sweep:A5|C2")
        kind: which check runs the claim
        params: inputs of the check (group specs, field sizes, ...)
        expected: the expected outcome, compared with the computed one
        description: optional human-readable statement of the claim
    """
    key: str
    kind: ClaimKind
    params: Dict[str, Any] = field(default_factory=dict)
    expected: Any = True
    description: Optional[str] = None

    def __post_init__(self):
        """Validate claim data."""
        if not self.key or not self.key.strip():
            raise ValueError("ClaimCase key cannot be empty")
        if not isinstance(self.kind, ClaimKind):
            raise ValueError(f"ClaimCase kind must be a ClaimKind, got {self.kind!r}")
