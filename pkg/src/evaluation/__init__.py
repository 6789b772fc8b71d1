"""
Claims harness for kernelsplit.

This package reproduces the checkable claims end to end:
- ClaimCase dataclass for defining a claim
- get_claim_cases for the canonical claim list
- ClaimSuite for running claims and writing the JSON report
"""

from src.evaluation.claim_case import ClaimCase, ClaimKind
from src.evaluation.claim_cases import get_claim_cases
from src.evaluation.claim_suite import ClaimResult, ClaimSuite

__all__ = ["ClaimCase", "ClaimKind", "ClaimResult", "ClaimSuite", "get_claim_cases"]
