"""
Custom exception classes for kernelsplit.

Every error raised by the library derives from KernelSplitError so the CLI
can translate it into an exit code in one place.
"""


class KernelSplitError(Exception):
    """
    Base exception class for all kernelsplit errors.

    Catching this type catches every library error while subclasses keep
    the failure kind visible.
    """
    pass


class GroupSpecParseError(KernelSplitError):
    """
    Raised when a group description cannot be parsed.

    This exception is raised by the catalog parser when:
    - A family name is unknown (e.g. "B5")
    - Cycle notation is malformed or uses point 0
    - A PSL(2,q) field size is outside the supported list
    """
    pass


class PermutationError(KernelSplitError):
    """
    Raised when permutation data is invalid.

    This exception is raised when:
    - An image list is not a bijection of 0..n-1
    - Two permutations of different degree are combined
    """
    pass


class OrderBoundExceeded(KernelSplitError):
    """
    Raised when a group is too large for an enumeration routine.

    The relevant bound is a Config value and can be raised from the
    environment.
    """

    def __init__(self, what: str, order: int, bound: int):
        self.what = what
        self.order = order
        self.bound = bound
        super().__init__(f"{what}: order {order} exceeds bound {bound}")


class NotNormalError(KernelSplitError):
    """Raised when a subgroup expected to be normal is not."""
    pass


class HomomorphismError(KernelSplitError):
    """
    Raised when generator images do not define a homomorphism.

    This exception is raised when:
    - The number of images differs from the number of generators
    - A defining relation of the source is not respected
    - An action does not consist of automorphisms
    """
    pass


class AutomorphismSearchError(KernelSplitError):
    """
    Raised when the automorphism search cannot start or finish.

    This exception is raised when:
    - No generating set of size at most 3 is found
    - The Cayley table cannot be built
    """
    pass


class SearchTimeout(KernelSplitError):
    """Raised when a cooperative search deadline expires."""
    pass


class LieParamsError(KernelSplitError):
    """
    Raised when Lie-type parameters are invalid.

    This exception is raised when:
    - p is not prime or m < 1
    - The rank is outside the family's range
    - The group is one of the small non-simple cases
    """
    pass


class LienError(KernelSplitError):
    """
    Raised when a lien cannot be formed.

    This exception is raised when:
    - kappa is not a homomorphism into Out(F)
    - F has nontrivial center
    - An outer class label is unknown
    """
    pass


class HypothesisError(KernelSplitError):
    """
    Raised when the tower-splitting hypotheses do not hold.

    The kernel must be anti-solvable with aut-split composition factors.
    """
    pass


class ClaimFailed(KernelSplitError):
    """Raised when a reproduced claim does not hold."""

    def __init__(self, claim: str, detail: str = ""):
        self.claim = claim
        self.detail = detail
        self.report = None
        super().__init__(f"claim '{claim}' failed" + (f": {detail}" if detail else ""))
