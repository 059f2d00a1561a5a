"""Exception types raised across the package."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class BranchCutError(DomainError):
    """Point lies on the cut (-inf, -1] of the principal logarithm of 1 + z."""


class TableTooShortError(IndexError):
    """A coefficient table does not reach the requested index."""


class CostLimitError(ValueError):
    """Request exceeds the configured work ceiling of an exponential-cost routine."""


class PrecisionError(ValueError):
    """Working precision cannot absorb the error amplification of a computation."""


class NonConvergenceError(ArithmeticError):
    """Adaptive refinement reached its cap without meeting the tolerance."""

    def __init__(self, message, deltas=()):
        super().__init__(message)
        self.deltas = tuple(deltas)


class PrefixBoundError(ArithmeticError):
    """An observed coefficient breaks the |a_j| <= 1 assumption of the e tail model."""
