"""Exception types shared across turanlab."""


class TuranLabError(Exception):
    """Base class for all library errors."""


class ParseError(TuranLabError):
    """Malformed input text."""


class ValidationError(TuranLabError):
    """Well-formed input that violates a structural invariant."""


class InvalidArgument(TuranLabError, ValueError):
    pass


class DimensionMismatch(TuranLabError, ValueError):
    pass


class BudgetExceeded(TuranLabError):
    """A search stopped before exhausting its space.

    ``partial`` carries whatever best-so-far result the search had, if any.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class NoSuchDesign(TuranLabError):
    pass


class InvalidAssignment(TuranLabError, ValueError):
    pass


class UnsupportedBase(TuranLabError):
    pass


class MemoryBudget(TuranLabError):
    pass


class InconsistentWeights(TuranLabError, ValueError):
    pass


class InvalidPair(TuranLabError, ValueError):
    pass


class NonConvergenceWarning(RuntimeWarning):
    """The Lagrangian ascent hit its iteration cap before reaching ``tol``."""
