"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """An input violates a domain constraint (sign, range, finiteness)."""


class SingularityError(ValueError):
    """Evaluation point lies within the guard distance of a pole."""


class ValidityError(ValueError):
    """Inputs are outside the regime where an approximation holds."""


class BracketError(RuntimeError):
    """A root bracket shows no sign change.

    The evaluated endpoints are kept on the instance so callers can report
    them.
    """

    def __init__(self, message, lo=None, hi=None, f_lo=None, f_hi=None):
        super().__init__(message)
        self.lo = lo
        self.hi = hi
        self.f_lo = f_lo
        self.f_hi = f_hi


class EvaluationError(RuntimeError):
    """A sampled function returned a non-finite value."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class ToleranceNotMetError(RuntimeError):
    """Quadrature failed to reach the requested tolerance."""
