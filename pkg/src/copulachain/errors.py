"""Exception types shared across the package."""


class CopulaChainError(Exception):
    """Base class for all library errors."""


class DomainError(CopulaChainError):
    """An argument lies outside the domain an operation is defined on."""


class EvalError(CopulaChainError):
    """A computation produced a value that violates a known identity."""


class EmptyData(CopulaChainError):
    """An operation received no usable data points."""


class DegenerateData(CopulaChainError):
    """Observed data pins an estimate to the boundary of the parameter space.

    Carries the boundary values so callers can still report them. ``a`` or
    ``p`` may be None when the failing estimator has no notion of that
    parameter.
    """

    def __init__(self, message, a=None, p=None, point=None, method=None):
        super().__init__(message)
        self.a = a
        self.p = p
        self.point = point
        self.method = method
