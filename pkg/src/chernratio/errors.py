"""Exception hierarchy shared by all modules."""


class ChernRatioError(Exception):
    """Base class for every error raised by the toolkit."""


class ValidationError(ChernRatioError, ValueError):
    """Input data violates a documented precondition."""


class InfeasibleError(ChernRatioError, ValueError):
    """The request is mathematically impossible (e.g. a target outside the attainable range)."""


class NonterminationError(ChernRatioError, RuntimeError):
    """An iterative search exhausted its step budget."""


class ConsistencyError(ChernRatioError, AssertionError):
    """Two computation routes disagree; indicates a bug, not a user error."""
