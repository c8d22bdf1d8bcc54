"""Exception hierarchy shared by every module."""


class EffRadiusError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(EffRadiusError):
    """Malformed expression text; ``position`` is a 0-based column."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NumericError(EffRadiusError):
    """A numeric computation left its valid range."""


class DomainError(NumericError):
    """Function evaluated outside its real domain."""

    def __init__(self, message: str, x: float | None = None):
        self.x = x
        if x is not None:
            message = f"{message} at x={x!r}"
        super().__init__(message)


class SeriesError(NumericError):
    """A truncated-series operation is undefined for its input."""


class EstimationError(NumericError):
    """Not enough usable coefficients for an estimator."""
