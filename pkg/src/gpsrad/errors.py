"""Exception types shared across the package."""


class GPSError(Exception):
    """Base class for all package errors."""


class DomainError(GPSError, ValueError):
    """An argument lies outside the domain of the function."""


class ConvergenceError(GPSError, ArithmeticError):
    """An iterative numerical procedure failed to converge."""


class PotentialEvaluationError(GPSError, ArithmeticError):
    """The potential produced a non-finite value."""


class ExpressionError(GPSError, ValueError):
    """A potential expression could not be parsed or evaluated.

    ``offset`` is the byte offset into the source string where the problem was
    detected, or ``None`` when no single position applies.
    """

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
