"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class A1WeylError(Exception):
    """Base class for every error raised by this package."""


class LengthMismatch(A1WeylError, ValueError):
    pass


class ValidationError(A1WeylError):
    """The input does not describe a valid root datum."""


class MissingZero(ValidationError):
    pass


class NotGenerating(ValidationError):
    pass


class BadLength(ValidationError):
    pass


class ParseError(A1WeylError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class NotARoot(A1WeylError):
    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class IsIndependent(A1WeylError):
    pass


class InvalidWitness(A1WeylError):
    pass


class BudgetExhausted(A1WeylError):
    pass


class RankTooLarge(A1WeylError):
    pass
