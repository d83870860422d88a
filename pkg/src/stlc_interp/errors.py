"""
errors.py - Domain-specific exceptions for stlc_interp.

All exceptions inherit from StlcError for unified handling.
Each exception type represents a distinct failure mode.
"""

from typing import Any


class StlcError(Exception):
    """Base exception for all stlc_interp errors."""

    def __init__(self, message: str, context: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.context = context or {}

    def __str__(self) -> str:
        if self.context:
            context_str = ", ".join(f"{k}={v!r}" for k, v in self.context.items())
            return f"{self.message} [{context_str}]"
        return self.message


class InvariantViolationError(StlcError):
    """
    Raised when a core invariant is violated.

    This is a critical error indicating a bug in the library,
    never a problem with the caller's input.
    """

    def __init__(self, invariant: str, details: str) -> None:
        super().__init__(
            f"Invariant violation: {invariant}. {details}",
            context={"invariant": invariant, "details": details},
        )
        self.invariant = invariant
        self.details = details


class ValidationError(StlcError):
    """
    Raised when a syntax value is malformed.

    This includes negative de Bruijn indices, projection indices
    outside {1, 2} and injections annotated with a non-sum type.
    """

    def __init__(self, message: str, field: str | None = None, value: Any = None) -> None:
        context = {}
        if field is not None:
            context["field"] = field
        if value is not None:
            context["value"] = repr(value)[:100]
        super().__init__(message, context=context)
        self.field = field
        self.value = value


class LanguageError(StlcError):
    """Raised when a language mentions base names it does not declare."""

    def __init__(self, message: str, constant: str | None = None) -> None:
        context = {}
        if constant is not None:
            context["constant"] = constant
        super().__init__(message, context=context)
        self.constant = constant


class TypeCheckError(StlcError):
    """
    Raised when inference fails on an ill-typed term.

    `path` is the sequence of child indices leading from the root
    to the subterm where inference failed.
    """

    def __init__(self, message: str, path: tuple[int, ...] = (), term: Any = None) -> None:
        context: dict[str, Any] = {"path": list(path)}
        if term is not None:
            context["term"] = str(term)[:200]
        super().__init__(message, context=context)
        self.path = path
        self.term = term


class NotNeutralError(StlcError):
    """Raised when a term is not a neutral (inferring) form."""

    def __init__(self, message: str, term: Any = None) -> None:
        context = {}
        if term is not None:
            context["term"] = str(term)[:200]
        super().__init__(message, context=context)
        self.term = term


class NotNormalError(StlcError):
    """Raised when a term does not check as a normal form at a type."""

    def __init__(self, message: str, term: Any = None, expected: Any = None) -> None:
        context = {}
        if term is not None:
            context["term"] = str(term)[:200]
        if expected is not None:
            context["expected"] = str(expected)
        super().__init__(message, context=context)
        self.term = term
        self.expected = expected


class FuelExhaustedError(StlcError):
    """
    Raised when normalization runs out of steps.

    Well-typed terms always normalize, so this points at a bug
    or at a fuel budget set too low.
    """

    def __init__(self, fuel: int, term: Any = None) -> None:
        context: dict[str, Any] = {"fuel": fuel}
        if term is not None:
            context["term"] = str(term)[:200]
        super().__init__(f"Normalization did not finish within {fuel} steps", context=context)
        self.fuel = fuel
        self.term = term


class UntaggedConstantError(StlcError):
    """Raised when a constant partition does not tag every constant."""

    def __init__(self, names: list[str]) -> None:
        super().__init__(
            f"Constants without a side: {', '.join(names)}",
            context={"constants": names},
        )
        self.names = names


class PartitionError(StlcError):
    """Raised when a context partition cannot be built."""

    def __init__(
        self, message: str, expected: Any = None, actual: Any = None
    ) -> None:
        context = {}
        if expected is not None:
            context["expected"] = expected
        if actual is not None:
            context["actual"] = actual
        super().__init__(message, context=context)
        self.expected = expected
        self.actual = actual


class SubstitutionError(StlcError):
    """Raised when a substitution value is malformed."""


class TraceError(StlcError):
    """Raised when a recorded reduction trace does not replay."""

    def __init__(self, message: str, step: int | None = None) -> None:
        context = {}
        if step is not None:
            context["step"] = step
        super().__init__(message, context=context)
        self.step = step


class ParseError(StlcError):
    """
    Raised when surface syntax cannot be parsed.

    Carries the character offset and the line/column it maps to.
    """

    def __init__(
        self,
        message: str,
        position: int = 0,
        line: int | None = None,
        column: int | None = None,
    ) -> None:
        context: dict[str, Any] = {"position": position}
        if line is not None:
            context["line"] = line
        if column is not None:
            context["column"] = column
        super().__init__(message, context=context)
        self.position = position
        self.line = line
        self.column = column


class CertificateError(StlcError):
    """
    Raised when a certificate document is malformed.

    Failing verification clauses are NOT errors: they are
    reported in the verification Report.
    """

    def __init__(self, message: str, path: str | None = None, reason: str | None = None) -> None:
        context = {}
        if path is not None:
            context["path"] = path
        if reason is not None:
            context["reason"] = reason
        super().__init__(message, context=context)
        self.path = path
        self.reason = reason
