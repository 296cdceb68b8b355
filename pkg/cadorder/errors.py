"""
Exception hierarchy for cadorder.

Everything raised on purpose by the library derives from CadOrderError.
InputError covers bad input and maps to CLI exit code 1; InvariantViolation
covers internal consistency failures and maps to exit code 2.
"""

from typing import Optional


class CadOrderError(Exception):
    """Root of all cadorder errors."""


class InputError(CadOrderError, ValueError):
    """The caller supplied input the library cannot accept."""


class InvariantViolation(CadOrderError, RuntimeError):
    """An internal invariant did not hold."""


# --- polynomial core ---

class DegreeZero(InputError):
    """A polynomial has degree 0 in the variable an operation needs."""


class DegreeTooLow(InputError):
    """A polynomial has degree < 2 where a discriminant was requested."""


class ZeroPolynomial(InputError):
    """The zero polynomial was given where it has no meaning."""


class Multivariate(InputError):
    """A univariate polynomial was required but several variables occur."""


# --- ingest ---

class ParseError(InputError):
    """Malformed problem, label or model text."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" if column is None else f"line {line}, column {column}"
            message = f"{where}: {message}"
        super().__init__(message)


class UnsupportedConstruct(InputError):
    """Well-formed input that uses a construct outside the supported subset."""

    def __init__(self, token: str, line: Optional[int] = None, column: Optional[int] = None):
        self.token = token
        self.line = line
        self.column = column
        message = f"unsupported construct {token!r}"
        if line is not None:
            message += f" at line {line}, column {column}"
        super().__init__(message)


class InvalidProblem(InputError):
    """A problem whose variables or quantifier block are inconsistent."""


class BadFractions(InputError):
    """Split fractions that are not positive or do not sum to 1."""


class UnknownOrdering(InputError):
    """An ordering names variables the problem does not declare."""


class DuplicateOrdering(InputError):
    """The same ordering appears twice in one label record."""


class InadmissibleOrdering(InputError):
    """An ordering that violates the problem's quantifier structure."""


# --- projection / heuristics / features ---

class EmptyInput(InputError):
    """A problem contributes no nonconstant polynomial."""


class WrongArity(InputError):
    """Feature extraction needs exactly three variables."""


class EmptySet(InputError):
    """An operation needs at least one element."""


class AllTimeout(InputError):
    """A label record has no usable (non-TIMEOUT) count."""


# --- learner ---

class DimensionMismatch(InputError):
    """Feature vectors of different lengths were combined."""


class NoPositives(InputError):
    """A training set has no positive example."""


class SingleClass(InputError):
    """A training set contains only one label."""


class NonConvergence(InvariantViolation):
    """SMO hit its iteration cap before the KKT conditions were met.

    The last iterate is attached as ``model`` so callers can decide whether
    to use it.
    """

    def __init__(self, message: str, model=None, iterations: int = 0):
        self.model = model
        self.iterations = iterations
        super().__init__(message)


# --- pipeline ---

class MissingMargin(InputError):
    """A selection was requested without all three margins."""


class NoWinner(InvariantViolation):
    """No fixed heuristic succeeded on a problem; the labels are inconsistent."""


class InconsistentCounts(InputError):
    """Case counts that do not add up to the stated total."""
