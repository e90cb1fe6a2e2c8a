"""Exception hierarchy.

Plain misuse of an API (wrong argument shape, unsupported parameter range)
raises the usual built-ins (ValueError, IndexError).  Domain conditions get
dedicated classes below.  Everything under TheoryViolation signals that a
mathematically guaranteed property failed at runtime; such an error is never
expected to fire and the command line maps it to exit code 3.
"""


class CremonaError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(CremonaError):
    """Matrix input (text or JSON) could not be parsed consistently."""


class NotStochastic(CremonaError):
    """Row sums of the exponent matrix are not all equal."""


class CommonFactor(CremonaError):
    """Some column has a positive minimum and normalization was not requested."""


class DegreeZero(CremonaError):
    """The (possibly normalized) matrix has degree zero."""


class SingularMatrix(CremonaError):
    """Matrix inversion was requested for a matrix with determinant zero."""


class NotBirational(CremonaError):
    """The map defined by the exponent matrix is not birational."""


class UnsupportedDimension(CremonaError):
    """The operation is only defined for a specific ambient dimension."""


class ArityMismatch(CremonaError):
    """Polynomial operands live in different numbers of variables."""


class ZeroPolynomial(CremonaError):
    """The zero polynomial was passed where a nonzero one is required."""


class NotHomogeneous(CremonaError):
    """A homogeneous polynomial is required."""


class ExactDivisionError(CremonaError):
    """Polynomial division that must be exact left a remainder."""


class TheoryViolation(CremonaError):
    """A mathematically guaranteed invariant failed; aborts loudly."""


class IntegralityFailure(TheoryViolation):
    """The inverse exponent matrix came out non-integral."""


class EmptyBaseLocus(TheoryViolation):
    """No fundamental line was found where at least one must exist."""


class InternalDisagreement(TheoryViolation):
    """Two independent computations of the same quantity disagree."""


class NegativeMilnorSum(TheoryViolation):
    """The inferred sum of Milnor numbers came out negative."""


class BoundViolation(TheoryViolation):
    """A degree bound failed; carries the offending matrix."""

    def __init__(self, message, rows, details=None):
        super().__init__(message)
        self.rows = rows
        self.details = dict(details or {})
