"""Exception hierarchy for the toolkit.

Two families matter to callers: ``InputError`` (the caller handed us something
malformed, CLI exit code 2) and ``InternalValidationError`` (a computed result
failed its own consistency check, CLI exit code 3). Hypothesis failures of the
obstruction theorems are never raised; they are recorded in the verdict.
"""

from typing import Any, Dict, Optional


class SwObstructError(Exception):
    """Base exception for toolkit operations."""

    def __init__(
        self,
        message: str,
        operation: str,
        details: Optional[Dict[str, Any]] = None,
        original_error: Optional[Exception] = None,
    ):
        super().__init__(message)
        self.message = message
        self.operation = operation
        self.details = details or {}
        self.original_error = original_error


class InputError(SwObstructError):
    """Malformed or inconsistent input."""

    exit_code = 2


class InternalValidationError(SwObstructError):
    """A computed result failed validation."""

    exit_code = 3


# Lattice construction and arithmetic


class DimensionMismatchError(InputError):
    """Vector or matrix dimensions do not match the lattice rank."""

    pass


class NonSymmetricError(InputError):
    """A Gram matrix is not symmetric."""

    pass


class NonUnimodularError(InputError):
    """A Gram matrix does not have determinant +1 or -1."""

    pass


class InvalidSummandError(InputError):
    """A summand description is malformed."""

    pass


# Isometries and actions


class NotAnIsometryError(InputError):
    """A matrix does not preserve the form."""

    def __init__(
        self,
        message: str,
        operation: str,
        row: int,
        column: int,
        expected: int,
        actual: int,
    ):
        super().__init__(
            message,
            operation,
            details={"row": row, "column": column, "expected": expected, "actual": actual},
        )
        self.row = row
        self.column = column
        self.expected = expected
        self.actual = actual


class NonIntegralReflectionError(InputError):
    """The reflection formula is not integral on the basis."""

    pass


class ZeroNormVectorError(InputError):
    """Reflection in a vector of square zero."""

    pass


class OrderExceedsBoundError(InputError):
    """No power up to the bound is the identity."""

    pass


class IncompatibleBlocksError(InputError):
    """Block operation refers to missing or non-isomorphic blocks."""

    pass


class InvalidActionError(InputError):
    """Generators do not satisfy the declared group shape."""

    pass


class NotFiniteOrderError(InputError):
    """A generator or the generated group is not finite."""

    pass


class WrongOrderError(InputError):
    """Generator order differs from the declared one."""

    pass


class NotInvolutionError(InputError):
    """A map expected to square to the identity does not."""

    pass


class NotCommutingError(InputError):
    """Generators expected to commute do not."""

    pass


class NotSimultaneouslyDiagonalizableError(InputError):
    """Restrictions to the invariant subspace cannot be diagonalized together."""

    pass


class EigenvalueNotPlusMinusOneError(InputError):
    """A restriction to the invariant subspace has an eigenvalue other than +-1."""

    pass


# Cohomology


class RingMismatchError(InputError):
    """Arithmetic between classes of different rings."""

    pass


class BadDimensionsError(InputError):
    """Representation dimensions disagree with the base dimension."""

    pass


# Fixtures and documents


class UnknownExampleError(InputError):
    """No fixture is registered under the requested id."""

    pass


class InvalidParamsError(InputError):
    """Fixture parameters outside their validity range."""

    pass


class DocumentError(InputError):
    """Input document failed to parse; ``path`` locates the offending entry."""

    def __init__(self, message: str, path: str, original_error: Optional[Exception] = None):
        super().__init__(
            f"{path}: {message}" if path else message,
            "parse_document",
            details={"path": path},
            original_error=original_error,
        )
        self.path = path


# Internal validation


class InternalToleranceFailureError(InternalValidationError):
    """A numeric result fell outside its tolerance."""

    pass


class MultiplicityNotIntegralError(InternalValidationError):
    """Representation multiplicities failed integrality validation."""

    pass


class FixtureMismatchError(InternalValidationError):
    """A fixture did not reproduce its expected conclusion."""

    pass
