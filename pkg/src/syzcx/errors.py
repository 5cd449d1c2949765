"""Exception hierarchy. Every error carries a stable machine-readable code."""

from __future__ import annotations


class SyzcxError(Exception):
    """Base class. `code` is the stable diagnostic identifier."""

    code = "error"

    def __init__(self, message: str = "", **data):
        super().__init__(message or self.code)
        self.message = message or self.code
        self.data = data

    def __str__(self):
        return self.message


class AlgebraSyntaxError(SyzcxError):
    """Malformed input file or literal. Carries line/column when known."""

    code = "syntax_error"

    def __init__(self, message, line=None, column=None, **data):
        super().__init__(message, **data)
        self.line = line
        self.column = column

    def __str__(self):
        if self.line is not None:
            return f"line {self.line}: {self.message}"
        return self.message


class ValidationError(SyzcxError):
    """Algebra fails a structural requirement (e.g. infinite dimensional)."""

    code = "validation_error"


class InfiniteDimensionalError(ValidationError):
    code = "infinite_dimensional"


class RelationTooShortError(ValidationError):
    code = "relation_too_short"


class MathPreconditionError(SyzcxError):
    """An operation's mathematical precondition is violated."""

    code = "math_precondition"


class ZeroPathError(MathPreconditionError):
    code = "zero_path"


class NotMonicError(MathPreconditionError):
    code = "not_monic"


class NonMonicInputError(MathPreconditionError):
    code = "nonmonic_input"


class ZeroPolynomialError(MathPreconditionError):
    code = "zero_polynomial"


class ZeroConstantTermError(MathPreconditionError):
    code = "zero_constant_term"


class NotStronglyConnectedError(MathPreconditionError):
    code = "not_strongly_connected"


class NoArrowsError(MathPreconditionError):
    code = "no_arrows"


class TrailingZeroError(MathPreconditionError):
    code = "trailing_zero"


class FiniteProjectiveDimensionError(MathPreconditionError):
    code = "finite_projective_dimension"


class InvalidPartialError(ValidationError):
    code = "invalid_partial"


class WindowTooSmallError(MathPreconditionError):
    code = "window_too_small"


class DimensionCapExceededError(MathPreconditionError):
    """Oracle iteration hit the dimension cap. Partial results attached."""

    code = "dimension_cap_exceeded"

    def __init__(self, message, dims=None, **data):
        super().__init__(message, **data)
        self.dims = list(dims or [])


class InternalInconsistencyError(SyzcxError):
    """Two routes that must agree disagreed. Always a bug or a cap issue."""

    code = "inconsistent"


class PrimeDisagreementError(InternalInconsistencyError):
    code = "prime_disagreement"
