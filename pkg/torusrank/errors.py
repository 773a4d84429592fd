"""
Error types for torusrank.

Every error carries a stable code and a details mapping so the CLI can render
it uniformly; input-validation failures derive from TorusRankValidationError.
"""

from typing import Any, Dict, Optional


class TorusRankError(Exception):
    """Base error class for torusrank operations.

    Attributes:
        message: Error message
        code: Error code
        details: Additional error details
    """

    def __init__(
        self,
        message: str,
        code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None
    ):
        super().__init__(message)
        self.message = message
        self.code = code or "TORUSRANK_ERROR"
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Convert error to a serializable dictionary."""
        return {
            "error": {
                "type": self.code,
                "message": str(self),
                "details": self.details
            }
        }


class TorusRankValidationError(TorusRankError):
    """Validation error for caller-supplied data.

    Raised when an input violates a precondition (square-freeness, sign
    conventions, descriptor invariants).
    """

    def __init__(
        self,
        message: str,
        field: Optional[str] = None,
        value: Optional[Any] = None,
        code: str = "VALIDATION_ERROR"
    ):
        super().__init__(message, code=code, details={"field": field, "value": value})
        self.field = field
        self.value = value


class NotSquareFree(TorusRankValidationError):
    """Raised when a radicand has a square factor."""

    def __init__(self, d: int, factor: Optional[int] = None):
        super().__init__(
            f"radicand {d} is not square-free" + (f" (divisible by {factor}^2)" if factor else ""),
            field="d",
            value=str(d),
            code="NOT_SQUARE_FREE"
        )
        self.details["square_factor"] = factor


class ZeroDenominator(TorusRankValidationError):
    """Raised when c = 0."""

    def __init__(self):
        super().__init__("denominator c must be nonzero", field="c", value="0", code="ZERO_DENOMINATOR")


class NegativeIrrationalPart(TorusRankValidationError):
    """Raised when b < 0 cannot be normalized away without changing the value."""

    def __init__(self, a: int, b: int, c: int, d: int):
        super().__init__(
            f"({a} + {b}*sqrt({d}))/{c} has a negative irrational part; "
            "pass the conjugate explicitly",
            field="b",
            value=str(b),
            code="NEGATIVE_IRRATIONAL_PART"
        )


class RadicandTooLarge(TorusRankValidationError):
    """Raised by the CLI when d exceeds the configured limit."""

    def __init__(self, d: int, limit: int):
        super().__init__(
            f"radicand {d} exceeds the configured limit {limit}",
            field="d",
            value=str(d),
            code="RADICAND_TOO_LARGE"
        )


class PerfectSquareDiscriminant(TorusRankValidationError):
    """Raised when b^2 - 4 is a perfect square (no real-multiplication torus)."""

    def __init__(self, b: int):
        super().__init__(
            f"b^2 - 4 is a perfect square for b = {b}",
            field="b",
            value=str(b),
            code="PERFECT_SQUARE_DISCRIMINANT"
        )


class BadDiscriminant(TorusRankValidationError):
    """Raised when the class number is requested for an unsupported p."""

    def __init__(self, p: int, reason: str = "p must be a prime congruent to 3 mod 4"):
        super().__init__(f"bad discriminant -{p}: {reason}", field="p", value=str(p), code="BAD_DISCRIMINANT")


class InvalidCurveDescriptor(TorusRankValidationError):
    """Raised when a curve descriptor violates its invariants."""

    def __init__(self, message: str, field: Optional[str] = None, value: Optional[Any] = None):
        super().__init__(message, field=field, value=value, code="INVALID_CURVE_DESCRIPTOR")


class IndexConventionFailure(TorusRankError):
    """Raised when no convergent alignment reproduces the periodic quotient.

    This signals an implementation bug, not a data error.
    """

    def __init__(self, theta: str, period_length: int):
        super().__init__(
            f"no convergent alignment within one period reproduces {theta}",
            code="INDEX_CONVENTION_FAILURE",
            details={"theta": theta, "period_length": period_length}
        )


class SignUnresolvable(TorusRankError):
    """Raised when neither sign branch of the derived diophantine equation vanishes."""

    def __init__(self, plus_value: int, minus_value: int):
        super().__init__(
            "neither sign branch of the linear diophantine form vanishes at the base point",
            code="SIGN_UNRESOLVABLE",
            details={"plus_branch": str(plus_value), "minus_branch": str(minus_value)}
        )


class CacheCorruption(TorusRankError):
    """Raised when a cached record disagrees with a fresh expansion."""

    def __init__(self, key: str):
        super().__init__(f"cache record {key} disagrees with recomputation", code="CACHE_CORRUPTION",
                         details={"key": key})
