"""Exception types raised by the verification engine."""

from __future__ import annotations

from collections.abc import Mapping


class AbflatError(Exception):
    """Base class for all errors raised by abflat."""


class DomainError(AbflatError, ValueError):
    """A field was evaluated on its singular locus (for example s = 0 for a Kropina metric)."""


class BranchError(DomainError):
    """A square root, logarithm or real power was evaluated outside its real branch."""


class SingularMatrixError(AbflatError, ArithmeticError):
    """A matrix that must be inverted is numerically singular."""


class NotProjectivelyFlatError(AbflatError, ArithmeticError):
    """The spray is not collinear with y within the requested tolerance."""

    def __init__(self, residual: float, tolerance: float) -> None:
        """Initialize a NotProjectivelyFlatError.

        Args:
            residual: The antisymmetric collinearity residual of the spray.
            tolerance: The tolerance the residual was compared against.
        """
        super().__init__(
            f"Spray is not projectively flat: residual {residual:.3e} exceeds {tolerance:.3e}"
        )
        self.residual = residual
        self.tolerance = tolerance


class QuadratureError(AbflatError, ArithmeticError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class ConstraintViolationError(AbflatError, ValueError):
    """Supplied geometric data does not satisfy the constraints of a construction."""

    def __init__(self, message: str, residuals: Mapping[str, float]) -> None:
        """Initialize a ConstraintViolationError.

        Args:
            message: A description of the violated construction.
            residuals: The residual of every checked equation, by equation tag.
        """
        details = ", ".join(f"{tag}={value:.3e}" for tag, value in residuals.items())
        super().__init__(f"{message} ({details})")
        self.residuals = dict(residuals)


class DenominatorZeroError(AbflatError, ZeroDivisionError):
    """A named denominator of a closed formula vanished."""

    def __init__(self, quantity: str, value: float) -> None:
        """Initialize a DenominatorZeroError.

        Args:
            quantity: The name of the vanishing denominator, for example "Δ".
            value: The value the denominator took.
        """
        super().__init__(f"Denominator {quantity} vanished (value {value:.3e})")
        self.quantity = quantity
        self.value = value


class DimensionError(AbflatError, ValueError):
    """An operation was requested in a dimension it does not support."""


class CaseReductionError(AbflatError, ValueError):
    """The requested case degenerates into another case of the classification."""


class ConfigurationError(AbflatError, ValueError):
    """A verification suite was configured incorrectly."""


class SamplingError(AbflatError, RuntimeError):
    """Rejection sampling could not produce an admissible sample."""
