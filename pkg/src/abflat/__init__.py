"""Numerical verification of singular projectively flat (α,β)-metrics of constant flag curvature."""

from abflat._errors import (
    AbflatError,
    BranchError,
    CaseReductionError,
    ConfigurationError,
    ConstraintViolationError,
    DenominatorZeroError,
    DimensionError,
    DomainError,
    NotProjectivelyFlatError,
    QuadratureError,
    SamplingError,
    SingularMatrixError,
)

__all__ = [
    "AbflatError",
    "BranchError",
    "CaseReductionError",
    "ConfigurationError",
    "ConstraintViolationError",
    "DenominatorZeroError",
    "DimensionError",
    "DomainError",
    "NotProjectivelyFlatError",
    "QuadratureError",
    "SamplingError",
    "SingularMatrixError",
]
