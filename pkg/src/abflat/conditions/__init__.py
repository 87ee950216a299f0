"""Residual checkers for the flat-parallel case and the five classification cases."""

from abflat.conditions._checkers import (
    check_case_i,
    check_case_ii,
    check_case_iii,
    check_case_iv,
    check_case_v,
    check_flat_parallel,
)
from abflat.conditions._estimators import (
    estimate_condition_params,
    estimate_mu,
    estimate_rho,
    estimate_tau,
)
from abflat.conditions._sample import SampleGeometry, collinearity_residual, spray_remainder
from abflat.conditions._types._case_residuals import CaseResiduals
from abflat.conditions._types._condition_params import ConditionParams

__all__ = [
    "CaseResiduals",
    "ConditionParams",
    "SampleGeometry",
    "check_case_i",
    "check_case_ii",
    "check_case_iii",
    "check_case_iv",
    "check_case_v",
    "check_flat_parallel",
    "collinearity_residual",
    "estimate_condition_params",
    "estimate_mu",
    "estimate_rho",
    "estimate_tau",
    "spray_remainder",
]

# Hide that it was not defined in this top-level package
CaseResiduals.__module__ = __name__
ConditionParams.__module__ = __name__
SampleGeometry.__module__ = __name__
