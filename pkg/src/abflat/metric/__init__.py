"""(α,β)-metric assembly: profiles, sprays, projective factors and flag curvature."""

from abflat.metric._curvature import flag_curvature_projflat
from abflat.metric._phi import phi_eval, phi_fourth_class_quadrature, regularity_margin
from abflat.metric._quadrature import integrate_adaptive_simpson
from abflat.metric._spray import (
    SprayRoute,
    StructuredCoefficients,
    antisymmetry_residual,
    berwald_residual,
    f_eval,
    fundamental_tensor,
    homogeneity_residual,
    projective_factor,
    relative_difference,
    spray,
    spray_generic,
    spray_result,
    spray_structured,
    structured_coefficients,
)
from abflat.metric._types._ab_metric import ABMetric
from abflat.metric._types._phi_family import PhiFamily
from abflat.metric._types._phi_spec import PhiSpec
from abflat.metric._types._spray_result import SprayResult

__all__ = [
    "ABMetric",
    "PhiFamily",
    "PhiSpec",
    "SprayResult",
    "SprayRoute",
    "StructuredCoefficients",
    "antisymmetry_residual",
    "berwald_residual",
    "f_eval",
    "flag_curvature_projflat",
    "fundamental_tensor",
    "homogeneity_residual",
    "integrate_adaptive_simpson",
    "phi_eval",
    "phi_fourth_class_quadrature",
    "projective_factor",
    "regularity_margin",
    "relative_difference",
    "spray",
    "spray_generic",
    "spray_result",
    "spray_structured",
    "structured_coefficients",
]

# Hide that it was not defined in this top-level package
ABMetric.__module__ = __name__
PhiFamily.__module__ = __name__
PhiSpec.__module__ = __name__
SprayResult.__module__ = __name__
StructuredCoefficients.__module__ = __name__
