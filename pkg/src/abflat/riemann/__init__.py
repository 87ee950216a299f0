"""Riemannian data, Christoffel symbols, curvature and the β-derivative apparatus."""

from abflat.riemann._geometry import (
    beta_apparatus,
    christoffel,
    covariant_derivative_beta,
    metric_compatibility_residual,
    one_form_norm_squared,
    riemann_curvature,
    sectional_curvature,
    spray_riemann,
)
from abflat.riemann._linalg import invert
from abflat.riemann._types._beta_derivatives import BetaDerivatives
from abflat.riemann._types._riemann_data import RiemannData, contract, mat_vec, quadratic_form

__all__ = [
    "BetaDerivatives",
    "RiemannData",
    "beta_apparatus",
    "christoffel",
    "contract",
    "covariant_derivative_beta",
    "invert",
    "mat_vec",
    "metric_compatibility_residual",
    "one_form_norm_squared",
    "quadratic_form",
    "riemann_curvature",
    "sectional_curvature",
    "spray_riemann",
]

# Hide that it was not defined in this top-level package
BetaDerivatives.__module__ = __name__
RiemannData.__module__ = __name__
