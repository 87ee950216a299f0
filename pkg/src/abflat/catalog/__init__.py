"""Constructors for concrete (α,β)-metrics, their Riemannian data and profile functions."""

from abflat.catalog._closed_forms import identify_tilde_forms, make_phi_closed_forms
from abflat.catalog._klein import (
    funk_one_form,
    klein_metric,
    make_randers_klein,
    make_square_klein,
    square_factor,
)
from abflat.catalog._kropina import (
    deform_kropina,
    deform_m_kropina,
    eta_family_parameters,
    make_first_class_kropina,
    make_flat_parallel,
    make_third_class_eta,
)
from abflat.catalog._ode import profile_ode_residual, second_class_identity_residual
from abflat.catalog._registry import (
    build_metric,
    build_profile,
    eta_field_from_params,
    metric_identifiers,
    profile_identifiers,
)
from abflat.catalog._series import (
    closed_form_taylor_coefficients,
    generalized_binomial,
    leading_series_coefficients,
    series_solve,
)
from abflat.catalog._types._eta_field import EtaField
from abflat.catalog._types._series_solution import SeriesSolution

__all__ = [
    "EtaField",
    "SeriesSolution",
    "build_metric",
    "build_profile",
    "closed_form_taylor_coefficients",
    "deform_kropina",
    "deform_m_kropina",
    "eta_family_parameters",
    "eta_field_from_params",
    "funk_one_form",
    "generalized_binomial",
    "identify_tilde_forms",
    "klein_metric",
    "leading_series_coefficients",
    "make_first_class_kropina",
    "make_flat_parallel",
    "make_phi_closed_forms",
    "make_randers_klein",
    "make_square_klein",
    "make_third_class_eta",
    "metric_identifiers",
    "profile_identifiers",
    "profile_ode_residual",
    "second_class_identity_residual",
    "series_solve",
    "square_factor",
]

# Hide that it was not defined in this top-level package
EtaField.__module__ = __name__
SeriesSolution.__module__ = __name__
