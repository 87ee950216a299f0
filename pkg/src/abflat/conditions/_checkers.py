"""Residual checks for the flat-parallel case and the five cases of the classification."""

from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np

from abflat._errors import CaseReductionError, DimensionError
from abflat.conditions._sample import SampleGeometry, collinearity_residual, spray_remainder
from abflat.conditions._types._case_residuals import CaseResiduals
from abflat.conditions._types._condition_params import ConditionParams
from abflat.jets import gradient, primal, primal_array
from abflat.metric import (
    ABMetric,
    PhiFamily,
    PhiSpec,
    SprayRoute,
    berwald_residual,
    flag_curvature_projflat,
    phi_eval,
    relative_difference,
    spray,
)
from abflat.riemann import (
    RiemannData,
    beta_apparatus,
    one_form_norm_squared,
    riemann_curvature,
)

_logger = logging.getLogger(__name__)

Sample = tuple[Sequence[float], Sequence[float]]

CURVATURE_TOLERANCE = 1e-5
BERWALD_TOLERANCE = 1e-8


def _max_abs(values: object) -> float:
    return float(np.max(np.abs(primal_array(values)), initial=0.0))


def _require_plane(g: RiemannData, case: str) -> None:
    if g.dim != 2:
        raise DimensionError(f"Case {case} is only defined in dimension 2, got {g.dim}.")


def _projective_check(
    residuals: CaseResiduals,
    metric: ABMetric,
    sample: SampleGeometry,
    P: float,
    route: SprayRoute,
) -> None:
    G = spray(metric, sample.x, list(sample.y), route)
    residuals.record("projective-factor", collinearity_residual(G, P, sample.y))


def _berwald_check(residuals: CaseResiduals, metric: ABMetric, sample: SampleGeometry) -> None:
    residuals.record(
        "berwald", berwald_residual(metric, sample.x, list(sample.y)), BERWALD_TOLERANCE
    )


def check_flat_parallel(
    g: RiemannData, samples: Sequence[Sample], tol: float = 1e-9
) -> CaseResiduals:
    """Check that α is flat and β is parallel.

    Records ``max |r_ij|``, ``max |s_ij|`` and ``max |R^i_jkl|`` at every sample.

    Args:
        g: The Riemannian data.
        samples: The ``(x, y)`` samples.
        tol: The tolerance.
    """
    residuals = CaseResiduals("flat-parallel", tolerance=tol)
    for x, y in samples:
        bd = beta_apparatus(g, x, y)
        residuals.record("symmetric-derivative", _max_abs(bd.r_ij))
        residuals.record("antisymmetric-derivative", _max_abs(bd.s_ij))
        residuals.record("riemann-curvature", _max_abs(riemann_curvature(g, x)))
    _logger.debug("%s", residuals)
    return residuals


def check_case_i(
    g: RiemannData,
    k: float,
    params: ConditionParams,
    samples: Sequence[Sample],
    tol: float = 1e-8,
    *,
    route: SprayRoute = "structured",
    check_berwald: bool = False,
) -> CaseResiduals:
    """Check the first-class case ``φ = k s + 1/s``.

    Equations: ``b² s_ij = b_i s_j − b_j s_i``;
    ``G^i_α = ρ y^i − r_00 b^i/(2b²) − (α² − kβ²) s^i/(2b²)``; and
    ``P = ρ − {(α² − kβ²) s_0 + r_00 β} / {b² (α² + kβ²)}`` against the spray.
    When μ is supplied, also ``r_ij = k(b_i s_j + b_j s_i) + μ(a_ij + k b_i b_j)``
    and ``P = ρ − (μβ + s_0)/b²``.
    """
    metric = ABMetric(g, PhiSpec(PhiFamily.FIRST_CLASS, k=k))
    residuals = CaseResiduals("i", tolerance=tol)
    for x, y in samples:
        sample = SampleGeometry(g, x, y)
        rho0 = sample.rho0(params.rho(x))
        b2, alpha2, beta = sample.b2, sample.alpha2, sample.beta
        residuals.record("closed-s", sample.closedness_residual())
        expected = rho0 * sample.y + spray_remainder("i", sample, k=k)
        residuals.record("riemann-spray", relative_difference(sample.spray_alpha, expected))
        P = rho0 - ((alpha2 - k * beta * beta) * sample.s0 + sample.r00 * beta) / (
            b2 * (alpha2 + k * beta * beta)
        )
        _projective_check(residuals, metric, sample, P, route)
        if params.mu is not None:
            mu = primal(params.mu(x))
            r_expected = k * sample.b_sym_s + mu * (sample.a + k * sample.b_outer_b)
            residuals.record("r-decomposition", relative_difference(sample.r_ij, r_expected))
            one_form = rho0 - (mu * beta + sample.s0) / b2
            residuals.record("one-form-factor", abs(P - one_form) / (1.0 + abs(P)))
        if check_berwald:
            _berwald_check(residuals, metric, sample)
    _logger.debug("%s", residuals)
    return residuals


def check_case_ii(
    g: RiemannData,
    m: float,
    k: float,
    a1: float,
    params: ConditionParams,
    samples: Sequence[Sample],
    tol: float = 1e-8,
    *,
    route: SprayRoute = "structured",
) -> CaseResiduals:
    """Check the second-class case ``φ = a₁ s + s^m (1 + k s²)^((1−m)/2)``.

    Equations: ``b_{i|j} = 2τ{m b² a_ij − (m + 1 + k b²) b_i b_j}``;
    ``G^i_α = ρ y^i − τ(mα² − kβ²) b^i``; and
    ``P = ρ + τα{s(−m + k s²) − s²(1 + k s²) φ'/φ}`` against the spray.
    """
    phi = PhiSpec(PhiFamily.SECOND_CLASS, m=m, k=k, a1=a1)
    metric = ABMetric(g, phi)
    residuals = CaseResiduals("ii", tolerance=tol)
    for x, y in samples:
        sample = SampleGeometry(g, x, y)
        rho0 = sample.rho0(params.rho(x))
        tau = primal(params.tau(x))
        b2, alpha, s = sample.b2, sample.alpha, sample.s
        expected_bij = 2.0 * tau * (m * b2 * sample.a - (m + 1.0 + k * b2) * sample.b_outer_b)
        residuals.record("covariant-derivative", relative_difference(sample.b_ij, expected_bij))
        expected = rho0 * sample.y + spray_remainder("ii", sample, tau=tau, m=m, k=k)
        residuals.record("riemann-spray", relative_difference(sample.spray_alpha, expected))
        value, d1, _ = phi_eval(phi, s)
        P = rho0 + tau * alpha * (
            s * (-m + k * s * s) - s * s * (1.0 + k * s * s) * primal(d1) / primal(value)
        )
        _projective_check(residuals, metric, sample, P, route)
    _logger.debug("%s", residuals)
    return residuals


def check_case_iii(
    g: RiemannData,
    m: float,
    k: float,
    params: ConditionParams,
    samples: Sequence[Sample],
    tol: float = 1e-8,
    *,
    route: SprayRoute = "structured",
    check_curvature: bool = True,
    curvature_tol: float = CURVATURE_TOLERANCE,
    check_berwald: bool = False,
) -> CaseResiduals:
    """Check the third-class case ``φ = s^m (1 + k s²)^((1−m)/2)``.

    Equations, with ``d = (m − 1) b²``: ``b² s_ij = b_i s_j − b_j s_i``;
    ``r_ij = 2τ{m b² a_ij − (m + 1 + k b²) b_i b_j} − (m + 1 + 2k b²)(b_i s_j + b_j s_i)/d``;
    ``G^i_α = ρ y^i + {2kβ s_0/d − τ(mα² − kβ²)} b^i − (mα² + kβ²) s^i/d``;
    and ``P = ρ − 2mτβ − 2m s_0/((m − 1) b²)`` against the spray. At samples
    where these hold, the flag curvature must vanish.
    """
    metric = ABMetric(g, PhiSpec(PhiFamily.THIRD_CLASS, m=m, k=k))
    residuals = CaseResiduals("iii", tolerance=tol)
    for x, y in samples:
        sample = SampleGeometry(g, x, y)
        rho0 = sample.rho0(params.rho(x))
        tau = primal(params.tau(x))
        b2, beta = sample.b2, sample.beta
        closed = sample.closedness_residual()
        residuals.record("closed-s", closed)
        expected_r = 2.0 * tau * (
            m * b2 * sample.a - (m + 1.0 + k * b2) * sample.b_outer_b
        ) - (m + 1.0 + 2.0 * k * b2) / ((m - 1.0) * b2) * sample.b_sym_s
        symmetric = relative_difference(sample.r_ij, expected_r)
        residuals.record("symmetric-derivative", symmetric)
        expected = rho0 * sample.y + spray_remainder("iii", sample, tau=tau, m=m, k=k)
        riemann_spray = relative_difference(sample.spray_alpha, expected)
        residuals.record("riemann-spray", riemann_spray)
        P = rho0 - 2.0 * m * tau * beta - 2.0 * m * sample.s0 / ((m - 1.0) * b2)
        _projective_check(residuals, metric, sample, P, route)
        if check_curvature and max(closed, symmetric, riemann_spray) <= tol:
            K = flag_curvature_projflat(metric, sample.x, list(sample.y), route=route)
            residuals.record("flag-curvature", abs(K), curvature_tol)
        if check_berwald:
            _berwald_check(residuals, metric, sample)
    _logger.debug("%s", residuals)
    return residuals


def check_case_iv(
    g: RiemannData,
    m: float,
    k: float,
    params: ConditionParams,
    samples: Sequence[Sample],
    tol: float = 1e-8,
    *,
    route: SprayRoute = "structured",
) -> CaseResiduals:
    """Check the fourth-class case in dimension 2, with φ given by quadrature.

    Equations: ``r_ij = −(b_i s_j + b_j s_i)/b²``;
    ``G^i_α = ρ y^i − {(m − 2)α² + kβ²} s^i/((m − 1) b²)``; and
    ``P = ρ + {s(k s² − 1) φ'/φ − k s² − m + 2} s_0/((m − 1) b²)`` against the
    spray. Also records ``max_j |∂_j b²|``, which vanishes on passing data.

    Raises:
        DimensionError: If the data is not two-dimensional.
    """
    _require_plane(g, "iv")
    residuals = CaseResiduals("iv", tolerance=tol)
    for x, y in samples:
        sample = SampleGeometry(g, x, y)
        rho0 = sample.rho0(params.rho(x))
        b2, s = sample.b2, sample.s
        expected_r = -sample.b_sym_s / b2
        residuals.record("symmetric-derivative", relative_difference(sample.r_ij, expected_r))
        expected = rho0 * sample.y + spray_remainder("iv", sample, m=m, k=k)
        residuals.record("riemann-spray", relative_difference(sample.spray_alpha, expected))
        phi = PhiSpec(PhiFamily.FOURTH_CLASS_QUADRATURE, m=m, k=k, b=float(np.sqrt(b2)))
        value, d1, _ = phi_eval(phi, s)
        bracket = s * (k * s * s - 1.0) * primal(d1) / primal(value) - k * s * s - m + 2.0
        P = rho0 + bracket * sample.s0 / ((m - 1.0) * b2)
        _projective_check(residuals, ABMetric(g, phi), sample, P, route)
        norm_gradient = gradient(lambda z: one_form_norm_squared(g, z), sample.x)
        residuals.record("norm-gradient", _max_abs(norm_gradient) / (1.0 + b2))
    _logger.debug("%s", residuals)
    return residuals


def check_case_v(
    g: RiemannData,
    k1: float,
    k2: float,
    params: ConditionParams,
    samples: Sequence[Sample],
    tol: float = 1e-8,
    *,
    route: SprayRoute = "structured",
) -> CaseResiduals:
    """Check the fifth-class case ``φ = k₁ s + 2k₂/s + 1/s³`` in dimension 2.

    Equations: ``r_ij = −2τ{3b² a_ij + (k₂b² − 2) b_i b_j}
    + {(3k₁ + k₂²) b⁴ − 4}(b_i s_j + b_j s_i)/(8b²(1 + k₂b²))``;
    the Riemannian spray relation; and the projective factor with its
    auxiliaries ``c = k₁ − k₂²`` and T. Since ``k₁ ≠ k₂²`` forces β to be
    parallel, ``|s_0|`` and ``|τ|`` are recorded too.

    Raises:
        DimensionError: If the data is not two-dimensional.
        CaseReductionError: If ``k₁ = k₂²``, which belongs to the third class with m = −3.
        DenominatorZeroError: If ``1 + k₂ b²`` vanishes at a sample.
    """
    _require_plane(g, "v")
    c = k1 - k2 * k2
    if c == 0.0:
        raise CaseReductionError(
            "k1 = k2² reduces the fifth class to the third class with m = -3; use check_case_iii."
        )
    metric = ABMetric(g, PhiSpec(PhiFamily.FIFTH_CLASS, k1=k1, k2=k2))
    residuals = CaseResiduals("v", tolerance=tol)
    for x, y in samples:
        sample = SampleGeometry(g, x, y)
        rho0 = sample.rho0(params.rho(x))
        tau = primal(params.tau(x))
        b2, alpha2, beta = sample.b2, sample.alpha2, sample.beta
        metric.phi.check_norm(b2)
        scale = 1.0 + k2 * b2
        expected_r = -2.0 * tau * (3.0 * b2 * sample.a + (k2 * b2 - 2.0) * sample.b_outer_b) + (
            (3.0 * k1 + k2 * k2) * b2 * b2 - 4.0
        ) / (8.0 * b2 * scale) * sample.b_sym_s
        residuals.record("symmetric-derivative", relative_difference(sample.r_ij, expected_r))
        expected = rho0 * sample.y + spray_remainder("v", sample, tau=tau, k1=k1, k2=k2)
        residuals.record("riemann-spray", relative_difference(sample.spray_alpha, expected))
        beta2 = beta * beta
        quartic = alpha2 * alpha2 + c * beta2 * beta2 + k2 * beta2 * (2.0 * alpha2 + k2 * beta2)
        T = c * (
            4.0 * beta2 * (2.0 * beta2 - b2 * alpha2)
            + 3.0 * b2 * b2 * (alpha2 * alpha2 + c * beta2 * beta2)
            + k2 * b2 * beta2 * (6.0 * b2 * alpha2 + 4.0 * beta2 + 3.0 * k2 * b2 * beta2)
        ) / (8.0 * b2 * scale * quartic)
        P = (
            rho0
            + 2.0 * tau * beta * (3.0 - 2.0 * c * beta2 * beta2 / quartic)
            + ((k2 * b2 - 3.0) / (2.0 * b2) + T) * sample.s0
        )
        _projective_check(residuals, metric, sample, P, route)
        residuals.record("parallel-s0", abs(sample.s0) / (1.0 + sample.alpha))
        residuals.record("vanishing-tau", abs(tau))
    _logger.debug("%s", residuals)
    return residuals
