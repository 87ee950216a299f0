"""Finsler norm, fundamental tensor, spray coefficients and the projective factor."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from typing import Any, Literal

import numpy as np
import numpy.typing as npt

from abflat._errors import DenominatorZeroError, NotProjectivelyFlatError
from abflat.jets import (
    PartialDerivatives,
    Scalar,
    as_real_array,
    hessian,
    primal,
    primal_array,
    singular_locus_guard,
    sqrt,
    third_partials,
)
from abflat.metric._phi import phi_eval
from abflat.metric._types._ab_metric import ABMetric
from abflat.metric._types._phi_spec import PhiSpec
from abflat.metric._types._spray_result import SprayResult
from abflat.riemann import contract, invert, quadratic_form
from abflat.riemann._geometry import _Apparatus, _spray

_logger = logging.getLogger(__name__)

SprayRoute = Literal["generic", "structured"]

DENOMINATOR_FLOOR = 1e-14
PROJECTIVE_TOLERANCE = 1e-8


def _norm(M: ABMetric, x: Sequence[Scalar], y: Sequence[Scalar]) -> Scalar:
    a = M.geom.metric(x)
    alpha = sqrt(quadratic_form(a, y))
    s = contract(M.geom.one_form(x), y) / alpha
    M.phi.check_domain(primal(s))
    return alpha * M.phi(s)


def f_eval(M: ABMetric, x: Sequence[Scalar], y: Sequence[Scalar]) -> Scalar:
    """Return ``F(x, y) = α φ(β/α)``.

    Raises:
        DomainError: If ``β/α`` lies on the singular locus of φ.
        BranchError: If a square root or real power leaves its real branch.
    """
    with singular_locus_guard(f"Evaluating {M}"):
        return _norm(M, x, y)


def _squared_norm(M: ABMetric, n: int) -> Callable[[Sequence[Scalar]], Scalar]:
    def squared(z: Sequence[Scalar]) -> Scalar:
        value = _norm(M, z[:n], z[n:])
        return value * value

    return squared


def fundamental_tensor(M: ABMetric, x: Sequence[Scalar], y: Sequence[Scalar]) -> npt.NDArray[Any]:
    """Return ``g_ij = ½ ∂²(F²)/∂y^i ∂y^j``."""
    n = M.dim
    z = list(x) + list(y)
    block = hessian(_squared_norm(M, n), z, range(n, 2 * n))
    return as_real_array(0.5 * block)


def spray_generic(M: ABMetric, x: Sequence[Scalar], y: Sequence[Scalar]) -> npt.NDArray[Any]:
    """Return ``G^i = ¼ g^il {[F²]_{x^k y^l} y^k − [F²]_{x^l}}`` computed from jets of F².

    Raises:
        SingularMatrixError: If the fundamental tensor is numerically singular.
    """
    n = M.dim
    z = list(x) + list(y)
    partials = PartialDerivatives(_squared_norm(M, n), z)
    g = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            g[i, j] = 0.5 * partials.second(n + i, n + j)
    g_inv = invert(g, "Fundamental tensor g_ij")
    rhs = np.empty(n, dtype=object)
    for l in range(n):
        total: Scalar = -partials.first(l)
        for k in range(n):
            total = total + partials.second(k, n + l) * y[k]
        rhs[l] = total
    spray = np.array([0.25 * contract(g_inv[i], rhs) for i in range(n)], dtype=object)
    return as_real_array(spray)


class StructuredCoefficients:
    """The scalar coefficients Q, Q', Θ, Ψ and Δ of the structured spray formula."""

    __slots__ = ("Q", "dQ", "Theta", "Psi", "Delta")

    def __init__(self, phi: PhiSpec, s: Scalar, b2: Scalar) -> None:
        """Initialize a StructuredCoefficients instance.

        Args:
            phi: The profile.
            s: The value of β/α.
            b2: The squared α-norm of β.

        Raises:
            DenominatorZeroError: If ``φ − s φ'`` or Δ vanishes.
        """
        value, d1, d2 = phi_eval(phi, s)
        denominator = value - s * d1
        if abs(primal(denominator)) < DENOMINATOR_FLOOR:
            raise DenominatorZeroError("φ − sφ'", primal(denominator))
        self.Q = d1 / denominator
        self.dQ = value * d2 / (denominator * denominator)
        self.Delta = 1.0 + s * self.Q + (b2 - s * s) * self.dQ
        if abs(primal(self.Delta)) < DENOMINATOR_FLOOR:
            raise DenominatorZeroError("Δ", primal(self.Delta))
        self.Theta = (self.Q - s * self.dQ) / (2.0 * self.Delta)
        self.Psi = self.dQ / (2.0 * self.Delta)


def structured_coefficients(phi: PhiSpec, s: Scalar, b2: Scalar) -> StructuredCoefficients:
    """Return Q, Q', Θ, Ψ and Δ for the profile at ``s`` and ``b²``."""
    return StructuredCoefficients(phi, s, b2)


def _structured(M: ABMetric, x: Sequence[Scalar], y: Sequence[Scalar]) -> npt.NDArray[Any]:
    n = M.dim
    apparatus = _Apparatus(M.geom, x, y)
    bd = apparatus.beta_derivatives
    alpha = sqrt(quadratic_form(apparatus.a, y))
    s = contract(apparatus.b, y) / alpha
    coefficients = StructuredCoefficients(M.phi, s, bd.b2)
    spray_alpha = _spray(apparatus.gamma, y)
    common = -2.0 * alpha * coefficients.Q * bd.s0 + bd.r00
    along_y = coefficients.Theta * common / alpha
    along_b = coefficients.Psi * common
    along_s = alpha * coefficients.Q
    spray = np.empty(n, dtype=object)
    for i in range(n):
        spray[i] = (
            spray_alpha[i] + along_s * bd.s_mixed0[i] + along_y * y[i] + along_b * bd.b_up[i]
        )
    return spray


def spray_structured(M: ABMetric, x: Sequence[Scalar], y: Sequence[Scalar]) -> npt.NDArray[Any]:
    """Return the spray from the Riemannian spray and the β-apparatus.

    ``G^i = G^i_α + αQ s^i_0 + α⁻¹Θ(−2αQ s_0 + r_00) y^i + Ψ(−2αQ s_0 + r_00) b^i``.

    Raises:
        DenominatorZeroError: If ``φ − s φ'`` or Δ vanishes.
    """
    with singular_locus_guard(f"Structured spray of {M}"):
        return as_real_array(_structured(M, x, y))


def spray(
    M: ABMetric, x: Sequence[Scalar], y: Sequence[Scalar], route: SprayRoute = "structured"
) -> npt.NDArray[Any]:
    """Return the spray coefficients by the requested route."""
    if route == "generic":
        return spray_generic(M, x, y)
    if route == "structured":
        return spray_structured(M, x, y)
    raise ValueError(f"Unknown spray route: {route!r}")


def antisymmetry_residual(G: Sequence[Scalar], y: Sequence[Scalar]) -> float:
    """Return ``max_{i<j} |G^i y^j − G^j y^i| / (1 + |G||y|)`` on real parts."""
    g = primal_array(G)
    v = primal_array(y)
    n = len(v)
    worst = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            worst = max(worst, abs(g[i] * v[j] - g[j] * v[i]))
    return worst / (1.0 + float(np.linalg.norm(g)) * float(np.linalg.norm(v)))


def _collinear_factor(G: Sequence[Scalar], y: Sequence[Scalar]) -> Scalar:
    return contract(G, y) / contract(y, y)


def _projective_factor(
    M: ABMetric, x: Sequence[Scalar], y: Sequence[Scalar], tol: float, route: SprayRoute
) -> Scalar:
    G = spray(M, x, y, route)
    residual = antisymmetry_residual(G, y)
    if residual > tol:
        raise NotProjectivelyFlatError(residual, tol)
    return _collinear_factor(G, y)


def spray_result(
    M: ABMetric,
    x: Sequence[Scalar],
    y: Sequence[Scalar],
    tol: float = PROJECTIVE_TOLERANCE,
    route: SprayRoute = "structured",
) -> SprayResult:
    """Return the spray with its projective factor, if the spray is collinear with y."""
    G = spray(M, x, y, route)
    residual = antisymmetry_residual(G, y)
    P = primal(_collinear_factor(G, y)) if residual <= tol else None
    return SprayResult(G, P=P, antisym_residual=residual)


def projective_factor(
    M: ABMetric,
    x: Sequence[Scalar],
    y: Sequence[Scalar],
    tol: float = PROJECTIVE_TOLERANCE,
    route: SprayRoute = "structured",
) -> Scalar:
    """Return P with ``G^i = P y^i``, taken as the least-squares factor ``G·y / |y|²``.

    Raises:
        NotProjectivelyFlatError: If the antisymmetry residual exceeds ``tol``.
    """
    return _projective_factor(M, x, y, tol, route)


def berwald_residual(M: ABMetric, x: Sequence[Scalar], y: Sequence[Scalar]) -> float:
    """Return the largest third y-derivative of the spray, scaled by ``1 + |G|/|y|``.

    Every component ``∂³G^i/∂y^j∂y^k∂y^l`` is taken, so the spray is quadratic
    in y exactly when this vanishes.

    Args:
        M: The metric.
        x: The point.
        y: The direction at which the third derivatives are taken.
    """
    third = third_partials(lambda u: _structured(M, x, u), y)
    worst = float(np.max(np.abs(primal_array(third))))
    G = spray_structured(M, x, y)
    scale = 1.0 + float(np.linalg.norm(primal_array(G))) / float(
        np.linalg.norm(primal_array(y))
    )
    return worst / scale


def homogeneity_residual(
    M: ABMetric, x: Sequence[Scalar], y: Sequence[Scalar], scale: float = 2.0
) -> float:
    """Return ``|F(x, λy) − λF(x, y)| / (1 + |λF(x, y)|)``."""
    expected = scale * primal(f_eval(M, x, y))
    actual = primal(f_eval(M, x, [scale * yi for yi in y]))
    return abs(actual - expected) / (1.0 + abs(expected))


def relative_difference(u: Sequence[Scalar], v: Sequence[Scalar]) -> float:
    """Return ``max |u − v| / (1 + max(|u|, |v|))`` on real parts."""
    a = primal_array(u)
    b = primal_array(v)
    scale = max(float(np.max(np.abs(a), initial=0.0)), float(np.max(np.abs(b), initial=0.0)))
    if not math.isfinite(scale):
        return math.inf
    return float(np.max(np.abs(a - b), initial=0.0)) / (1.0 + scale)
