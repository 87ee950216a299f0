"""Per-sample quantities shared by the case checkers and estimators."""

from __future__ import annotations

from collections.abc import Sequence
from typing import Any

import numpy as np
import numpy.typing as npt

from abflat.jets import primal_array
from abflat.metric import relative_difference
from abflat.riemann import RiemannData, contract, quadratic_form
from abflat.riemann._geometry import _Apparatus, _spray


class SampleGeometry:
    """The α, β and β-derivative quantities of Riemannian data at one sample ``(x, y)``."""

    __slots__ = (
        "x",
        "y",
        "a",
        "b",
        "b_up",
        "b2",
        "alpha2",
        "alpha",
        "beta",
        "s",
        "b_ij",
        "r_ij",
        "s_ij",
        "s_j",
        "s_up",
        "r00",
        "s0",
        "spray_alpha",
    )

    def __init__(self, g: RiemannData, x: Sequence[float], y: Sequence[float]) -> None:
        """Initialize a SampleGeometry instance at a real sample."""
        apparatus = _Apparatus(g, x, y)
        bd = apparatus.beta_derivatives
        self.x = [float(xi) for xi in x]
        self.y = np.array(y, dtype=float)
        self.a = primal_array(apparatus.a)
        self.b = primal_array(apparatus.b)
        self.b_up = primal_array(bd.b_up)
        self.b2 = float(bd.b2)
        self.alpha2 = float(quadratic_form(self.a, self.y))
        self.alpha = float(np.sqrt(self.alpha2))
        self.beta = float(contract(self.b, self.y))
        self.s = self.beta / self.alpha
        self.b_ij = primal_array(bd.b_ij)
        self.r_ij = primal_array(bd.r_ij)
        self.s_ij = primal_array(bd.s_ij)
        self.s_j = primal_array(bd.s_j)
        self.s_up = primal_array(bd.s_up)
        self.r00 = float(bd.r00)
        self.s0 = float(bd.s0)
        self.spray_alpha = primal_array(_spray(apparatus.gamma, list(self.y)))

    def rho0(self, rho: Sequence[Any]) -> float:
        """Return ``ρ_i y^i``."""
        return float(np.dot(primal_array(rho), self.y))

    @property
    def b_outer_b(self) -> npt.NDArray[np.float64]:
        """``b_i b_j``."""
        return np.outer(self.b, self.b)

    @property
    def b_sym_s(self) -> npt.NDArray[np.float64]:
        """``b_i s_j + b_j s_i``."""
        return np.outer(self.b, self.s_j) + np.outer(self.s_j, self.b)

    @property
    def b_wedge_s(self) -> npt.NDArray[np.float64]:
        """``b_i s_j − b_j s_i``."""
        return np.outer(self.b, self.s_j) - np.outer(self.s_j, self.b)

    def closedness_residual(self) -> float:
        """Residual of ``b² s_ij = b_i s_j − b_j s_i``."""
        return relative_difference(self.b2 * self.s_ij, self.b_wedge_s)


def collinearity_residual(G: Sequence[float], P: float, y: Sequence[float]) -> float:
    """Return ``max_i |G^i − P y^i| / (1 + |G||y|)``."""
    g = primal_array(G)
    v = np.asarray(y, dtype=float)
    return float(np.max(np.abs(g - P * v))) / (1.0 + float(np.linalg.norm(g) * np.linalg.norm(v)))


def spray_remainder(
    case: str,
    sample: SampleGeometry,
    *,
    tau: float = 0.0,
    m: float = 2.0,
    k: float = 0.0,
    k1: float = 0.0,
    k2: float = 0.0,
) -> npt.NDArray[np.float64]:
    """Return the part of ``G^i_α`` that each case prescribes beyond ``ρ y^i``.

    Args:
        case: One of "i", "ii", "iii", "iv" and "v".
        sample: The sample geometry.
        tau (optional): The value of τ at the sample.
        m (optional): The exponent of the second, third and fourth classes.
        k (optional): The constant k of the first four classes.
        k1 (optional): The constant k₁ of the fifth class.
        k2 (optional): The constant k₂ of the fifth class.

    Raises:
        ValueError: If the case is unknown.
    """
    b2, alpha2, beta, s0 = sample.b2, sample.alpha2, sample.beta, sample.s0
    beta2 = beta * beta
    if case == "i":
        return -sample.r00 / (2.0 * b2) * sample.b_up - (alpha2 - k * beta2) / (
            2.0 * b2
        ) * sample.s_up
    if case == "ii":
        return -tau * (m * alpha2 - k * beta2) * sample.b_up
    if case == "iii":
        along_b = 2.0 * k * beta * s0 / ((m - 1.0) * b2) - tau * (m * alpha2 - k * beta2)
        return along_b * sample.b_up - (m * alpha2 + k * beta2) / ((m - 1.0) * b2) * sample.s_up
    if case == "iv":
        return -((m - 2.0) * alpha2 + k * beta2) / ((m - 1.0) * b2) * sample.s_up
    if case == "v":
        c = k1 - k2 * k2
        along_s = (
            c / (8.0 * (1.0 + k2 * b2)) * (3.0 * b2 * alpha2 - beta2)
            + (0.5 * k2 - 0.75 / b2) * alpha2
            - k2 / b2 * beta2
        )
        return tau * (3.0 * alpha2 + k2 * beta2) * sample.b_up + along_s * sample.s_up
    raise ValueError(f"Unknown case: {case!r}")
