"""Evaluation of profile functions and their derivatives."""

from __future__ import annotations

from abflat.jets import Scalar, jet_eval, primal
from abflat.metric._types._phi_family import PhiFamily
from abflat.metric._types._phi_spec import PhiSpec


def phi_eval(phi: PhiSpec, s: Scalar) -> tuple[Scalar, Scalar, Scalar]:
    """Return ``(φ(s), φ'(s), φ''(s))``.

    The three values come from a single jet evaluation.

    Raises:
        DomainError: If ``s`` is on the singular locus or outside the domain of φ.
        BranchError: If a square root or real power leaves its real branch.

    >>> phi_eval(PhiSpec("first-class", k=1.0), 0.5)
    (2.5, -3.0, 16.0)
    """
    phi.check_domain(primal(s))
    return jet_eval(lambda z: phi(z[0]), [s], [1.0]).as_tuple()


def phi_fourth_class_quadrature(m: float, k: float, b: float, s: float) -> float:
    """Return the fourth-class profile for ``0 < s < b``.

    The profile is ``m b² √(b² − s²) ∫₀ˢ (b² − t²)^(−3/2) (t/√(1 − k t²))^(m−1) dt``.

    Raises:
        DomainError: Unless ``0 < s < b`` and ``k s² < 1``.
        QuadratureError: If the quadrature does not converge.
    """
    phi = PhiSpec(PhiFamily.FOURTH_CLASS_QUADRATURE, m=m, k=k, b=b)
    phi.check_domain(s)
    return float(phi(s))


def regularity_margin(phi: PhiSpec, s: Scalar, b2: Scalar) -> tuple[Scalar, Scalar]:
    """Return ``φ(s)`` and ``φ(s) − s φ'(s) + (b² − s²) φ''(s)``.

    Both must be positive for F to be a regular Finsler metric on ``|s| ≤ b``.
    """
    value, d1, d2 = phi_eval(phi, s)
    return value, value - s * d1 + (b2 - s * s) * d2
