"""PhiSpec data type for abflat.metric."""

from __future__ import annotations

import logging
from collections.abc import Callable

from abflat._errors import DenominatorZeroError, DomainError
from abflat.jets import Scalar, derivative, power, sqrt, unary
from abflat.metric._quadrature import integrate_adaptive_simpson
from abflat.metric._types._phi_family import PhiFamily

_logger = logging.getLogger(__name__)

QUADRATURE_START = 1e-8
"""Lower limit of the fourth-class quadrature; ``[0, ε]`` is covered by its leading term."""

NORM_FLOOR = 1e-14
"""Smallest magnitude of a norm-dependent denominator of a profile family."""

_USES_M = frozenset(
    {
        PhiFamily.GENERAL,
        PhiFamily.SECOND_CLASS,
        PhiFamily.THIRD_CLASS,
        PhiFamily.FOURTH_CLASS_QUADRATURE,
    }
)
_FOURTH_CLASS = frozenset(
    {
        PhiFamily.FOURTH_CLASS_QUADRATURE,
        PhiFamily.FOURTH_CLASS_CLOSED_M2,
        PhiFamily.FOURTH_CLASS_CLOSED_M4,
    }
)


class PhiSpec:
    """A profile function φ(s) of an (α,β)-metric ``F = α φ(β/α)``.

    Only the parameters of the chosen family are used. Calling the instance
    evaluates φ on real numbers and jets alike.
    """

    __slots__ = ("family", "m", "k", "c", "a1", "k1", "k2", "b", "varphi", "_integral")

    def __init__(
        self,
        family: PhiFamily | str,
        *,
        m: float = 2.0,
        k: float = 0.0,
        c: float = 0.0,
        a1: float = 0.0,
        k1: float = 0.0,
        k2: float = 0.0,
        b: float = 1.0,
        varphi: Callable[[Scalar], Scalar] | None = None,
    ) -> None:
        """Initialize a PhiSpec instance.

        Args:
            family: The profile family, or its string identifier.
            m (optional): The exponent m of the second, third and fourth classes.
            k (optional): The constant k of the first through fourth classes.
            c (optional): The linear coefficient of the general family.
            a1 (optional): The linear coefficient a₁ of the second class.
            k1 (optional): The constant k₁ of the fifth class.
            k2 (optional): The constant k₂ of the fifth class.
            b (optional): The constant b of the fourth class.
            varphi (optional): The smooth factor ϕ of the general family.

        Raises:
            ValueError: If the parameters are invalid for the family.
            DenominatorZeroError: If a closed fourth-class form has ``k b² = 1``.
        """
        self.family = PhiFamily.from_identifier(family) if isinstance(family, str) else family
        if self.family is PhiFamily.FOURTH_CLASS_CLOSED_M2:
            m = 2.0
        elif self.family is PhiFamily.FOURTH_CLASS_CLOSED_M4:
            m = 4.0
        self.m = float(m)
        self.k = float(k)
        self.c = float(c)
        self.a1 = float(a1)
        self.k1 = float(k1)
        self.k2 = float(k2)
        self.b = float(b)
        self.varphi = varphi

        if self.family in _USES_M and self.m in (0.0, 1.0):
            raise ValueError(
                f"The exponent m must not be 0 or 1 for the {self.family.value} family."
            )
        if self.family is PhiFamily.GENERAL and varphi is None:
            raise ValueError("The general family requires the factor varphi.")
        if self.family in _FOURTH_CLASS:
            if self.b <= 0.0:
                raise ValueError(f"The constant b must be positive, got {self.b!r}.")
            if self.family is not PhiFamily.FOURTH_CLASS_QUADRATURE and self.k * self.b**2 == 1.0:
                raise DenominatorZeroError("1 − k b²", 0.0)
            if self.family is PhiFamily.FOURTH_CLASS_QUADRATURE and self.m < 0.0:
                raise ValueError("The fourth-class quadrature diverges at 0 for m < 0.")
        self._integral = (
            self._make_integral() if self.family is PhiFamily.FOURTH_CLASS_QUADRATURE else None
        )

    @property
    def is_singular_at_zero(self) -> bool:
        """Whether φ has a negative power of s."""
        if self.family in (PhiFamily.FIRST_CLASS, PhiFamily.FIFTH_CLASS):
            return True
        return self.family in _USES_M and self.m < 0.0

    @property
    def has_fractional_power(self) -> bool:
        """Whether φ involves a non-integer power of s."""
        return self.family in _USES_M and not self.m.is_integer()

    def accepts_sample(self, s: float, b: float) -> bool:
        """Apply the sampling policy for the singular locus of this family.

        Profiles with a negative integer power of s need ``|s| ≥ 0.1 b`` and
        profiles with a fractional power need ``s ≥ 0.1 b``. Fourth-class
        profiles need ``0.05 b ≤ s ≤ 0.95 b``.

        Args:
            s: The real value of β/α at the sample.
            b: The α-norm of β at the sample.

        Returns:
            True if the sample keeps a safe distance from the singular locus.
        """
        if self.family in _FOURTH_CLASS:
            return 0.05 * self.b <= s <= 0.95 * self.b and self.k * s * s < 1.0
        if self.has_fractional_power:
            return s >= 0.1 * b
        if self.is_singular_at_zero:
            return abs(s) >= 0.1 * b
        return True

    def check_domain(self, s: float) -> None:
        """Raise if ``s`` lies outside the domain of φ.

        Raises:
            DomainError: If ``s`` is on or beyond the boundary of the domain.
        """
        if self.is_singular_at_zero and s == 0.0:
            raise DomainError(f"The {self.family.value} profile is singular at s = 0.")
        if self.family is PhiFamily.FOURTH_CLASS_QUADRATURE:
            if not 0.0 < s < self.b:
                raise DomainError(f"The fourth-class quadrature needs 0 < s < b, got s = {s!r}.")
            if self.k * s * s >= 1.0:
                raise DomainError(f"The fourth-class quadrature needs k s² < 1, got s = {s!r}.")

    def check_norm(self, b2: float) -> None:
        """Raise if the profile degenerates where β has squared α-norm ``b2``.

        The fifth class needs ``1 + k₂ b² ≠ 0``.

        Raises:
            DenominatorZeroError: If ``1 + k₂ b²`` vanishes for the fifth class.
        """
        if self.family is PhiFamily.FIFTH_CLASS:
            scale = 1.0 + self.k2 * b2
            if abs(scale) < NORM_FLOOR:
                raise DenominatorZeroError("1 + k₂b²", scale)

    def _integrand(self, t: Scalar) -> Scalar:
        m, k, b = self.m, self.k, self.b
        return (
            power(t, m - 1.0) * power(b * b - t * t, -1.5) * power(1.0 - k * t * t, 0.5 * (1.0 - m))
        )

    def _make_integral(self) -> Callable[[Scalar], Scalar]:
        m, b = self.m, self.b
        integrand = self._integrand

        def integral(s: float) -> float:
            # t^(m−1) b⁻³ is the leading behaviour of the integrand at 0.
            if s <= QUADRATURE_START:
                return s**m / (m * b**3)
            head = QUADRATURE_START**m / (m * b**3)
            return head + integrate_adaptive_simpson(
                lambda t: float(integrand(t)), QUADRATURE_START, s
            )

        return unary(integral, integrand, derivative(integrand))

    def __call__(self, s: Scalar) -> Scalar:
        """Evaluate φ(s)."""
        family = self.family
        if family is PhiFamily.RANDERS:
            return 1.0 + s
        if family is PhiFamily.SQUARE:
            return (1.0 + s) * (1.0 + s)
        if family is PhiFamily.FIRST_CLASS:
            return self.k * s + 1.0 / s
        if family is PhiFamily.FIFTH_CLASS:
            return self.k1 * s + 2.0 * self.k2 / s + 1.0 / (s * s * s)
        if family is PhiFamily.THIRD_CLASS:
            return self._power_part(s)
        if family is PhiFamily.SECOND_CLASS:
            return self.a1 * s + self._power_part(s)
        if family is PhiFamily.GENERAL:
            assert self.varphi is not None
            return self.c * s + power(s, self.m) * self.varphi(s)
        b, k = self.b, self.k
        if family is PhiFamily.FOURTH_CLASS_QUADRATURE:
            assert self._integral is not None
            return self.m * b * b * sqrt(b * b - s * s) * self._integral(s)
        root = b * sqrt(1.0 - k * s * s) - sqrt(b * b - s * s)
        if family is PhiFamily.FOURTH_CLASS_CLOSED_M2:
            return (2.0 * b / (1.0 - k * b * b)) * root
        scale = 4.0 * b * b / ((1.0 - k * b * b) * (1.0 - k * b * b))
        return scale * root * root / sqrt(1.0 - k * s * s)

    def _power_part(self, s: Scalar) -> Scalar:
        return power(s, self.m) * power(1.0 + self.k * s * s, 0.5 * (1.0 - self.m))

    def __eq__(self, other: object) -> bool:
        """Determine equality."""
        if not isinstance(other, PhiSpec):
            return NotImplemented
        return (
            self.family == other.family
            and self.m == other.m
            and self.k == other.k
            and self.c == other.c
            and self.a1 == other.a1
            and self.k1 == other.k1
            and self.k2 == other.k2
            and self.b == other.b
            and self.varphi is other.varphi
        )

    def __str__(self) -> str:
        """Return a string representation of the PhiSpec."""
        return f"PhiSpec({self.family.value}, m={self.m}, k={self.k}, b={self.b})"

