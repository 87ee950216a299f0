"""SeriesSolution data type for abflat.catalog."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from abflat.catalog._ode import profile_ode_residual
from abflat.jets import Scalar, power

Number = float | Fraction


class SeriesSolution:
    """A truncated power series ``φ(s) = s^m (1 + Σ_{j=1..J} c_j s^(2j))``.

    The coefficients solve the fourth-class profile equation order by order,
    so substituting the truncation leaves a residual of order ``s^(2J+2)``
    relative to the leading term.
    """

    __slots__ = ("m", "k", "b", "coeffs")

    def __init__(self, *, m: Number, k: Number, b: Number, coeffs: Sequence[Number]) -> None:
        """Initialize a SeriesSolution instance.

        Args:
            m: The exponent m.
            k: The constant k.
            b: The constant b.
            coeffs: The normalized coefficients ``c_1, ..., c_J``.
        """
        self.m = m
        self.k = k
        self.b = b
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        """The truncation order J."""
        return len(self.coeffs)

    def coefficient(self, j: int) -> Number:
        """Return ``c_j``, with ``c_0 = 1``.

        Raises:
            IndexError: If ``j`` is negative or above the truncation order.
        """
        if j == 0:
            return 1
        if not 0 < j <= len(self.coeffs):
            raise IndexError(f"Coefficient index {j} is outside 0..{len(self.coeffs)}.")
        return self.coeffs[j - 1]

    def __call__(self, s: Scalar) -> Scalar:
        """Evaluate the truncated series."""
        s2 = s * s
        total: Scalar = 1.0
        term: Scalar = 1.0
        for c in self.coeffs:
            term = term * s2
            total = total + float(c) * term
        return power(s, float(self.m)) * total

    def residual(self, s: float) -> float:
        """Return the relative residual of the profile equation at ``s``."""
        return profile_ode_residual(self, float(self.m), float(self.k), float(self.b), s)

    def __eq__(self, other: object) -> bool:
        """Determine equality."""
        if not isinstance(other, SeriesSolution):
            return NotImplemented
        return (
            self.m == other.m
            and self.k == other.k
            and self.b == other.b
            and self.coeffs == other.coeffs
        )

    def __str__(self) -> str:
        """Return a string representation of the SeriesSolution."""
        return f"SeriesSolution(m={self.m}, k={self.k}, b={self.b}, order={self.order})"
