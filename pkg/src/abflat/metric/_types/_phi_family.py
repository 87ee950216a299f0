"""PhiFamily data type for abflat.metric."""

from __future__ import annotations

from enum import Enum


class PhiFamily(str, Enum):
    """The profile families φ(s) of the classification and the regular comparison metrics."""

    GENERAL = "general"
    """``φ = c s + s^m ϕ(s)`` with a user-supplied ϕ."""

    FIRST_CLASS = "first-class"
    """``φ = k s + 1/s``."""

    SECOND_CLASS = "second-class"
    """``φ = a₁ s + s^m (1 + k s²)^((1−m)/2)``."""

    THIRD_CLASS = "third-class"
    """``φ = s^m (1 + k s²)^((1−m)/2)``."""

    FOURTH_CLASS_QUADRATURE = "fourth-class-quadrature"
    """``φ = m b² √(b² − s²) ∫₀ˢ t^(m−1) (b² − t²)^(−3/2) (1 − k t²)^((1−m)/2) dt``."""

    FOURTH_CLASS_CLOSED_M2 = "fourth-class-closed-m2"
    """The closed fourth-class profile for m = 2."""

    FOURTH_CLASS_CLOSED_M4 = "fourth-class-closed-m4"
    """The closed fourth-class profile for m = 4."""

    FIFTH_CLASS = "fifth-class"
    """``φ = k₁ s + 2 k₂ / s + 1/s³``."""

    RANDERS = "randers"
    """``φ = 1 + s``."""

    SQUARE = "square"
    """``φ = (1 + s)²``."""

    @classmethod
    def from_identifier(cls, identifier: str) -> "PhiFamily":
        """Create a PhiFamily from its string identifier.

        Raises:
            ValueError: If the identifier does not name a known family.
        """
        try:
            return cls(identifier)
        except ValueError as e:
            raise ValueError(f"Unknown φ family: {identifier!r}") from e
