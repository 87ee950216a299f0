"""Second-order forward-mode jet scalar."""

from __future__ import annotations

import itertools
from typing import Union

Scalar = Union[float, "Jet2"]
"""A real number or a (possibly nested) jet of real numbers."""

# itertools.count is atomic under the GIL, so tags stay unique across threads.
_tag_counter = itertools.count(1)


def new_tag() -> int:
    """Return a fresh, strictly increasing differentiation tag."""
    return next(_tag_counter)


class Jet2:
    """A truncated Taylor triple (value, first, second) along one direction.

    A jet carries the value ``v0`` of a quantity, its first directional
    derivative ``v1`` and its second directional derivative ``v2``. Jets are
    created by :func:`abflat.jets.jet_eval`, which assigns each evaluation a
    fresh tag. Arithmetic between jets of different tags treats the jet with
    the older (smaller) tag as a constant of the newer differentiation level,
    so jets nest without perturbation confusion. Components may themselves be
    jets of an enclosing level.
    """

    __slots__ = ("v0", "v1", "v2", "tag")

    # Keep numpy from broadcasting over a Jet2 operand; it defers to our reflected operators.
    __array_ufunc__ = None

    def __init__(self, v0: Scalar, v1: Scalar = 0.0, v2: Scalar = 0.0, *, tag: int = 0) -> None:
        """Initialize a Jet2 instance.

        Args:
            v0: The value.
            v1: The first directional derivative.
            v2: The second directional derivative.
            tag: The differentiation level that owns this jet.
        """
        self.v0 = v0
        self.v1 = v1
        self.v2 = v2
        self.tag = tag

    @staticmethod
    def constant(value: Scalar, tag: int) -> "Jet2":
        """Lift a value that does not depend on the differentiation variable."""
        return Jet2(value, 0.0, 0.0, tag=tag)

    def as_tuple(self) -> tuple[Scalar, Scalar, Scalar]:
        """Return the components as a ``(v0, v1, v2)`` tuple."""
        return (self.v0, self.v1, self.v2)

    def _inner(self, other: object) -> "Jet2 | None":
        # Returns `other` when it belongs to a newer level than `self`.
        if isinstance(other, Jet2) and other.tag > self.tag:
            return other
        return None

    def _same_level(self, other: object) -> bool:
        return isinstance(other, Jet2) and other.tag == self.tag

    def __neg__(self) -> "Jet2":
        """Negate."""
        return Jet2(-self.v0, -self.v1, -self.v2, tag=self.tag)

    def __pos__(self) -> "Jet2":
        """Return self."""
        return self

    def __add__(self, other: Scalar) -> "Jet2":
        """Add."""
        inner = self._inner(other)
        if inner is not None:
            return inner.__radd__(self)
        if self._same_level(other):
            assert isinstance(other, Jet2)
            return Jet2(self.v0 + other.v0, self.v1 + other.v1, self.v2 + other.v2, tag=self.tag)
        return Jet2(self.v0 + other, self.v1, self.v2, tag=self.tag)

    def __radd__(self, other: Scalar) -> "Jet2":
        """Add with the constant on the left."""
        return Jet2(other + self.v0, self.v1, self.v2, tag=self.tag)

    def __sub__(self, other: Scalar) -> "Jet2":
        """Subtract."""
        inner = self._inner(other)
        if inner is not None:
            return inner.__rsub__(self)
        if self._same_level(other):
            assert isinstance(other, Jet2)
            return Jet2(self.v0 - other.v0, self.v1 - other.v1, self.v2 - other.v2, tag=self.tag)
        return Jet2(self.v0 - other, self.v1, self.v2, tag=self.tag)

    def __rsub__(self, other: Scalar) -> "Jet2":
        """Subtract from a constant."""
        return Jet2(other - self.v0, -self.v1, -self.v2, tag=self.tag)

    def __mul__(self, other: Scalar) -> "Jet2":
        """Multiply."""
        inner = self._inner(other)
        if inner is not None:
            return inner.__rmul__(self)
        if self._same_level(other):
            assert isinstance(other, Jet2)
            a0, a1, a2 = self.v0, self.v1, self.v2
            b0, b1, b2 = other.v0, other.v1, other.v2
            second = a2 * b0 + 2.0 * (a1 * b1) + a0 * b2
            return Jet2(a0 * b0, a1 * b0 + a0 * b1, second, tag=self.tag)
        return Jet2(self.v0 * other, self.v1 * other, self.v2 * other, tag=self.tag)

    def __rmul__(self, other: Scalar) -> "Jet2":
        """Multiply by a constant on the left."""
        return Jet2(other * self.v0, other * self.v1, other * self.v2, tag=self.tag)

    def __truediv__(self, other: Scalar) -> "Jet2":
        """Divide.

        Raises:
            ZeroDivisionError: If the value of the divisor is zero.
        """
        inner = self._inner(other)
        if inner is not None:
            return inner.__rtruediv__(self)
        if self._same_level(other):
            assert isinstance(other, Jet2)
            b0, b1, b2 = other.v0, other.v1, other.v2
            q0 = self.v0 / b0
            q1 = (self.v1 - q0 * b1) / b0
            q2 = (self.v2 - 2.0 * (q1 * b1) - q0 * b2) / b0
            return Jet2(q0, q1, q2, tag=self.tag)
        return Jet2(self.v0 / other, self.v1 / other, self.v2 / other, tag=self.tag)

    def __rtruediv__(self, other: Scalar) -> "Jet2":
        """Divide a constant by this jet."""
        b0, b1, b2 = self.v0, self.v1, self.v2
        q0 = other / b0
        q1 = -(q0 * b1) / b0
        q2 = -(2.0 * (q1 * b1) + q0 * b2) / b0
        return Jet2(q0, q1, q2, tag=self.tag)

    def __pow__(self, exponent: float) -> "Jet2":
        """Raise to a constant real power; see :func:`abflat.jets.power`."""
        if isinstance(exponent, Jet2):
            raise TypeError("Jet exponents are not supported; use exp(p * log(u)).")
        from abflat.jets._functions import power

        result = power(self, exponent)
        assert isinstance(result, Jet2)
        return result

    def __eq__(self, other: object) -> bool:
        """Compare components; the tag is not part of the value."""
        if not isinstance(other, Jet2):
            return NotImplemented
        return self.as_tuple() == other.as_tuple()

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        """Return a string representation of the Jet2."""
        return f"Jet2({self.v0!r}, {self.v1!r}, {self.v2!r}, tag={self.tag})"
