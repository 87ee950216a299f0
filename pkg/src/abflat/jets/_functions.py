"""Elementary functions on real numbers and jets."""

from __future__ import annotations

import math
from collections.abc import Callable

from abflat._errors import BranchError
from abflat.jets._jet import Jet2, Scalar


def primal(value: Scalar) -> float:
    """Return the innermost real value of a scalar, stripping every jet level.

    >>> primal(Jet2(Jet2(2.5, 1.0, tag=1), 3.0, tag=2))
    2.5
    """
    while isinstance(value, Jet2):
        value = value.v0
    return float(value)


def _chain(u: Jet2, f0: Scalar, f1: Scalar, f2: Scalar) -> Jet2:
    # f(u) for f0 = f(u.v0), f1 = f'(u.v0), f2 = f''(u.v0).
    v1 = u.v1
    return Jet2(f0, f1 * v1, f2 * (v1 * v1) + f1 * u.v2, tag=u.tag)


def sqrt(u: Scalar) -> Scalar:
    """Return the square root.

    Raises:
        BranchError: If the value of ``u`` is negative.
    """
    if isinstance(u, Jet2):
        r = sqrt(u.v0)
        f1 = 0.5 / r
        return _chain(u, r, f1, -f1 / (2.0 * u.v0))
    if u < 0.0:
        raise BranchError(f"sqrt of negative value {u!r}")
    return math.sqrt(u)


def exp(u: Scalar) -> Scalar:
    """Return the exponential."""
    if isinstance(u, Jet2):
        e = exp(u.v0)
        return _chain(u, e, e, e)
    return math.exp(u)


def log(u: Scalar) -> Scalar:
    """Return the natural logarithm.

    Raises:
        BranchError: If the value of ``u`` is not positive.
    """
    if isinstance(u, Jet2):
        f1 = 1.0 / u.v0
        return _chain(u, log(u.v0), f1, -(f1 * f1))
    if u <= 0.0:
        raise BranchError(f"log of non-positive value {u!r}")
    return math.log(u)


def sin(u: Scalar) -> Scalar:
    """Return the sine."""
    if isinstance(u, Jet2):
        s = sin(u.v0)
        return _chain(u, s, cos(u.v0), -s)
    return math.sin(u)


def cos(u: Scalar) -> Scalar:
    """Return the cosine."""
    if isinstance(u, Jet2):
        c = cos(u.v0)
        return _chain(u, c, -sin(u.v0), -c)
    return math.cos(u)


def power(u: Scalar, exponent: float) -> Scalar:
    """Return ``u`` raised to a constant real exponent.

    Integer exponents accept negative bases. Non-integer exponents require a
    positive base.

    Raises:
        BranchError: If the base is negative and the exponent is not an integer.
        ZeroDivisionError: If the base is zero and the exponent is negative.
    """
    p = float(exponent)
    if isinstance(u, Jet2):
        if p == 0.0:
            return Jet2.constant(1.0, u.tag)
        if p == 1.0:
            return u
        if p == 2.0:
            return u * u
        return _chain(
            u, power(u.v0, p), p * power(u.v0, p - 1.0), (p * (p - 1.0)) * power(u.v0, p - 2.0)
        )
    if p.is_integer():
        n = int(p)
        if n < 0:
            return 1.0 / (u**-n)
        return u**n
    if u < 0.0:
        raise BranchError(f"real power {p!r} of negative value {u!r}")
    if u == 0.0:
        if p < 0.0:
            raise ZeroDivisionError(f"negative power {p!r} of zero")
        return 0.0
    return math.pow(u, p)


def unary(
    f0: Callable[[float], float],
    f1: Callable[[Scalar], Scalar],
    f2: Callable[[Scalar], Scalar],
) -> Callable[[Scalar], Scalar]:
    """Lift a real function with known derivatives into a jet-aware primitive.

    ``f0`` is only ever called with real numbers. ``f1`` and ``f2`` must be
    generic over scalars so the primitive itself nests.

    Args:
        f0: The function on real numbers.
        f1: The first derivative of the function.
        f2: The second derivative of the function.

    Returns:
        A callable that accepts real numbers and jets.
    """

    def lifted(u: Scalar) -> Scalar:
        if isinstance(u, Jet2):
            return _chain(u, lifted(u.v0), f1(u.v0), f2(u.v0))
        return f0(u)

    return lifted
