"""Directional, partial and mixed derivatives by jet evaluation."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Callable, Iterator, Sequence
from contextlib import contextmanager
from typing import Any

import numpy as np
import numpy.typing as npt

from abflat._errors import DomainError
from abflat.jets._functions import primal
from abflat.jets._jet import Jet2, Scalar, new_tag

_logger = logging.getLogger(__name__)

ScalarField = Callable[[Sequence[Scalar]], Scalar]
"""A function of a point that returns a scalar."""

ArrayField = Callable[[Sequence[Scalar]], Any]
"""A function of a point that returns an array-like of scalars."""


@contextmanager
def singular_locus_guard(context: str) -> Iterator[None]:
    """Translate division by zero inside a field evaluation into a DomainError.

    Args:
        context: A description of the evaluation, used in the error message.

    Raises:
        DomainError: If the guarded block divided by zero.
    """
    try:
        yield
    except ZeroDivisionError as e:
        raise DomainError(f"{context} hit a singular locus: {e}") from e


def _seed(x: Sequence[Scalar], v: Sequence[Scalar]) -> tuple[int, list[Jet2]]:
    if len(x) != len(v):
        raise ValueError(f"Point has {len(x)} components but direction has {len(v)}.")
    if len(x) == 0:
        raise ValueError("Cannot differentiate a function of zero variables.")
    tag = new_tag()
    return tag, [Jet2(xi, vi, 0.0, tag=tag) for xi, vi in zip(x, v)]


def _extract(value: Scalar, tag: int) -> Jet2:
    if isinstance(value, Jet2) and value.tag == tag:
        return value
    if isinstance(value, Jet2) and value.tag > tag:
        raise ValueError(f"Result carries a jet of level {value.tag} that escaped its evaluation.")
    return Jet2.constant(value, tag)


def jet_eval(f: ScalarField, x: Sequence[Scalar], v: Sequence[Scalar]) -> Jet2:
    """Evaluate ``f(x + t v)`` to second order in ``t``.

    The point may hold jets of an enclosing evaluation; the returned
    components are then jets of that enclosing level, which is how higher
    derivatives are taken.

    Args:
        f: A scalar function built from jet-aware arithmetic and primitives.
        x: The point.
        v: The direction.

    Returns:
        A jet ``(f(x), Df(x)[v], D²f(x)[v, v])``.

    Raises:
        ValueError: If ``x`` and ``v`` do not have the same length.
        DomainError: If ``f`` divides by zero at ``x``.

    >>> jet_eval(lambda z: z[0] * z[0] * z[1], [2.0, 3.0], [1.0, 0.0]).as_tuple()
    (12.0, 12.0, 6.0)
    """
    tag, lifted = _seed(x, v)
    with singular_locus_guard("Function evaluation"):
        result = f(lifted)
    return _extract(result, tag)


def directional_derivatives(
    f: ArrayField, x: Sequence[Scalar], v: Sequence[Scalar]
) -> tuple[npt.NDArray[Any], npt.NDArray[Any], npt.NDArray[Any]]:
    """Evaluate an array-valued function and its first two directional derivatives.

    Args:
        f: A function returning an array-like of scalars.
        x: The point.
        v: The direction.

    Returns:
        Three object arrays with the shape of ``f(x)``: the value, the first
        and the second directional derivative.
    """
    tag, lifted = _seed(x, v)
    with singular_locus_guard("Function evaluation"):
        result = np.asarray(f(lifted), dtype=object)
    values = np.empty(result.shape, dtype=object)
    first = np.empty(result.shape, dtype=object)
    second = np.empty(result.shape, dtype=object)
    for index in np.ndindex(result.shape):
        jet = _extract(result[index], tag)
        values[index], first[index], second[index] = jet.v0, jet.v1, jet.v2
    return values, first, second


def derivative(f: Callable[[Scalar], Scalar]) -> Callable[[Scalar], Scalar]:
    """Return the derivative of a function of one variable as a jet-aware function.

    >>> derivative(lambda t: t * t * t)(2.0)
    12.0
    """

    def df(t: Scalar) -> Scalar:
        return jet_eval(lambda z: f(z[0]), [t], [1.0]).v1

    return df


def _unit(n: int, *indices: int) -> list[float]:
    direction = [0.0] * n
    for index in indices:
        direction[index] += 1.0
    return direction


class PartialDerivatives:
    """Caches the coordinate jets of a scalar function at one point.

    Mixed second partials are recovered by polarization,
    ``∂i∂j f = ½(D²f[ei+ej] − D²f[ei] − D²f[ej])``. Index pairs are put in
    canonical order before evaluation, so the mixed partials are exactly
    symmetric.
    """

    __slots__ = ("_f", "_x", "_jets")

    def __init__(self, f: ScalarField, x: Sequence[Scalar]) -> None:
        """Initialize a PartialDerivatives instance.

        Args:
            f: The scalar function.
            x: The point.
        """
        self._f = f
        self._x = list(x)
        self._jets: dict[tuple[int, int], Jet2] = {}

    def _jet(self, i: int, j: int) -> Jet2:
        key = (min(i, j), max(i, j))
        jet = self._jets.get(key)
        if jet is None:
            n = len(self._x)
            direction = _unit(n, key[0]) if key[0] == key[1] else _unit(n, *key)
            jet = jet_eval(self._f, self._x, direction)
            self._jets[key] = jet
        return jet

    @property
    def value(self) -> Scalar:
        """The value of the function at the point."""
        return self._jet(0, 0).v0

    def first(self, i: int) -> Scalar:
        """Return ``∂f/∂x^i``."""
        return self._jet(i, i).v1

    def second(self, i: int, j: int) -> Scalar:
        """Return ``∂²f/∂x^i∂x^j``."""
        if i == j:
            return self._jet(i, i).v2
        both = self._jet(i, j).v2
        return 0.5 * (both - self._jet(i, i).v2 - self._jet(j, j).v2)


def mixed_partial(f: ScalarField, x: Sequence[Scalar], i: int, j: int) -> Scalar:
    """Return the second partial derivative ``∂²f/∂x^i∂x^j`` (0-based indices).

    >>> round(mixed_partial(lambda z: z[0] * z[0] * z[1], [1.5, 2.0], 0, 1), 12)
    3.0
    """
    return PartialDerivatives(f, x).second(i, j)


def gradient(f: ScalarField, x: Sequence[Scalar]) -> npt.NDArray[Any]:
    """Return the gradient of a scalar function as an object array."""
    partials = PartialDerivatives(f, x)
    return np.array([partials.first(i) for i in range(len(x))], dtype=object)


def hessian(
    f: ScalarField,
    x: Sequence[Scalar],
    rows: Sequence[int] | None = None,
    columns: Sequence[int] | None = None,
) -> npt.NDArray[Any]:
    """Return a block of the Hessian of a scalar function as an object array.

    Args:
        f: The scalar function.
        x: The point.
        rows: The variable indices of the block rows. Defaults to all variables.
        columns: The variable indices of the block columns. Defaults to ``rows``.

    Returns:
        The ``len(rows) × len(columns)`` block of second partials.
    """
    rows = list(range(len(x))) if rows is None else list(rows)
    columns = rows if columns is None else list(columns)
    partials = PartialDerivatives(f, x)
    block = np.empty((len(rows), len(columns)), dtype=object)
    for r, i in enumerate(rows):
        for c, j in enumerate(columns):
            block[r, c] = partials.second(i, j)
    return block


def third_partials(f: ArrayField, x: Sequence[Scalar]) -> npt.NDArray[Any]:
    """Return every third partial derivative of a vector-valued function.

    The diagonal values ``D³f[v, v, v]`` along sums of up to three coordinate
    directions are combined by polarization,
    ``6 ∂i∂j∂k f = D³f[ei+ej+ek] − D³f[ei+ej] − D³f[ei+ek] − D³f[ej+ek]
    + D³f[ei] + D³f[ej] + D³f[ek]``.

    Args:
        f: A function returning a one-dimensional array-like of scalars.
        x: The point.

    Returns:
        An object array ``T[i, j, k, c] = ∂³f^c/∂x^i∂x^j∂x^k``, symmetric in
        its first three indices.

    >>> T = third_partials(lambda z: [z[0] * z[0] * z[1]], [1.0, 2.0])
    >>> float(T[0, 0, 1, 0]), float(T[1, 0, 0, 0]), float(T[0, 0, 0, 0])
    (2.0, 2.0, 0.0)
    """
    n = len(x)
    cubes: dict[tuple[int, ...], npt.NDArray[Any]] = {}

    def cube(*indices: int) -> npt.NDArray[Any]:
        key = tuple(sorted(indices))
        if key not in cubes:
            v = _unit(n, *key)

            def second(w: Sequence[Scalar]) -> npt.NDArray[Any]:
                return directional_derivatives(f, w, v)[2]

            cubes[key] = directional_derivatives(second, x, v)[1]
        return cubes[key]

    components = cube(0).shape[0]
    result = np.empty((n, n, n, components), dtype=object)
    for i, j, k in itertools.combinations_with_replacement(range(n), 3):
        value = (
            cube(i, j, k)
            - cube(i, j)
            - cube(i, k)
            - cube(j, k)
            + cube(i)
            + cube(j)
            + cube(k)
        ) / 6.0
        for index in set(itertools.permutations((i, j, k))):
            result[index + (slice(None),)] = value
    return result


def as_real_array(values: Any) -> npt.NDArray[Any]:
    """Return a float array if no element is a jet, otherwise an object array."""
    array = np.asarray(values, dtype=object)
    if any(isinstance(item, Jet2) for item in array.flat):
        return array
    return array.astype(float)


def primal_array(values: Any) -> npt.NDArray[np.float64]:
    """Return the innermost real values of an array of scalars."""
    array = np.asarray(values, dtype=object)
    result = np.empty(array.shape, dtype=float)
    for index in np.ndindex(array.shape):
        result[index] = primal(array[index])
    return result
