"""Matrix inversion over real numbers and jets."""

from __future__ import annotations

import logging
from typing import Any

import numpy as np
import numpy.typing as npt

from abflat._errors import SingularMatrixError
from abflat.jets import Jet2, primal, primal_array

_logger = logging.getLogger(__name__)

CONDITION_LIMIT = 1e12
_CONDITION_WARNING = 1e8


def check_condition(matrix: npt.NDArray[Any], what: str = "Matrix") -> float:
    """Return the condition number of the real part of a matrix.

    Raises:
        SingularMatrixError: If the condition number exceeds ``CONDITION_LIMIT``.
    """
    real = primal_array(matrix)
    condition = float(np.linalg.cond(real))
    if not np.isfinite(condition) or condition > CONDITION_LIMIT:
        raise SingularMatrixError(f"{what} is singular (condition number {condition:.3e}).")
    if condition > _CONDITION_WARNING:
        _logger.warning("%s is ill-conditioned (condition number %.3e).", what, condition)
    return condition


def invert(matrix: npt.NDArray[Any], what: str = "Matrix") -> npt.NDArray[Any]:
    """Return the inverse of a square matrix of real numbers or jets.

    Real matrices are inverted by LAPACK. Matrices holding jets go through
    Gauss-Jordan elimination with partial pivoting on the real parts, which
    propagates every derivative level exactly.

    Args:
        matrix: A square matrix.
        what: A name for the matrix, used in error messages.

    Returns:
        The inverse, as a float array for real input and an object array otherwise.

    Raises:
        SingularMatrixError: If the matrix is numerically singular.
    """
    array = np.asarray(matrix, dtype=object)
    n, m = array.shape
    if n != m:
        raise ValueError(f"{what} must be square, got shape {array.shape}.")
    check_condition(array, what)
    if not any(isinstance(item, Jet2) for item in array.flat):
        return np.linalg.inv(array.astype(float))

    work = [list(array[i]) + [1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    for column in range(n):
        pivot = max(range(column, n), key=lambda row: abs(primal(work[row][column])))
        if primal(work[pivot][column]) == 0.0:
            raise SingularMatrixError(f"{what} is singular (zero pivot in column {column}).")
        work[column], work[pivot] = work[pivot], work[column]
        pivot_row = work[column]
        head = pivot_row[column]
        work[column] = pivot_row = [entry / head for entry in pivot_row]
        for row in range(n):
            if row == column:
                continue
            factor = work[row][column]
            if isinstance(factor, float) and factor == 0.0:
                continue
            work[row] = [entry - factor * p for entry, p in zip(work[row], pivot_row)]
    return np.array([row[n:] for row in work], dtype=object)
