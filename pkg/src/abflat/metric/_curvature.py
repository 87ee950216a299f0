"""Flag curvature of projectively flat metrics."""

from __future__ import annotations

import logging
from collections.abc import Sequence

from abflat.jets import Scalar, jet_eval, primal
from abflat.metric._spray import PROJECTIVE_TOLERANCE, SprayRoute, _projective_factor, f_eval
from abflat.metric._types._ab_metric import ABMetric

_logger = logging.getLogger(__name__)


def flag_curvature_projflat(
    M: ABMetric,
    x: Sequence[Scalar],
    y: Sequence[Scalar],
    tol: float = PROJECTIVE_TOLERANCE,
    route: SprayRoute = "structured",
) -> float:
    """Return the flag curvature ``K = (P² − P_{x^k} y^k) / F²`` of a projectively flat metric.

    ``P_{x^k} y^k`` is the first directional derivative along y of the whole
    projective-factor evaluation, lifted in x.

    Args:
        M: The metric.
        x: The point.
        y: The flag pole.
        tol: The collinearity tolerance for the projective factor.
        route: The spray route used inside the projective factor.

    Raises:
        NotProjectivelyFlatError: If the spray is not collinear with y.
    """
    lifted = jet_eval(lambda z: _projective_factor(M, z, y, tol, route), x, y)
    P = primal(lifted.v0)
    P_x = primal(lifted.v1)
    F = primal(f_eval(M, x, y))
    K = (P * P - P_x) / (F * F)
    _logger.debug("Flag curvature at x=%s, y=%s: P=%r, P_x·y=%r, K=%r", x, y, P, P_x, K)
    return K
