"""Deterministic rejection sampling of ``(x, y)`` pairs."""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence

import numpy as np

from abflat._errors import AbflatError, SamplingError
from abflat.harness._types._suite_config import SuiteConfig
from abflat.metric import ABMetric, f_eval
from abflat.riemann import one_form_norm_squared

_logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 1000
"""Rejections allowed per sample before the box is considered misconfigured."""

MIN_DIRECTION_NORM = 0.1

Sample = tuple[list[float], list[float]]


def _admissible(metric: ABMetric, x: list[float], y: list[float]) -> bool:
    try:
        alpha = float(metric.geom.alpha(x, y))
        s = float(metric.geom.beta(x, y)) / alpha
        b = math.sqrt(float(one_form_norm_squared(metric.geom, x)))
        if not metric.phi.accepts_sample(s, b):
            return False
        metric.phi.check_domain(s)
        metric.phi.check_norm(b * b)
        return float(f_eval(metric, x, y)) > 0.0
    except (AbflatError, ArithmeticError) as e:
        _logger.debug("Rejected sample x=%s y=%s: %s", x, y, e)
        return False


def sample_domain(
    config: SuiteConfig,
    seed: int | None = None,
    metric: ABMetric | None = None,
    *,
    count: int | None = None,
) -> list[Sample]:
    """Draw ``(x, y)`` pairs for a suite run.

    x is uniform in the configured box, ``[−1, 1]ⁿ`` when none is set, and y
    is uniform in ``[−1, 1]ⁿ``. Draws with ``|y| < 0.1`` are rejected. When a
    metric is given, draws are also rejected if they violate the sampling
    policy or a parameter constraint of its profile, if F is not positive
    or if any field fails to evaluate. The sequence depends only on the
    configuration and the seed.

    Args:
        config: The suite configuration.
        seed (optional): The RNG seed. Defaults to the configured seed.
        metric (optional): The metric whose domain the samples must respect.
        count (optional): The number of samples. Defaults to the configured count.

    Raises:
        SamplingError: If a sample is still rejected after 1000 attempts.
    """
    rng = np.random.default_rng(config.seed if seed is None else seed)
    n = config.dim
    box: Sequence[tuple[float, float]] = config.domain or tuple((-1.0, 1.0) for _ in range(n))
    low = np.array([interval[0] for interval in box])
    high = np.array([interval[1] for interval in box])
    wanted = config.samples if count is None else count

    samples: list[Sample] = []
    attempts = 0
    for index in range(wanted):
        for _ in range(MAX_ATTEMPTS):
            attempts += 1
            x = rng.uniform(low, high).tolist()
            y = rng.uniform(-1.0, 1.0, size=n).tolist()
            if float(np.linalg.norm(y)) < MIN_DIRECTION_NORM:
                continue
            if metric is None or _admissible(metric, x, y):
                samples.append((x, y))
                break
        else:
            raise SamplingError(
                f"Sample {index} was rejected {MAX_ATTEMPTS} times; check the sample box {box}."
            )
    rejected = attempts - wanted
    if wanted and rejected > attempts / 2:
        _logger.warning(
            "Rejected %d of %d draws (%.0f%%).", rejected, attempts, 100 * rejected / attempts
        )
    return samples
