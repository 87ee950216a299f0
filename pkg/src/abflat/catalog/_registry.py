"""String identifiers for the catalog constructors, as used by suite configurations."""

from __future__ import annotations

from collections.abc import Callable, Mapping
from typing import Any

from abflat.catalog._closed_forms import make_phi_closed_forms
from abflat.catalog._klein import make_randers_klein, make_square_klein
from abflat.catalog._kropina import deform_kropina, make_flat_parallel, make_third_class_eta
from abflat.catalog._types._eta_field import EtaField
from abflat.metric import ABMetric, PhiFamily, PhiSpec

MetricBuilder = Callable[[int, Mapping[str, Any]], ABMetric]
ProfileBuilder = Callable[[Mapping[str, Any]], PhiSpec]


def eta_field_from_params(params: Mapping[str, Any]) -> EtaField:
    """Return the default η-field with the amplitude and frequency given in ``params``."""
    return EtaField(
        amplitude=float(params.get("eta_amplitude", 0.3)),
        frequency=float(params.get("eta_frequency", 1.0)),
    )


def _a_vec(params: Mapping[str, Any]) -> list[float] | None:
    a_vec = params.get("a_vec")
    return None if a_vec is None else [float(ai) for ai in a_vec]


def _flat_parallel(n: int, params: Mapping[str, Any]) -> ABMetric:
    b_vec = params.get("b_vec") or [0.5] + [0.0] * (n - 1)
    phi = PhiSpec(
        params.get("phi", PhiFamily.RANDERS.value),
        m=float(params.get("m", 2.0)),
        k=float(params.get("k", 0.0)),
        k1=float(params.get("k1", 0.0)),
        k2=float(params.get("k2", 0.0)),
    )
    return make_flat_parallel(n, [float(bi) for bi in b_vec], phi)


def _randers_klein(n: int, params: Mapping[str, Any]) -> ABMetric:
    return make_randers_klein(n, _a_vec(params), int(params.get("sign", 1)))


def _square_klein(n: int, params: Mapping[str, Any]) -> ABMetric:
    return make_square_klein(n, _a_vec(params), int(params.get("sign", 1)))


def _third_class_eta(n: int, params: Mapping[str, Any]) -> ABMetric:
    m = float(params.get("m", 2.0))
    return make_third_class_eta(n, m, float(params.get("k", 0.0)), eta_field_from_params(params))


def _kropina_deformation(n: int, params: Mapping[str, Any]) -> ABMetric:
    source = make_third_class_eta(n, -1.0, 0.0, eta_field_from_params(params))
    return ABMetric(deform_kropina(source.geom), PhiSpec(PhiFamily.FIRST_CLASS))


_METRICS: dict[str, MetricBuilder] = {
    "flat-parallel": _flat_parallel,
    "randers-klein": _randers_klein,
    "square-klein": _square_klein,
    "third-class-eta": _third_class_eta,
    "kropina-deformation": _kropina_deformation,
}

_PROFILES: dict[str, ProfileBuilder] = {
    "critical": lambda p: make_phi_closed_forms(
        "critical", b=float(p.get("b", 1.0)), m=float(p.get("m", 2.0))
    ),
    "fourth-m2": lambda p: make_phi_closed_forms(
        "fourth-m2", b=float(p.get("b", 1.0)), k=float(p.get("k", 0.0))
    ),
    "fourth-m4": lambda p: make_phi_closed_forms(
        "fourth-m4", b=float(p.get("b", 1.0)), k=float(p.get("k", 0.0))
    ),
    "fourth-quadrature": lambda p: PhiSpec(
        PhiFamily.FOURTH_CLASS_QUADRATURE,
        m=float(p.get("m", 2.0)),
        k=float(p.get("k", 0.0)),
        b=float(p.get("b", 1.0)),
    ),
}


def metric_identifiers() -> list[str]:
    """Return the identifiers of the registered metric constructors, sorted."""
    return sorted(_METRICS)


def profile_identifiers() -> list[str]:
    """Return the identifiers of the registered profile constructors, sorted."""
    return sorted(_PROFILES)


def build_metric(identifier: str, n: int, params: Mapping[str, Any] | None = None) -> ABMetric:
    """Build a registered metric in dimension n.

    Args:
        identifier: A registered identifier, for example "randers-klein".
        n: The dimension.
        params (optional): Constructor parameters such as ``m``, ``k``,
            ``a_vec``, ``sign``, ``b_vec``, ``eta_amplitude`` and ``eta_frequency``.

    Raises:
        ValueError: If the identifier is not registered or a parameter is invalid.
    """
    try:
        builder = _METRICS[identifier]
    except KeyError as e:
        raise ValueError(
            f"Unknown metric: {identifier!r}. Registered: {', '.join(metric_identifiers())}"
        ) from e
    return builder(n, params or {})


def build_profile(identifier: str, params: Mapping[str, Any] | None = None) -> PhiSpec:
    """Build a registered profile function.

    Raises:
        ValueError: If the identifier is not registered or a parameter is invalid.
    """
    try:
        builder = _PROFILES[identifier]
    except KeyError as e:
        raise ValueError(
            f"Unknown profile: {identifier!r}. Registered: {', '.join(profile_identifiers())}"
        ) from e
    return builder(params or {})
