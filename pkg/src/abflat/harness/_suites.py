"""The registered verification suites."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from fractions import Fraction

import numpy as np

from abflat._errors import ConfigurationError
from abflat.catalog import (
    build_metric,
    closed_form_taylor_coefficients,
    deform_m_kropina,
    eta_family_parameters,
    eta_field_from_params,
    identify_tilde_forms,
    leading_series_coefficients,
    make_phi_closed_forms,
    make_third_class_eta,
    profile_ode_residual,
    second_class_identity_residual,
    series_solve,
)
from abflat.conditions import (
    CaseResiduals,
    ConditionParams,
    check_case_i,
    check_case_iii,
    check_flat_parallel,
)
from abflat.harness._recorder import SuiteRecorder
from abflat.harness._sampling import sample_domain
from abflat.harness._types._suite_config import SuiteConfig
from abflat.jets import Scalar, primal_array
from abflat.metric import (
    ABMetric,
    PhiFamily,
    PhiSpec,
    antisymmetry_residual,
    berwald_residual,
    f_eval,
    flag_curvature_projflat,
    relative_difference,
    spray_generic,
    spray_structured,
)
from abflat.riemann import RiemannData, riemann_curvature, spray_riemann

_logger = logging.getLogger(__name__)

SuiteRunner = Callable[[SuiteConfig, SuiteRecorder], None]

SERIES_ORDER = 4
TAYLOR_ORDER = 6
PERTURBATION = 0.1


class Suite:
    """A named group of checks run against one family of metrics or profiles."""

    __slots__ = ("identifier", "summary", "relations", "box_half_width", "min_dim", "_run")

    def __init__(
        self,
        identifier: str,
        run: SuiteRunner,
        *,
        summary: str,
        relations: Sequence[str],
        box_half_width: float = 1.0,
        min_dim: int = 2,
    ) -> None:
        """Initialize a Suite instance.

        Args:
            identifier: The identifier used on the command line.
            run: The function that evaluates the checks.
            summary: A one-line description of the claim the suite verifies.
            relations: The relations the suite exercises, for ``explain``.
            box_half_width (optional): The default sample box is ``[−h, h]ⁿ``.
            min_dim (optional): The smallest supported dimension.
        """
        self.identifier = identifier
        self.summary = summary
        self.relations = tuple(relations)
        self.box_half_width = box_half_width
        self.min_dim = min_dim
        self._run = run

    def default_domain(self, dim: int) -> list[tuple[float, float]]:
        """Return the default sample box in dimension ``dim``."""
        return [(-self.box_half_width, self.box_half_width)] * dim

    def run(self, config: SuiteConfig, recorder: SuiteRecorder) -> None:
        """Run the checks of the suite.

        Raises:
            ConfigurationError: If the dimension is not supported.
        """
        if config.dim < self.min_dim:
            raise ConfigurationError(
                f"Suite {self.identifier} needs dimension {self.min_dim} or more, got {config.dim}."
            )
        self._run(config, recorder)

    def explain(self) -> str:
        """Return a description of the suite and the relations it exercises."""
        lines = [f"{self.identifier}: {self.summary}", "Relations exercised:"]
        lines.extend(f"  - {relation}" for relation in self.relations)
        return "\n".join(lines)

    def __str__(self) -> str:
        """Return a string representation of the Suite."""
        return f"Suite({self.identifier})"


def _metric(config: SuiteConfig, identifier: str) -> ABMetric:
    try:
        return build_metric(identifier, config.dim, config.params)
    except ValueError as e:
        raise ConfigurationError(f"Cannot build {identifier}: {e}") from e


def _eta_family(config: SuiteConfig, m: float) -> ABMetric:
    try:
        return make_third_class_eta(config.dim, m, 0.0, eta_field_from_params(config.params))
    except ValueError as e:
        raise ConfigurationError(f"Cannot build the η-family: {e}") from e


def _param(config: SuiteConfig, name: str, default: float) -> float:
    try:
        return float(config.params.get(name, default))
    except (TypeError, ValueError) as e:
        raise ConfigurationError(f"Parameter {name} must be a number.") from e


def _max_abs(values: object) -> float:
    return float(np.max(np.abs(primal_array(values)), initial=0.0))


def _record_worst(recorder: SuiteRecorder, name: str, residuals: CaseResiduals) -> None:
    recorder.record(name, residuals.worst)


def _declare_spray_checks(recorder: SuiteRecorder) -> None:
    recorder.declare("route-equivalence", "Euler-Lagrange G^i = structured G^i", "spray")
    recorder.declare("projective-flatness", "G^i y^j − G^j y^i = 0", "projective")


def _record_spray(
    recorder: SuiteRecorder, metric: ABMetric, x: list[float], y: list[float]
) -> None:
    structured = spray_structured(metric, x, y)
    generic = spray_generic(metric, x, y)
    recorder.record("route-equivalence", relative_difference(generic, structured))
    recorder.record("projective-flatness", antisymmetry_residual(structured, y))


_FLAT_RELATIONS = {
    "symmetric-derivative": "r_ij = 0",
    "antisymmetric-derivative": "s_ij = 0",
    "riemann-curvature": "R^i_jkl(α) = 0",
}


def _declare_flat(recorder: SuiteRecorder, prefix: str = "") -> None:
    for tag, relation in _FLAT_RELATIONS.items():
        recorder.declare(prefix + tag, relation, "flatness")


def _record_flat(
    recorder: SuiteRecorder, g: RiemannData, x: list[float], y: list[float], prefix: str = ""
) -> None:
    for tag, value in check_flat_parallel(g, [(x, y)]).residuals.items():
        recorder.record(prefix + tag, value)


def _run_flat_parallel(config: SuiteConfig, recorder: SuiteRecorder) -> None:
    metric = _metric(config, "flat-parallel")
    _declare_flat(recorder)
    _declare_spray_checks(recorder)
    recorder.declare("flag-curvature", "K = 0", "curvature")
    for index, (x, y) in enumerate(sample_domain(config, metric=metric)):
        with recorder.sample(index, "flat-parallel"):
            _record_flat(recorder, metric.geom, x, y)
            _record_spray(recorder, metric, x, y)
            recorder.record("flag-curvature", abs(flag_curvature_projflat(metric, x, y)))


def _constant_curvature_runner(identifier: str, expected: float) -> SuiteRunner:
    def run(config: SuiteConfig, recorder: SuiteRecorder) -> None:
        metric = _metric(config, identifier)
        _declare_spray_checks(recorder)
        recorder.declare("flag-curvature", f"K = {expected}", "curvature")
        for index, (x, y) in enumerate(sample_domain(config, metric=metric)):
            with recorder.sample(index, identifier):
                _record_spray(recorder, metric, x, y)
                K = flag_curvature_projflat(metric, x, y)
                recorder.record("flag-curvature", abs(K - expected))

    return run


def _run_mkropina_eta(config: SuiteConfig, recorder: SuiteRecorder) -> None:
    m = _param(config, "m", 2.0)
    k = _param(config, "k", 0.0)
    eta = eta_field_from_params(config.params)
    metric = _metric(config, "third-class-eta")
    params = eta_family_parameters(eta, m)
    witness = eta.amplitude != 0.0
    kropina = m == -1.0 and k == 0.0
    _declare_spray_checks(recorder)
    recorder.declare("flag-curvature", "K = 0", "curvature")
    recorder.declare("berwald", "∂³G^i/∂y^j∂y^k∂y^l = 0", "first_derivative")
    if witness:
        recorder.declare("non-flat-alpha", "max |R^i_jkl(α)|", "nonflat", ">=")
    if k == 0.0:
        recorder.declare("third-class-conditions", "third-class conditions", "first_derivative")
    if kropina:
        recorder.declare("x-independence", "F(x, y) = F(0, y)", "algebraic")
    origin = [0.0] * config.dim
    for index, (x, y) in enumerate(sample_domain(config, metric=metric)):
        with recorder.sample(index, "mkropina-eta"):
            _record_spray(recorder, metric, x, y)
            recorder.record("flag-curvature", abs(flag_curvature_projflat(metric, x, y)))
            recorder.record("berwald", berwald_residual(metric, x, y))
            if witness:
                recorder.record("non-flat-alpha", _max_abs(riemann_curvature(metric.geom, x)))
            if k == 0.0:
                residuals = check_case_iii(
                    metric.geom, m, k, params, [(x, y)], check_curvature=False
                )
                _record_worst(recorder, "third-class-conditions", residuals)
            if kropina:
                here = float(f_eval(metric, x, y))
                there = float(f_eval(metric, origin, y))
                recorder.record("x-independence", abs(here - there) / (1.0 + abs(there)))


def _run_kropina_deformation(config: SuiteConfig, recorder: SuiteRecorder) -> None:
    m = _param(config, "m", -1.0)
    source = _eta_family(config, m)
    deformed = deform_m_kropina(source.geom, m)
    params = eta_family_parameters(eta_field_from_params(config.params), m)
    _declare_flat(recorder, "deformed-")
    recorder.declare("deformed-spray", "G^i(α̃) = 0", "flatness")
    if m == -1.0:
        recorder.declare("first-class-conditions", "first-class conditions", "first_derivative")
    for index, (x, y) in enumerate(sample_domain(config, metric=source)):
        with recorder.sample(index, "kropina-deformation"):
            _record_flat(recorder, deformed, x, y, "deformed-")
            recorder.record("deformed-spray", _max_abs(spray_riemann(deformed, x, y)))
            if m == -1.0:
                residuals = check_case_i(source.geom, 0.0, params, [(x, y)])
                _record_worst(recorder, "first-class-conditions", residuals)


def _rational(rng: np.random.Generator, low: int, high: int, denominators: int) -> Fraction:
    return Fraction(int(rng.integers(low, high)), int(rng.integers(1, denominators + 1)))


def _draw_series_parameters(rng: np.random.Generator) -> tuple[Fraction, Fraction, Fraction]:
    while True:
        m = _rational(rng, -9, 20, 4)
        if m in (0, 1) or any(m + 2 * j == 0 for j in range(1, SERIES_ORDER + 1)):
            continue
        k = _rational(rng, -5, 6, 4)
        b = _rational(rng, 1, 9, 4)
        if k * b * b != 1:
            return m, k, b


def _coefficient_difference(left: Sequence[Fraction], right: Sequence[Fraction]) -> float:
    return max(
        (float(abs(a - c)) / (1.0 + float(abs(c))) for a, c in zip(left, right)), default=0.0
    )


def _relative_gap(value: Scalar, exact: Scalar) -> float:
    return abs(float(value) - float(exact)) / (1.0 + abs(float(exact)))


def _record_coefficients(recorder: SuiteRecorder, rng: np.random.Generator) -> None:
    m, k, b = _draw_series_parameters(rng)
    series = series_solve(m, k, b, SERIES_ORDER).coeffs
    closed = leading_series_coefficients(m, k, b)
    recorder.record("series-closed-forms", _coefficient_difference(series, closed))

    two = Fraction(2)
    taylor = closed_form_taylor_coefficients("fourth-m2", two, k, b, TAYLOR_ORDER)
    series = series_solve(two, k, b, TAYLOR_ORDER).coeffs
    recorder.record("series-fourth-m2-taylor", _coefficient_difference(series, taylor))

    critical_k = 1 / (b * b)
    taylor = closed_form_taylor_coefficients("critical", m, critical_k, b, TAYLOR_ORDER)
    series = series_solve(m, critical_k, b, TAYLOR_ORDER).coeffs
    recorder.record("series-critical-taylor", _coefficient_difference(series, taylor))


def _run_ode_series(config: SuiteConfig, recorder: SuiteRecorder) -> None:
    b = _param(config, "b", 1.0)
    k = _param(config, "k", 0.0)
    m = _param(config, "m", 3.0)
    if b <= 0.0 or k * b * b >= 1.0:
        raise ConfigurationError(f"The suite needs b > 0 and k b² < 1, got b={b}, k={k}.")
    try:
        quadrature = PhiSpec(PhiFamily.FOURTH_CLASS_QUADRATURE, m=m, k=k, b=b)
    except ValueError as e:
        raise ConfigurationError(f"Cannot build the quadrature profile: {e}") from e
    quadrature_m2 = PhiSpec(PhiFamily.FOURTH_CLASS_QUADRATURE, m=2.0, k=k, b=b)
    quadrature_m4 = PhiSpec(PhiFamily.FOURTH_CLASS_QUADRATURE, m=4.0, k=k, b=b)
    closed_m2 = make_phi_closed_forms("fourth-m2", b=b, k=k)
    closed_m4 = make_phi_closed_forms("fourth-m4", b=b, k=k)
    critical = make_phi_closed_forms("critical", b=b, m=m)
    critical_k = 1.0 / (b * b)

    recorder.declare("series-closed-forms", "recurrence = closed forms of c_1..c_4", "identity")
    recorder.declare("series-fourth-m2-taylor", "recurrence = Taylor series, m = 2", "identity")
    recorder.declare("series-critical-taylor", "recurrence = Taylor series, k = 1/b²", "identity")
    recorder.declare("quadrature-fourth-m2", "quadrature = closed form, m = 2", "first_derivative")
    recorder.declare("quadrature-fourth-m4", "quadrature = closed form, m = 4", "first_derivative")
    recorder.declare("quadrature-ode", "quadrature solves the profile equation", "ode")
    recorder.declare("closed-form-ode", "m = 2, 4 closed forms solve it", "first_derivative")
    recorder.declare("critical-ode", "s^m (1 − s²/b²)^((1−m)/2) solves it", "first_derivative")

    rng = np.random.default_rng(config.seed)
    for index in range(config.samples):
        with recorder.sample(index, "ode-series/coefficients"):
            _record_coefficients(recorder, rng)

    for index, draw in enumerate(rng.uniform(0.05, 0.95, size=config.samples)):
        s = b * float(draw)
        with recorder.sample(index, "ode-series/profiles"):
            recorder.record("quadrature-fourth-m2", _relative_gap(quadrature_m2(s), closed_m2(s)))
            recorder.record("quadrature-fourth-m4", _relative_gap(quadrature_m4(s), closed_m4(s)))
            recorder.record("quadrature-ode", profile_ode_residual(quadrature, m, k, b, s))
            closed_residual = max(
                profile_ode_residual(closed_m2, 2.0, k, b, s),
                profile_ode_residual(closed_m4, 4.0, k, b, s),
            )
            recorder.record("closed-form-ode", closed_residual)
            recorder.record("critical-ode", profile_ode_residual(critical, m, critical_k, b, s))


def _run_tilde_forms(config: SuiteConfig, recorder: SuiteRecorder) -> None:
    rng = np.random.default_rng(config.seed)
    recorder.declare("randers-form", "α φ(β/α) = α̃ + β̃ for m = 2", "identity")
    recorder.declare("square-form", "α φ(β/α) = (α̃ + β̃)²/α̃ for m = 4", "identity")
    for index in range(config.samples):
        b = float(rng.uniform(0.2, 1.5))
        k = float(rng.uniform(-2.0, 0.9)) / (b * b)
        alpha = float(rng.uniform(0.1, 2.0))
        beta = alpha * b * float(rng.uniform(-0.99, 0.99))
        with recorder.sample(index, "tilde-forms"):
            (f_m2, randers), (f_m4, square) = identify_tilde_forms(b, k, alpha, beta)
            recorder.record("randers-form", _relative_gap(randers, f_m2))
            recorder.record("square-form", _relative_gap(square, f_m4))


def _perturbed_one_form(g: RiemannData) -> RiemannData:
    def one_form(x: Sequence[Scalar]) -> list[Scalar]:
        b = list(g.one_form(x))
        b[0] = b[0] + PERTURBATION * x[0]
        return b

    return RiemannData(g.dim, g.metric, one_form, name=f"perturbed({g.name})")


def _shifted_tau(params: ConditionParams) -> ConditionParams:
    tau = params.tau
    return ConditionParams(rho=params.rho, tau=lambda x: tau(x) + PERTURBATION, mu=params.mu)


def _shifted_mu(params: ConditionParams) -> ConditionParams:
    mu = params.mu
    assert mu is not None
    return ConditionParams(rho=params.rho, tau=params.tau, mu=lambda x: mu(x) + PERTURBATION)


def _check_flat_parallel_detection(config: SuiteConfig, recorder: SuiteRecorder) -> None:
    recorder.declare("flat-parallel-passes", "r_ij = 0, s_ij = 0, R(α) = 0", "flatness")
    recorder.declare("flat-parallel-detects-beta", "β + 0.1 x¹ dx¹", "nonflat", ">=")
    flat = _metric(config, "flat-parallel")
    perturbed = _perturbed_one_form(flat.geom)
    for index, (x, y) in enumerate(sample_domain(config, metric=flat)):
        with recorder.sample(index, "condition-checkers/flat-parallel"):
            sample = [(x, y)]
            _record_worst(recorder, "flat-parallel-passes", check_flat_parallel(flat.geom, sample))
            _record_worst(
                recorder, "flat-parallel-detects-beta", check_flat_parallel(perturbed, sample)
            )


def _check_third_class_detection(config: SuiteConfig, recorder: SuiteRecorder, m: float) -> None:
    recorder.declare("third-class-passes", "third-class conditions", "first_derivative")
    recorder.declare("third-class-detects-rho", "ρ + 0.1 dx¹", "nonflat", ">=")
    recorder.declare("third-class-detects-tau", "τ + 0.1", "nonflat", ">=")
    metric = _eta_family(config, m)
    params = eta_family_parameters(eta_field_from_params(config.params), m)
    rho_offset = [PERTURBATION] + [0.0] * (config.dim - 1)
    variants = {
        "third-class-passes": params,
        "third-class-detects-rho": params.with_rho_offset(rho_offset),
        "third-class-detects-tau": _shifted_tau(params),
    }
    for index, (x, y) in enumerate(sample_domain(config, metric=metric)):
        with recorder.sample(index, "condition-checkers/third-class"):
            for name, variant in variants.items():
                residuals = check_case_iii(
                    metric.geom, m, 0.0, variant, [(x, y)], check_curvature=False
                )
                _record_worst(recorder, name, residuals)


def _check_first_class_detection(config: SuiteConfig, recorder: SuiteRecorder) -> None:
    recorder.declare("first-class-passes", "first-class conditions", "first_derivative")
    recorder.declare("first-class-detects-rho", "ρ + 0.1 dx¹", "nonflat", ">=")
    recorder.declare("first-class-detects-mu", "μ + 0.1", "nonflat", ">=")
    metric = _eta_family(config, -1.0)
    params = eta_family_parameters(eta_field_from_params(config.params), -1.0)
    rho_offset = [PERTURBATION] + [0.0] * (config.dim - 1)
    variants = {
        "first-class-passes": params,
        "first-class-detects-rho": params.with_rho_offset(rho_offset),
        "first-class-detects-mu": _shifted_mu(params),
    }
    for index, (x, y) in enumerate(sample_domain(config, metric=metric)):
        with recorder.sample(index, "condition-checkers/first-class"):
            for name, variant in variants.items():
                _record_worst(recorder, name, check_case_i(metric.geom, 0.0, variant, [(x, y)]))


def _check_second_class_identity(
    config: SuiteConfig, recorder: SuiteRecorder, m: float, k: float
) -> None:
    recorder.declare(
        "second-class-identity", "φ'' = (k s² − m)(φ − sφ')/(s²(1 + k s²))", "first_derivative"
    )
    try:
        profiles = [PhiSpec(PhiFamily.SECOND_CLASS, m=m, k=k, a1=a1) for a1 in (0.0, 0.5)]
    except ValueError as e:
        raise ConfigurationError(f"Cannot build the second-class profile: {e}") from e
    rng = np.random.default_rng(config.seed)
    for index, draw in enumerate(rng.uniform(0.1, 0.9, size=config.samples)):
        s = float(draw)
        with recorder.sample(index, "condition-checkers/second-class"):
            residual = max(second_class_identity_residual(phi, m, k, s) for phi in profiles)
            recorder.record("second-class-identity", residual)


def _run_condition_checkers(config: SuiteConfig, recorder: SuiteRecorder) -> None:
    m = _param(config, "m", 2.0)
    k = _param(config, "k", 0.0)
    _check_flat_parallel_detection(config, recorder)
    _check_third_class_detection(config, recorder, m)
    _check_first_class_detection(config, recorder)
    _check_second_class_identity(config, recorder, m, k)


SUITES: dict[str, Suite] = {
    suite.identifier: suite
    for suite in (
        Suite(
            "flat-parallel",
            _run_flat_parallel,
            summary="flat α with parallel β gives a locally Minkowskian metric",
            relations=(
                "r_ij = 0, s_ij = 0 and R^i_jkl(α) = 0",
                "Euler-Lagrange G^i = structured G^i",
                "G^i = P y^i",
                "K = (P² − P_{x^k} y^k)/F² = 0",
            ),
        ),
        Suite(
            "randers-klein",
            _constant_curvature_runner("randers-klein", -0.25),
            summary="the Funk-type Randers metric on the unit ball has K = −1/4",
            relations=(
                "α = Klein metric, β = ±{⟨x, y⟩/(1 − |x|²) + ⟨a, y⟩/(1 + ⟨a, x⟩)}",
                "Euler-Lagrange G^i = structured G^i",
                "G^i = P y^i",
                "K = (P² − P_{x^k} y^k)/F² = −1/4",
            ),
            box_half_width=0.5,
        ),
        Suite(
            "square-klein",
            _constant_curvature_runner("square-klein", 0.0),
            summary="the square metric (α + β)²/α on the unit ball has K = 0",
            relations=(
                "α and β are λ times the Klein metric and the Funk 1-form",
                "λ = (1 + ⟨a, x⟩)²/(1 − |x|²)",
                "Euler-Lagrange G^i = structured G^i",
                "G^i = P y^i",
                "K = 0",
            ),
            box_half_width=0.5,
        ),
        Suite(
            "mkropina-eta",
            _run_mkropina_eta,
            summary="β^m (α² + kβ²)^((1−m)/2) over the η-family is projectively flat with K = 0",
            relations=(
                "α² = η^(2m/(m−1)) |y|² − kη²(y¹)², β = η y¹",
                "G^i = P y^i and K = 0",
                "third y-derivatives of G^i vanish",
                "closed s, r-equation and Riemannian spray of the third class",
                "α is not flat although F is Minkowskian",
                "for m = −1, F does not depend on x",
            ),
        ),
        Suite(
            "kropina-deformation",
            _run_kropina_deformation,
            summary="the m-Kropina deformation of the η-family is flat with parallel 1-form",
            relations=(
                "α̃ = b^m α, β̃ = b^(m−1) β",
                "r̃_ij = 0, s̃_ij = 0, R(α̃) = 0 and G̃^i = 0",
                "for m = −1, the first-class conditions with ρ = (μβ + s_0)/b²",
            ),
        ),
        Suite(
            "ode-series",
            _run_ode_series,
            summary="series, quadrature and closed-form fourth-class profiles agree",
            relations=(
                "(φ − sφ' + (b² − s²)φ'')/(sφ + (b² − s²)φ') = (m − 1)/(s(1 − k s²))",
                "recurrence coefficients c_1..c_4 against their closed forms",
                "recurrence against the Taylor series of the m = 2 and k = 1/b² closed forms",
                "quadrature φ against the m = 2 and m = 4 closed forms",
            ),
            min_dim=1,
        ),
        Suite(
            "tilde-forms",
            _run_tilde_forms,
            summary="the m = 2 and m = 4 metrics are of Randers and square type",
            relations=(
                "α φ(β/α) = α̃ + β̃ for m = 2",
                "α φ(β/α) = (α̃ + β̃)²/α̃ for m = 4",
            ),
            min_dim=1,
        ),
        Suite(
            "condition-checkers",
            _run_condition_checkers,
            summary="the case checkers accept constructed data and reject perturbed data",
            relations=(
                "flat-parallel conditions, and their failure for a perturbed β",
                "third-class conditions, and their failure for shifted ρ or τ",
                "first-class conditions, and their failure for shifted ρ or μ",
                "φ'' = (k s² − m)(φ − sφ')/(s²(1 + k s²)) for second-class profiles",
            ),
        ),
    )
}


def suite_identifiers() -> list[str]:
    """Return the identifiers of the registered suites, in registration order."""
    return list(SUITES)


def get_suite(identifier: str) -> Suite:
    """Return a registered suite.

    Raises:
        ConfigurationError: If no suite has the identifier.
    """
    try:
        return SUITES[identifier]
    except KeyError as e:
        raise ConfigurationError(
            f"Unknown suite: {identifier!r}. Registered: {', '.join(SUITES)}"
        ) from e
