"""Public API for running verification suites and reporting their results."""

from abflat.harness._cli import main
from abflat.harness._json_conversion import format_report_text, report_from_json, report_to_json
from abflat.harness._recorder import SuiteRecorder
from abflat.harness._runner import emit_report, engine_version, run_suite
from abflat.harness._sampling import sample_domain
from abflat.harness._suites import Suite, get_suite, suite_identifiers
from abflat.harness._types._check_result import CheckResult
from abflat.harness._types._incident import Incident
from abflat.harness._types._outcome import Outcome
from abflat.harness._types._suite_config import DEFAULT_TOLERANCES, SuiteConfig
from abflat.harness._types._suite_report import SCHEMA_VERSION, SuiteReport

__all__ = [
    "CheckResult",
    "DEFAULT_TOLERANCES",
    "Incident",
    "Outcome",
    "SCHEMA_VERSION",
    "Suite",
    "SuiteConfig",
    "SuiteRecorder",
    "SuiteReport",
    "emit_report",
    "engine_version",
    "format_report_text",
    "get_suite",
    "main",
    "report_from_json",
    "report_to_json",
    "run_suite",
    "sample_domain",
    "suite_identifiers",
]

# Hide that it was not defined in this top-level package
CheckResult.__module__ = __name__
Incident.__module__ = __name__
Outcome.__module__ = __name__
Suite.__module__ = __name__
SuiteConfig.__module__ = __name__
SuiteRecorder.__module__ = __name__
SuiteReport.__module__ = __name__
