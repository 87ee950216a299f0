"""Acceptance tests for the determinism of suite reports."""

import json

import pytest

from abflat.harness import SuiteConfig, report_to_json, run_suite, suite_identifiers

pytestmark = pytest.mark.slow


def _document_without_runtime(config: SuiteConfig) -> str:
    value = json.loads(report_to_json(run_suite(config)))
    del value["runtime_ms"]
    return json.dumps(value, indent=2, ensure_ascii=False)


@pytest.mark.parametrize("suite", suite_identifiers())
def test___same_config_and_seed___two_runs___write_identical_reports(suite: str) -> None:
    config = SuiteConfig(suite, dim=2, samples=50, seed=2)

    assert _document_without_runtime(config) == _document_without_runtime(config)
