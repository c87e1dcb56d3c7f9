"""
Purpose
-------
Unit tests for `cli.verify_suite`.

Key behaviors
-------------
- Selected criteria run in order, each logging `criterion_done`, and the
  suite logs `suite_done`.
- Exceptions inside a criterion become failed results; a non-convergence is
  flagged and alone yields exit code 3, any other failure exit code 1.
- The JSON form writes a crashed criterion's NaN measurement as null and the
  table marks it `NOCONV` or `FAIL`.

Conventions
-----------
- Cheap criteria (closed-form spectra, sub-complexity, degree gaps) run for
  real; failure modes use stub criteria installed with `monkeypatch`.

Downstream usage
----------------
Run via `pytest` as part of the CI suite.
"""

from __future__ import annotations

import json
import math
from typing import Any

import pytest

from cli import verify_suite
from cli.cli_config import EXIT_FAILURE, EXIT_NON_CONVERGENCE, EXIT_OK
from cli.run_config import RunConfig, build_run_config, config_hash
from cli.verify_suite import CRITERIA, Measurement, run_verify_suite
from graphs.graph_core.graph_errors import GraphDomainError, NonConvergenceError


@pytest.fixture
def verify_config() -> RunConfig:
    return build_run_config({"subcommand": "verify", "seed": 5})


def _stalled(config: RunConfig) -> Measurement:
    raise NonConvergenceError("Lanczos stalled", 0.5, 300)


def _broken(config: RunConfig) -> Measurement:
    raise GraphDomainError("bad window")


def _holds(config: RunConfig) -> Measurement:
    return Measurement(0.0, "<= 1", 1.0, True)


def test_criteria_table_is_complete() -> None:
    assert [c[0] for c in CRITERIA] == list(range(1, 15))


@pytest.mark.parametrize("only", [[1, 2, 3], [10], [13]])
def test_selected_criteria_pass(
    only: list[int], verify_config: RunConfig, capture_logger: Any
) -> None:
    suite = run_verify_suite(verify_config, capture_logger, only=only)

    assert [c.criterion_id for c in suite.criteria] == only
    assert all(c.verdict for c in suite.criteria), [c.diagnostic for c in suite.criteria]
    assert suite.exit_code == EXIT_OK
    assert suite.seed == 5
    assert suite.config_hash == config_hash(verify_config)
    assert len(capture_logger.events("criterion_done")) == len(only)
    assert capture_logger.events("suite_done") == [{"passed": True}]


def test_non_convergence_only_gives_exit_3(
    monkeypatch: pytest.MonkeyPatch, verify_config: RunConfig
) -> None:
    monkeypatch.setattr(
        verify_suite, "CRITERIA", ((1, "ok", "holds", _holds), (2, "stall", "converges", _stalled))
    )

    suite = run_verify_suite(verify_config)
    stalled = suite.criteria[1]

    assert suite.exit_code == EXIT_NON_CONVERGENCE
    assert stalled.non_convergence
    assert math.isnan(stalled.measured)
    assert "last residual 5.000e-01" in stalled.diagnostic
    assert "NOCONV" in suite.table()
    document = json.loads(json.dumps(suite.to_json_dict(), allow_nan=False))
    assert document["criteria"][1]["measured"] is None
    assert document["exit_code"] == EXIT_NON_CONVERGENCE


def test_other_failures_give_exit_1(
    monkeypatch: pytest.MonkeyPatch, verify_config: RunConfig, capture_logger: Any
) -> None:
    monkeypatch.setattr(
        verify_suite,
        "CRITERIA",
        ((1, "stall", "converges", _stalled), (2, "broken", "no error", _broken)),
    )

    suite = run_verify_suite(verify_config, capture_logger)

    assert suite.exit_code == EXIT_FAILURE
    assert not suite.passed
    assert suite.criteria[1].diagnostic == "GraphDomainError: bad window"
    assert not suite.criteria[1].non_convergence
    warnings = [call for call in capture_logger.calls if call[0] == "WARNING"]
    assert len(warnings) == 2
    assert suite.table().endswith("overall: FAIL")
