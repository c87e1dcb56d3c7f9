"""
Purpose
-------
Unit tests for `infra.logging.infra_logger`.

Key behaviors
-------------
- Entries below the threshold are dropped; unknown levels are written at the
  logger's own level.
- JSON entries stay valid JSON with numpy scalars and non-finite floats in
  the context; text entries are single `key=value` lines.
- `initialize_logger` honors `LOG_LEVEL`, `LOG_FORMAT` and `LOG_DEST`, and
  reports invalid values as `FALLBACK_*` warnings.
- `child` shares run id, metadata and output settings.

Conventions
-----------
- STDERR output is captured with `capsys`; file destinations live in
  `tmp_path`.

Downstream usage
----------------
Run via `pytest` as part of the CI suite.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import pytest

from infra.logging.infra_logger import (
    InfraLogger,
    generate_run_id,
    initialize_logger,
    provenance_run_meta,
)


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    for name in ("LOG_FORMAT", "LOG_DEST", "LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


def _lines(text: str) -> list[str]:
    return [line for line in text.splitlines() if line]


def test_level_filtering(capsys: pytest.CaptureFixture[str]) -> None:
    logger = InfraLogger("scan", "run-1", {}, log_level="WARNING")

    logger.debug("scan_row")
    logger.info("scan_row")
    logger.warning("bounded_degree", "stalled", {"window": 10})
    logger.emit("odd_level", level="verbose")

    entries = [json.loads(line) for line in _lines(capsys.readouterr().err)]
    assert [e["event"] for e in entries] == ["bounded_degree", "odd_level"]
    assert entries[1]["level"] == "WARNING"
    assert entries[0]["context"] == {"window": 10}


def test_json_entries_normalize_numbers(capsys: pytest.CaptureFixture[str]) -> None:
    """
    numpy scalars become plain numbers and NaN or infinities become strings,
    so each line parses with a strict JSON reader.
    """
    meta = provenance_run_meta("0.1.0", "abc", 7)
    logger = InfraLogger("cli.spectrum", "run-2", meta)

    logger.info(
        "spectrum_done",
        "solved",
        {
            "lambda_max": np.float64(2.5),
            "count": np.int64(3),
            "residual": float("nan"),
            "bounds": [float("inf"), 1.0],
        },
    )

    line = _lines(capsys.readouterr().err)[0]
    entry = json.loads(line, parse_constant=lambda name: pytest.fail(f"bare {name}"))
    assert entry["context"] == {
        "lambda_max": 2.5,
        "count": 3,
        "residual": "nan",
        "bounds": ["inf", 1.0],
    }
    assert entry["run_meta"] == {"tool_version": "0.1.0", "config_hash": "abc", "seed": 7}
    assert entry["timestamp"].endswith("Z")


def test_text_format(capsys: pytest.CaptureFixture[str]) -> None:
    logger = InfraLogger("cli.verify", "run-3", {}, log_format="text")

    logger.info("criterion_done", "criterion 1", {"verdict": True})

    line = _lines(capsys.readouterr().err)[0]
    assert "[INFO] cli.verify criterion_done - criterion 1 verdict=True" in line


def test_initialize_logger_reads_environment(
    monkeypatch: pytest.MonkeyPatch, tmp_path: Path
) -> None:
    destination = tmp_path / "run.log"
    monkeypatch.setenv("LOG_FORMAT", "TEXT")
    monkeypatch.setenv("LOG_DEST", str(destination))
    monkeypatch.setenv("LOG_LEVEL", "debug")

    logger = initialize_logger("cli.generate", run_meta={"seed": 1})
    logger.debug("graph_written", "done", {"vertices": 7})

    assert logger.level == "DEBUG"
    assert logger.format == "text"
    assert logger.run_id.startswith("cli.generate--")
    assert "graph_written - done vertices=7" in destination.read_text(encoding="utf-8")


def test_invalid_environment_falls_back(
    monkeypatch: pytest.MonkeyPatch, tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    monkeypatch.setenv("LOG_FORMAT", "yaml")
    monkeypatch.setenv("LOG_DEST", str(tmp_path / "missing" / "run.log"))

    logger = initialize_logger("cli.verify", level="nonsense")

    entries = [json.loads(line) for line in _lines(capsys.readouterr().err)]
    assert logger.level == "INFO"
    assert logger.format == "json"
    assert logger.dest == "stderr"
    assert [e["event"] for e in entries] == ["FALLBACK_LOG_FORMAT", "FALLBACK_LOG_DEST"]
    assert entries[0]["context"] == {"invalid_value": "yaml"}


def test_child_shares_run(capsys: pytest.CaptureFixture[str]) -> None:
    parent = InfraLogger("cli.complexity", generate_run_id("cli.complexity"), {"seed": 3})

    child = parent.child("complexity.star_witness")
    child.info("witness_window")

    entry = json.loads(_lines(capsys.readouterr().err)[0])
    assert entry["component"] == "complexity.star_witness"
    assert entry["run_id"] == parent.run_id
    assert entry["run_meta"] == {"seed": 3}
