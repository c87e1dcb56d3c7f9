"""
Purpose
-------
Unit tests for `cli.run_config`.

Key behaviors
-------------
- `build_run_config` validates keys, methods, tolerances and seeds, drops
  None values and normalizes windows to a tuple.
- `load_run_config` merges `params`, `tolerances` and `options` overrides key
  by key and reports JSON errors with their position.
- `config_hash` ignores output paths and changes with any other input.

Conventions
-----------
- Config files are written to `tmp_path`.

Downstream usage
----------------
Run via `pytest` as part of the CI suite.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import pytest

from cli.cli_config import DEFAULT_SEED
from cli.run_config import build_run_config, config_hash, load_run_config
from graphs.graph_core.graph_errors import GraphDomainError, GraphFormatError


def test_build_run_config_defaults_and_normalization() -> None:
    config = build_run_config(
        {"subcommand": "spectrum", "windows": [5, 10], "size": None, "options": {"check": None}}
    )

    assert config.seed == DEFAULT_SEED
    assert config.windows == (5, 10)
    assert config.size is None
    assert config.method == "dense"
    assert config.options == {}
    assert config.tolerance("dense", 1e-3) == 1e-3


@pytest.mark.parametrize(
    "mapping, match",
    [
        ({"subcommand": "spectrum", "colour": "red"}, "unknown configuration keys"),
        ({"family": "kkn"}, "needs a subcommand"),
        ({"subcommand": "spectrum", "method": "qr"}, "method must be"),
        ({"subcommand": "spectrum", "tolerances": {"lanczos": 1e-6}}, "unknown tolerance"),
        ({"subcommand": "spectrum", "tolerances": {"dense": 0.0}}, "must be positive"),
        ({"subcommand": "spectrum", "tolerances": {"dense": True}}, "must be positive"),
        ({"subcommand": "verify", "seed": -1}, "non-negative integer"),
    ],
)
def test_build_run_config_rejects(mapping: dict[str, Any], match: str) -> None:
    with pytest.raises(GraphDomainError, match=match):
        build_run_config(mapping)


def test_config_hash_ignores_outputs_only() -> None:
    base = build_run_config({"subcommand": "spectrum", "family": "kkn", "params": {"k": 2, "n": 3}})
    moved = build_run_config(
        {
            "subcommand": "spectrum",
            "family": "kkn",
            "params": {"k": 2, "n": 3},
            "out": "a.json",
            "csv": "b.csv",
            "json": "c.json",
        }
    )
    reseeded = build_run_config(
        {"subcommand": "spectrum", "family": "kkn", "params": {"k": 2, "n": 3}, "seed": 1}
    )
    with_option = build_run_config(
        {
            "subcommand": "spectrum",
            "family": "kkn",
            "params": {"k": 2, "n": 3},
            "options": {"check": True},
        }
    )

    assert config_hash(base) == config_hash(moved)
    assert len(config_hash(base)) == 64
    assert config_hash(base) != config_hash(reseeded)
    assert config_hash(base) != config_hash(with_option)


def test_load_run_config_merges_overrides(tmp_path: Path) -> None:
    path = tmp_path / "run.json"
    path.write_text(
        json.dumps(
            {
                "subcommand": "deficiency",
                "family": "ftree",
                "params": {"alpha": 1.0},
                "tolerances": {"cauchy": 1e-10},
                "options": {"window": 100},
                "seed": 7,
            }
        ),
        encoding="utf-8",
    )

    config = load_run_config(
        path,
        {
            "subcommand": "deficiency",
            "seed": None,
            "tolerances": {"residual": 1e-9},
            "options": {"f0": [0.0, 1.0]},
        },
    )

    assert config.seed == 7
    assert config.tolerances == {"cauchy": 1e-10, "residual": 1e-9}
    assert config.options == {"window": 100, "f0": [0.0, 1.0]}
    assert config.params == {"alpha": 1.0}


def test_load_run_config_reports_json_position(tmp_path: Path) -> None:
    path = tmp_path / "broken.json"
    path.write_text('{\n  "subcommand": "verify",\n  "seed": \n}', encoding="utf-8")

    with pytest.raises(GraphFormatError, match="line 4, column 1"):
        load_run_config(path)


def test_load_run_config_needs_an_object(tmp_path: Path) -> None:
    path = tmp_path / "list.json"
    path.write_text("[1, 2]", encoding="utf-8")

    with pytest.raises(GraphFormatError, match="top level must be an object"):
        load_run_config(path)
