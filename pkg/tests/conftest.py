"""
Purpose
-------
Shared pytest setup: put `src/` on the import path and provide small graphs
and a capturing logger used across the test packages.

Key behaviors
-------------
- `capture_logger` records every `debug/info/warning/error` call as
  `(level, event, msg, context)` without writing anything.
- `triangle_graph`, `path_graph` and `weighted_square` are tiny hand-built
  graphs whose spectra and triangle counts are known in closed form.

Conventions
-----------
- Fixtures return fresh objects; tests may not rely on shared state.

Downstream usage
----------------
Picked up automatically by pytest for every test module under `tests/`.
"""

from __future__ import annotations

import pathlib
import sys
from dataclasses import dataclass, field
from typing import Any

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[1]
SRC = ROOT / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from graphs.graph_core.finite_graph import FiniteGraph, build_finite_graph  # noqa: E402


@dataclass
class CaptureLogger:
    """
    Purpose
    -------
    Stand-in for `InfraLogger` that keeps its calls in memory.

    Attributes
    ----------
    calls : list[tuple[str, str, str | None, dict[str, Any]]]
        `(level, event, msg, context)` in call order.
    """

    calls: list[tuple[str, str, str | None, dict[str, Any]]] = field(default_factory=list)

    def _record(self, level: str, event: str, msg: str | None, context: dict | None) -> None:
        self.calls.append((level, event, msg, dict(context or {})))

    def debug(self, event: str, msg: str | None = None, context: dict | None = None) -> None:
        self._record("DEBUG", event, msg, context)

    def info(self, event: str, msg: str | None = None, context: dict | None = None) -> None:
        self._record("INFO", event, msg, context)

    def warning(self, event: str, msg: str | None = None, context: dict | None = None) -> None:
        self._record("WARNING", event, msg, context)

    def error(self, event: str, msg: str | None = None, context: dict | None = None) -> None:
        self._record("ERROR", event, msg, context)

    def events(self, name: str) -> list[dict[str, Any]]:
        return [context for _, event, _, context in self.calls if event == name]


@pytest.fixture
def capture_logger() -> CaptureLogger:
    return CaptureLogger()


@pytest.fixture
def triangle_graph() -> FiniteGraph:
    """K_3 with unit weights: eigenvalues {2, -1, -1}."""
    return build_finite_graph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)])


@pytest.fixture
def path_graph() -> FiniteGraph:
    """P_4 with unit weights: eigenvalues ±2cos(πk/5), k = 1, 2."""
    return build_finite_graph(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)])


@pytest.fixture
def weighted_square() -> FiniteGraph:
    """4-cycle with weights 1, 2, 3, 4 and one diagonal of weight 0.5."""
    return build_finite_graph(
        4, [(0, 1, 1.0), (1, 2, 2.0), (2, 3, 3.0), (0, 3, 4.0), (0, 2, 0.5)]
    )
