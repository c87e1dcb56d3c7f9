"""
Purpose
-------
Unit tests for `spectral.unboundedness_scan`.

Key behaviors
-------------
- `unboundedness_scan` returns one row per window with `λ_min <= λ_max`,
  logs one `scan_row` event per window, and validates the size list.
- On the word tree and the chained hubs of cliques, `λ_max` grows strictly
  and `λ_min` does not increase as the window grows.
- `enclosure_violations` flags an inward move beyond the slack.

Conventions
-----------
- Windows stay small enough for the dense solver.

Downstream usage
----------------
Run via `pytest` as part of the CI suite.
"""

from __future__ import annotations

from typing import Any

import pandas as pd
import pytest

from graphs.generators.infinite_families import chained_hub_cliques, hub_clique_hub_index
from graphs.generators.trees import word_tree, word_tree_level_offset
from graphs.graph_core.graph_errors import GraphDomainError
from spectral.unboundedness_scan import SCAN_COLUMNS, enclosure_violations, unboundedness_scan


def test_scan_of_word_tree_grows(capture_logger: Any) -> None:
    """
    Word tree `M = 3`, windows at the ends of levels 2..4: `λ_max` strictly
    increases and `λ_min` strictly decreases.
    """
    sizes = [word_tree_level_offset(3, depth + 1) for depth in (2, 3, 4)]

    frame = unboundedness_scan(word_tree(3, 4), sizes, logger=capture_logger)

    assert list(frame.columns) == SCAN_COLUMNS
    assert frame["size"].tolist() == sizes
    assert frame["lambda_max"].is_monotonic_increasing
    assert frame["lambda_max"].diff().dropna().gt(0).all()
    assert frame["lambda_min"].diff().dropna().lt(0).all()
    assert enclosure_violations(frame) == []
    assert len(capture_logger.events("scan_row")) == 3


def test_scan_of_chained_hub_cliques() -> None:
    sizes = [hub_clique_hub_index(2, count + 1) for count in (4, 8, 12)]

    frame = unboundedness_scan(chained_hub_cliques(2), sizes)

    assert (frame["lambda_min"] <= frame["lambda_max"]).all()
    assert (frame["lambda_min"] >= -4.0 * 2 - 2.0 - 1e-9).all()
    assert frame["lambda_max"].diff().dropna().gt(0).all()
    assert (frame["sup_sigma_sq"] >= frame["sup_row_sq"] - 1e-9).all()
    assert set(frame["method"]) == {"dense"}


@pytest.mark.parametrize(
    "sizes, match",
    [([], "at least one size"), ([10, 10], "strictly increasing"), ([1, 5], "at least 2")],
)
def test_scan_rejects_bad_sizes(sizes: list[int], match: str) -> None:
    with pytest.raises(GraphDomainError, match=match):
        unboundedness_scan(chained_hub_cliques(1), sizes)


def test_enclosure_violations_flags_inward_moves() -> None:
    frame = pd.DataFrame(
        {
            "size": [10, 20, 30],
            "lambda_min": [-2.0, -2.5, -2.4],
            "lambda_max": [3.0, 2.9, 3.5],
        }
    )

    messages = enclosure_violations(frame)

    assert len(messages) == 2
    assert messages[0].startswith("lambda_max moved inward from 3.0 at size 10")
    assert messages[1].startswith("lambda_min moved inward from -2.5 at size 20")
