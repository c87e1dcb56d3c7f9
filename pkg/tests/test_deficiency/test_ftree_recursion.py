"""
Purpose
-------
Unit tests for `deficiency.ftree_recursion`.

Key behaviors
-------------
- Children of a vertex share one value; the first levels match hand
  computation (`i/7`, then `−8/133` for `α = 1`).
- In exact arithmetic the residual is exactly 0 on every determined vertex
  and undetermined (NaN) elsewhere.
- Above `exact_cap` the float path agrees with the exact path.
- `f0 == 0` and windows that do not reach past `F(1)` are rejected.

Conventions
-----------
- `α = 1` gives `F(n) = (n+1)^3`, so level boundaries are cubes.

Downstream usage
----------------
Run via `pytest` as part of the CI suite.
"""

from __future__ import annotations

import math

import numpy as np
import pytest

from deficiency.deficiency_solution import SOLUTION_COLUMNS, solution_frame
from deficiency.ftree_recursion import f_tree_deficiency_vector
from graphs.graph_core.graph_errors import GraphDomainError


def test_first_levels_by_hand() -> None:
    sol = f_tree_deficiency_vector(1.0, 100)

    assert sol.arithmetic == "exact"
    assert sol.values[0] == 1.0
    assert sol.values[1] == pytest.approx(1j / 7)
    assert sol.values[7] == sol.values[1]
    assert sol.values[8] == pytest.approx(-8 / 133)
    assert sol.values[26] == sol.values[8]
    assert sol.level_counts == (7, 19, 37, 61)
    assert sol.family.name == "ftree"


def test_exact_residuals_vanish_on_determined_vertices() -> None:
    sol = f_tree_deficiency_vector(1.0, 100)

    assert sol.determined_vertices == [0, 1, 2]
    assert sol.max_residual == 0.0
    assert math.isnan(sol.residuals[3])
    assert sol.exact_values is not None
    assert len(sol.exact_values) == 100


def test_float_path_matches_exact_path() -> None:
    exact = f_tree_deficiency_vector(0.5, 400)
    floating = f_tree_deficiency_vector(0.5, 400, exact_cap=100)

    assert floating.arithmetic == "float"
    assert floating.exact_values is None
    np.testing.assert_allclose(floating.values, exact.values, rtol=1e-12, atol=1e-15)
    assert floating.determined_vertices == exact.determined_vertices
    assert floating.max_residual < 1e-14


def test_partial_sums_and_tail() -> None:
    """
    Partial sums are nondecreasing and the comparison series has one entry
    per solved level.
    """
    sol = f_tree_deficiency_vector(1.0, 5000, f0=2.0 - 1.0j)

    assert sol.partial_l2[0] == pytest.approx(5.0)
    assert np.all(np.diff(sol.partial_l2) >= 0.0)
    comparison = sol.tail.comparison_partial_sums
    assert len(comparison) == len(sol.level_counts)
    assert comparison[0] == pytest.approx(1 / 7)
    assert all(b > a for a, b in zip(comparison, comparison[1:]))


def test_solution_frame_columns() -> None:
    frame = solution_frame(f_tree_deficiency_vector(1.0, 30))

    assert list(frame.columns) == SOLUTION_COLUMNS
    assert frame["n"].tolist() == list(range(30))
    assert frame["f_im"].iloc[1] == pytest.approx(1 / 7)


@pytest.mark.parametrize(
    "kwargs, match",
    [
        ({"alpha": 1.0, "window": 100, "f0": 0j}, "f0 must be non-zero"),
        ({"alpha": 1.0, "window": 8}, "does not determine any level"),
        ({"alpha": -1.0, "window": 100}, "alpha must be a real > 0"),
        ({"alpha": 1.0, "window": 1}, "window must be an integer >= 2"),
    ],
)
def test_invalid_arguments(kwargs: dict[str, object], match: str) -> None:
    with pytest.raises(GraphDomainError, match=match):
        f_tree_deficiency_vector(**kwargs)  # type: ignore[arg-type]
