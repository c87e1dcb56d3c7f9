"""
Purpose
-------
Tests for `graphs.generators.surgery` and `graphs.generators.family_registry`.

Key behaviors
-------------
- `build_surgery_plan` rejects anchors whose cross-weight sum or
  cross-degree exceeds `M` and names the anchor.
- `surgery` lays parts out consecutively; `G` differs from `G°` by the
  cross edges only.
- `load_surgery_plan` builds the same plan from JSON.
- `parse_params` and `family_from_name` type and validate CLI parameters.

Conventions
-----------
- Plans are small and hand-written; files go under `tmp_path`.

Downstream usage
----------------
Run via `pytest` as part of the CI suite.
"""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from graphs.generators.family_registry import FAMILY_PARAMETERS, family_from_name, parse_params
from graphs.generators.finite_families import complete_graph, star_graph
from graphs.generators.surgery import (
    SurgeryPart,
    build_surgery_plan,
    constant_degree_plan,
    jacobi_copies_with_stars_plan,
    load_surgery_plan,
    main_construction_plan,
    surgery,
)
from graphs.graph_core.finite_graph import validate
from graphs.graph_core.graph_errors import ConstructionError, GraphDomainError, GraphFormatError


def _parts(count: int) -> list[SurgeryPart]:
    return [SurgeryPart(complete_graph(3), anchor=0) for _ in range(count)]


def test_main_construction_layout() -> None:
    """
    `K_{2,1}, K_{2,2}, K_{2,3}` have 3, 5 and 7 vertices; hubs sit at the part
    offsets and exactly two cross edges are added.
    """
    result = surgery(main_construction_plan(2, 3))

    assert result.offsets == (0, 3, 8)
    assert result.anchors == (0, 3, 8)
    assert result.graph.vertex_count == 15
    assert result.graph.edge_count - result.disjoint.edge_count == 2
    assert result.graph.weight(0, 3) == 1.0
    assert result.graph.weight(3, 8) == 1.0
    assert result.disjoint.weight(0, 3) == 0.0
    assert validate(result.graph) == []
    assert result.graph.label(3) == "1:0"


@pytest.mark.parametrize(
    "cross_edges, row_bound, match",
    [
        ([(0, 1, 0.5), (0, 2, 0.5), (0, 3, 0.5)], 2.0, "anchor of part 0"),
        ([(0, 1, 1.5), (1, 2, 1.0)], 2.0, "anchor of part 1"),
        ([(0, 0, 1.0)], 2.0, "joins a part to itself"),
        ([(0, 9, 1.0)], 2.0, "unknown part"),
        ([(0, 1, 1.0), (1, 0, 0.5)], 2.0, "duplicate cross edge"),
        ([(0, 1, 0.0)], 2.0, "at or below floor"),
        ([], 0.0, "must be positive"),
    ],
)
def test_build_surgery_plan_rejects_invalid_plans(
    cross_edges: list[tuple[int, int, float]], row_bound: float, match: str
) -> None:
    """
    Every invalid plan raises `ConstructionError` with a specific message.

    Parameters
    ----------
    cross_edges : list
        Cross edges on part indices.
    row_bound : float
        `M`.
    match : str
        Substring of the expected message.
    """
    with pytest.raises(ConstructionError, match=match):
        build_surgery_plan(_parts(4), cross_edges, row_bound)


def test_surgery_rejects_anchor_outside_window() -> None:
    plan = build_surgery_plan(
        [SurgeryPart(star_graph(5), anchor=3, size=2), SurgeryPart(star_graph(3), anchor=0)],
        [(0, 1, 1.0)],
        2.0,
    )

    with pytest.raises(ConstructionError, match="anchor 3 of part 0"):
        surgery(plan)


def test_surgery_size_cap_splits_budget() -> None:
    plan = jacobi_copies_with_stars_plan(1.0, copies=2, length=50, star_orders=[4, 6])

    result = surgery(plan, size_cap=40)

    assert result.offsets == (0, 10, 20, 24)
    assert result.graph.vertex_count == 30
    with pytest.raises(ConstructionError, match="too small"):
        surgery(plan, size_cap=3)


def test_constant_degree_plan_keeps_degrees_nearly_constant() -> None:
    result = surgery(constant_degree_plan([3, 3, 3]))

    degrees = [result.graph.degree(x) for x in range(result.graph.vertex_count)]
    assert max(degrees) - min(degrees) <= 2


def test_load_surgery_plan_matches_builder(tmp_path: Path) -> None:
    path = tmp_path / "plan.json"
    payload = {
        "parts": [
            {"family": "kkn", "params": {"k": 2, "n": n}, "anchor": 0} for n in (1, 2, 3)
        ],
        "crossEdges": [[0, 1, 1.0], [1, 2, 1.0]],
        "rowBound": 2.0,
    }
    path.write_text(json.dumps(payload), encoding="utf-8")

    loaded = surgery(load_surgery_plan(path))

    assert loaded.graph.edges == surgery(main_construction_plan(2, 3)).graph.edges


def test_load_surgery_plan_reports_missing_parts(tmp_path: Path) -> None:
    path = tmp_path / "plan.json"
    path.write_text(json.dumps({"crossEdges": []}), encoding="utf-8")

    with pytest.raises(GraphFormatError, match="missing or mistypes"):
        load_surgery_plan(path)


def test_parse_params_types_values() -> None:
    assert parse_params("k=2, n=3") == {"k": 2, "n": 3}
    assert parse_params("alpha=0.5,connected=true") == {"alpha": 0.5, "connected": True}
    assert parse_params(None) == {}


@pytest.mark.parametrize(
    "text, match", [("k", "malformed"), ("k=1,k=2", "twice"), ("k=x", "non-numeric")]
)
def test_parse_params_rejects_malformed_text(text: str, match: str) -> None:
    with pytest.raises(GraphDomainError, match=match):
        parse_params(text)


def test_family_from_name_builds_registered_families() -> None:
    assert set(FAMILY_PARAMETERS) >= {"complete", "star", "kkn", "skn", "wordtree", "ftree"}
    assert family_from_name("kkn", {"k": 2, "n": 3}).size == 7
    assert family_from_name("jacobi", {"alpha": 1.0}, size=20).default_window == 20
    assert family_from_name("ftree", {"alpha": 1.0}, size=100).default_window == 100


@pytest.mark.parametrize(
    "name, params, match",
    [
        ("hypercube", {}, "unknown family"),
        ("kkn", {"k": 2}, "requires parameter 'n'"),
        ("star", {"n": 4, "k": 1}, "does not take parameters"),
    ],
)
def test_family_from_name_rejects_bad_requests(name: str, params: dict, match: str) -> None:
    with pytest.raises(GraphDomainError, match=match):
        family_from_name(name, params)
