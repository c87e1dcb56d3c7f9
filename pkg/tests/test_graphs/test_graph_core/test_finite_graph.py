"""
Purpose
-------
Unit and property tests for `graphs.graph_core.finite_graph`.

Key behaviors
-------------
- `build_finite_graph` orients edges as `i < j` and sorts them.
- `validate` reports every structural violation by name.
- `triangle_count` counts ordered neighbor pairs and agrees with networkx
  (which counts unordered triangles) on random graphs.
- `induced_subgraph` keeps inherited weights and returns its reindex map.

Conventions
-----------
- Malformed graphs are built with the `FiniteGraph` constructor directly,
  which skips canonicalization on purpose.
- Property tests draw small graphs (at most 9 vertices) with hypothesis.

Downstream usage
----------------
Run via `pytest` as part of the CI suite.
"""

from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphs.graph_core.finite_graph import (
    FiniteGraph,
    build_finite_graph,
    degree_sequence,
    induced_subgraph,
    neighbor_set,
    triangle_count,
    unordered_triangle_count,
    validate,
)
from graphs.graph_core.graph_errors import GraphDomainError


@st.composite
def small_graphs(draw: st.DrawFn) -> FiniteGraph:
    n = draw(st.integers(min_value=1, max_value=9))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    weights = draw(
        st.lists(
            st.floats(min_value=0.1, max_value=10.0), min_size=len(chosen), max_size=len(chosen)
        )
    )
    return build_finite_graph(n, [(i, j, w) for (i, j), w in zip(chosen, weights)])


def _to_networkx(g: FiniteGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_weighted_edges_from(g.edges)
    return h


def test_build_finite_graph_orients_and_sorts_edges() -> None:
    """
    Edges given as `(j, i, w)` are stored as `(i, j, w)` in sorted order.

    Raises
    ------
    AssertionError
        If the stored edge tuple is not canonical.
    """
    g = build_finite_graph(3, [(2, 1, 1.5), (1, 0, 2.0)])

    assert g.edges == ((0, 1, 2.0), (1, 2, 1.5))
    assert g.edge_count == 2
    assert g.neighbors(1) == [(0, 2.0), (2, 1.5)]
    assert g.weight(2, 1) == 1.5
    assert g.weight(0, 2) == 0.0
    assert validate(g) == []


def test_build_finite_graph_rejects_label_count_mismatch() -> None:
    with pytest.raises(GraphDomainError, match="expected 3 labels"):
        build_finite_graph(3, [], labels=["a", "b"])


def test_vertex_queries_out_of_range_raise(triangle_graph: FiniteGraph) -> None:
    with pytest.raises(GraphDomainError, match="out of range"):
        triangle_graph.neighbors(3)
    with pytest.raises(GraphDomainError):
        triangle_graph.weight(0, -1)


@pytest.mark.parametrize(
    "edges, expected",
    [
        (((1, 0, 1.0),), "not stored with i < j"),
        (((0, 1, 1.0), (0, 1, 2.0)), "duplicate edge (0, 1)"),
        (((0, 0, 1.0),), "loop edge at vertex 0"),
        (((0, 1, 0.0),), "at or below"),
        (((0, 1, float("nan")),), "at or below"),
        (((0, 5, 1.0),), "outside 0..2"),
    ],
)
def test_validate_names_each_violation(
    edges: tuple[tuple[int, int, float], ...], expected: str
) -> None:
    """
    Each malformed edge tuple produces a message naming the violation.

    Parameters
    ----------
    edges : tuple
        Raw edge tuple stored without canonicalization.
    expected : str
        Substring the violation message must contain.
    """
    g = FiniteGraph(vertex_count=3, edges=edges)

    messages = validate(g)

    assert any(expected in message for message in messages), messages


def test_triangle_count_is_oriented(triangle_graph: FiniteGraph) -> None:
    """
    In K_3 every vertex sees the ordered pairs (y, z) and (z, y) of its two
    neighbors, so the oriented count is 2 and the unordered count is 1.
    """
    assert [triangle_count(triangle_graph, x) for x in range(3)] == [2, 2, 2]
    assert unordered_triangle_count(triangle_graph, 0) == 1


def test_triangle_count_ignores_weights(weighted_square: FiniteGraph) -> None:
    # the diagonal (0, 2) closes triangles 0-1-2 and 0-2-3
    assert triangle_count(weighted_square, 0) == 4
    assert triangle_count(weighted_square, 1) == 2
    assert triangle_count(weighted_square, 2) == 4
    assert triangle_count(weighted_square, 3) == 2


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_triangle_count_matches_networkx(g: FiniteGraph) -> None:
    """
    Oriented triangle counts equal twice networkx's unordered counts, and the
    degree sequence matches.
    """
    oracle = nx.triangles(_to_networkx(g))

    for x in range(g.vertex_count):
        assert triangle_count(g, x) == 2 * oracle[x]
        assert triangle_count(g, x) <= g.degree(x) * (g.degree(x) - 1)
    assert degree_sequence(g) == sorted(d for _, d in _to_networkx(g).degree())


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_generated_graphs_validate_and_are_symmetric(g: FiniteGraph) -> None:
    assert validate(g) == []
    for x in range(g.vertex_count):
        for y, w in neighbor_set(g, x):
            assert g.weight(y, x) == w


def test_induced_subgraph_keeps_weights_and_reindexes(weighted_square: FiniteGraph) -> None:
    """
    Keeping {0, 2, 3} keeps edges (0, 2), (2, 3), (0, 3) with their weights,
    under the map 0→0, 2→1, 3→2.
    """
    sub, reindex = induced_subgraph(weighted_square, [3, 0, 2, 2])

    assert reindex == {0: 0, 2: 1, 3: 2}
    assert sub.vertex_count == 3
    assert sub.weight(reindex[0], reindex[2]) == 0.5
    assert sub.weight(reindex[2], reindex[3]) == 3.0
    assert sub.weight(reindex[0], reindex[3]) == 4.0
    assert validate(sub) == []


def test_induced_subgraph_of_nothing_is_empty(triangle_graph: FiniteGraph) -> None:
    sub, reindex = induced_subgraph(triangle_graph, [])

    assert sub.vertex_count == 0
    assert sub.edges == ()
    assert reindex == {}


def test_induced_subgraph_rejects_unknown_vertex(triangle_graph: FiniteGraph) -> None:
    with pytest.raises(GraphDomainError, match="cannot keep vertex 7"):
        induced_subgraph(triangle_graph, [0, 7])
