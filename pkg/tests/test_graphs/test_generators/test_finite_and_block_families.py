"""
Purpose
-------
Tests for the finite families and the block-chained infinite families.

Key behaviors
-------------
- `complete_graph`, `star_graph` and `hub_of_cliques` have the stated sizes,
  degrees and triangle counts; `hub_of_cliques(1, n-1)` is `K_n`.
- `chained_star_cliques(alpha)` places hub `x_n` at `star_clique_hub_index`
  with degree `(alpha+1)n + 2` and `n(n-1)` oriented triangles.
- `chained_hub_cliques(k)` equals the surgery of the main construction plan
  on every window that ends at a block boundary.
- Block families are symmetric on their windows.

Conventions
-----------
- Infinite families are queried locally; only windows are materialized.
- Isomorphism checks use networkx.

Downstream usage
----------------
Run via `pytest` as part of the CI suite.
"""

from __future__ import annotations

from typing import Callable

import networkx as nx
import pytest

from graphs.generators.finite_families import complete_graph, hub_of_cliques, star_graph
from graphs.generators.infinite_families import (
    chained_hub_cliques,
    chained_star_cliques,
    disjoint_stars,
    hub_clique_hub_index,
    star_clique_hub_index,
)
from graphs.generators.surgery import main_construction_plan, surgery
from graphs.graph_core.finite_graph import FiniteGraph, triangle_count, validate
from graphs.graph_core.graph_errors import GraphDomainError
from graphs.graph_core.graph_family import GraphFamily, check_family_symmetry, truncate


def _nx(g: FiniteGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from((i, j) for i, j, _ in g.edges)
    return h


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_complete_graph_degrees(n: int) -> None:
    g = truncate(complete_graph(n)).graph

    assert g.edge_count == n * (n - 1) // 2
    assert all(g.degree(x) == n - 1 for x in range(n))
    assert validate(g) == []


def test_star_graph_hub_and_leaves() -> None:
    family = star_graph(6)

    assert family.degree(0) == 5
    assert [family.degree(x) for x in range(1, 6)] == [1] * 5
    assert triangle_count(family, 0) == 0


@pytest.mark.parametrize("k, n", [(1, 1), (2, 3), (4, 2)])
def test_hub_of_cliques_degrees_and_triangles(k: int, n: int) -> None:
    """
    Hub 0 has degree `kn` and `k·n(n-1)` oriented triangles; every clique
    vertex has degree `n` and `n(n-1)` oriented triangles.
    """
    family = hub_of_cliques(k, n)
    g = truncate(family).graph

    assert g.vertex_count == k * n + 1
    assert g.degree(0) == k * n
    assert triangle_count(g, 0) == k * n * (n - 1)
    for x in range(1, g.vertex_count):
        assert g.degree(x) == family.degree(x) == n
        assert triangle_count(g, x) == n * (n - 1)


@pytest.mark.parametrize("n", [2, 3, 6])
def test_hub_of_one_clique_is_complete(n: int) -> None:
    left = truncate(hub_of_cliques(1, n - 1)).graph
    right = truncate(complete_graph(n)).graph

    assert nx.is_isomorphic(_nx(left), _nx(right))


@pytest.mark.parametrize("builder, bad", [(complete_graph, 0), (star_graph, 1)])
def test_finite_families_reject_small_orders(
    builder: Callable[[int], GraphFamily], bad: int
) -> None:
    with pytest.raises(GraphDomainError):
        builder(bad)


@pytest.mark.parametrize("alpha", [1, 2, 3])
def test_chained_star_cliques_hub_structure(alpha: int) -> None:
    """
    For `n >= 2`, hub `x_n` sees `alpha·n` star leaves, the `n` clique
    vertices and both chain neighbors.

    Raises
    ------
    AssertionError
        If the hub index, degree or triangle count is off.
    """
    family = chained_star_cliques(alpha)

    assert star_clique_hub_index(alpha, 1) == 0
    assert family.degree(0) == alpha + 2
    for n in (2, 5, 12):
        hub = star_clique_hub_index(alpha, n)
        neighbors = {y for y, _ in family.neighbors(hub)}
        assert family.degree(hub) == (alpha + 1) * n + 2
        assert star_clique_hub_index(alpha, n - 1) in neighbors
        assert star_clique_hub_index(alpha, n + 1) in neighbors
        assert triangle_count(family, hub) == n * (n - 1)


def test_chained_star_cliques_rejects_fractional_alpha() -> None:
    with pytest.raises(GraphDomainError, match="alpha must be an integer"):
        chained_star_cliques(0.5)  # type: ignore[arg-type]


@pytest.mark.parametrize(
    "family",
    [chained_star_cliques(2), chained_hub_cliques(3), disjoint_stars(3)],
    ids=["skn", "chained-kkn", "stars"],
)
def test_block_families_are_symmetric(family) -> None:  # type: ignore[no-untyped-def]
    assert check_family_symmetry(family, 150) == []
    assert validate(truncate(family, 150).graph) == []


@pytest.mark.parametrize("k, count", [(1, 4), (2, 3), (3, 5)])
def test_chained_hub_cliques_match_main_construction(k: int, count: int) -> None:
    """
    The window ending after block `count` has the same edges as the surgery
    of `K_{k,1}, ..., K_{k,count}` chained at their hubs.
    """
    glued = surgery(main_construction_plan(k, count))
    order = hub_clique_hub_index(k, count + 1)

    window = truncate(chained_hub_cliques(k), order)

    assert glued.graph.vertex_count == order
    assert window.graph.edges == glued.graph.edges
    assert list(glued.anchors) == [hub_clique_hub_index(k, n) for n in range(1, count + 1)]
