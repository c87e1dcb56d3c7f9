"""
Purpose
-------
Unit and property tests for `complexity.star_witness`.

Key behaviors
-------------
- `exact_independent_set` finds maximum independent sets (checked against
  networkx maximum cliques of the complement); `greedy_independent_set`
  returns independent sets no larger than the maximum.
- `star_order_at` is exact up to the cap and flags larger neighborhoods.
- `sub_complexity_witness` returns `zeroWitness` on the star-clique chain,
  `boundedStars` on a complete graph and `noWitnessFound` on an edgeless
  graph.

Conventions
-----------
- Graphs for the independent-set oracles are given as neighbor bitmasks.

Downstream usage
----------------
Run via `pytest` as part of the CI suite.
"""

from __future__ import annotations

from typing import Any

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from complexity.star_witness import (
    WITNESS_COLUMNS,
    exact_independent_set,
    greedy_independent_set,
    growing_orders,
    star_order_at,
    sub_complexity_witness,
    witness_frame,
)
from graphs.generators.finite_families import complete_graph, star_graph
from graphs.generators.infinite_families import (
    chained_hub_cliques,
    chained_star_cliques,
    disjoint_stars,
    hub_clique_hub_index,
    star_clique_hub_index,
)
from graphs.graph_core.finite_graph import build_finite_graph
from graphs.graph_core.graph_errors import GraphDomainError
from graphs.graph_core.graph_family import family_of_graph


@st.composite
def bitmask_graphs(draw: st.DrawFn) -> tuple[int, list[tuple[int, int]]]:
    n = draw(st.integers(min_value=0, max_value=12))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = [pair for pair in pairs if draw(st.booleans())]
    return n, edges


def _masks(n: int, edges: list[tuple[int, int]]) -> list[int]:
    masks = [0] * n
    for i, j in edges:
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    return masks


def _is_independent(chosen: int, masks: list[int]) -> bool:
    return all(not (chosen >> i & 1) or masks[i] & chosen == 0 for i in range(len(masks)))


def test_exact_independent_set_small_cases() -> None:
    cycle5 = _masks(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    path4 = _masks(4, [(0, 1), (1, 2), (2, 3)])

    assert exact_independent_set(cycle5).bit_count() == 2
    assert exact_independent_set(path4).bit_count() == 2
    assert exact_independent_set([]) == 0
    assert exact_independent_set(_masks(3, [])) == 0b111


@settings(max_examples=80, deadline=None)
@given(bitmask_graphs())
def test_independent_sets_against_networkx(case: tuple[int, list[tuple[int, int]]]) -> None:
    """
    The exact set has the independence number of the graph; the greedy set
    is independent and no larger.
    """
    n, edges = case
    masks = _masks(n, edges)
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    alpha = nx.max_weight_clique(nx.complement(h), weight=None)[1] if n else 0

    exact = exact_independent_set(masks)
    greedy = greedy_independent_set(masks)

    assert _is_independent(exact, masks)
    assert exact.bit_count() == alpha
    assert _is_independent(greedy, masks)
    assert greedy.bit_count() <= alpha


def test_star_order_at_star_hub_and_clique() -> None:
    assert star_order_at(star_graph(8), 0).order == 8
    assert star_order_at(star_graph(8), 3).order == 2
    assert star_order_at(complete_graph(7), 2).order == 2


def test_star_order_at_star_clique_hub() -> None:
    """
    Hub `x_n` of the `α = 1` chain sees `n` star leaves, one clique vertex and
    both chain neighbors pairwise non-adjacent: order `n + 4`.
    """
    family = chained_star_cliques(1)

    small = star_order_at(family, star_clique_hub_index(1, 2))
    large = star_order_at(family, star_clique_hub_index(1, 30))

    assert small.exact
    assert small.order == 6
    assert not large.exact
    assert large.order == 34


def test_star_order_at_isolated_vertex_raises() -> None:
    with pytest.raises(GraphDomainError, match="isolated"):
        star_order_at(build_finite_graph(2, []), 1)


def test_sub_complexity_witness_on_star_clique_chain(capture_logger: Any) -> None:
    alpha = 1
    windows = [star_clique_hub_index(alpha, n + 1) + 1 for n in (10, 25, 50)]

    verdict = sub_complexity_witness(chained_star_cliques(alpha), windows, logger=capture_logger)

    assert verdict.kind == "zeroWitness"
    orders = [w.witness.order for w in verdict.witnesses]
    assert orders == [14, 29, 54]
    assert verdict.max_order == 54
    assert [w.witness.center for w in verdict.witnesses] == [
        star_clique_hub_index(alpha, n) for n in (10, 25, 50)
    ]
    assert len(capture_logger.events("witness_window")) == 3

    frame = witness_frame(verdict)
    assert list(frame.columns) == WITNESS_COLUMNS
    assert frame["star_order"].tolist() == orders


def test_sub_complexity_witness_bounded_and_empty() -> None:
    bounded = sub_complexity_witness(complete_graph(6), [6, 10, 20])
    empty = sub_complexity_witness(family_of_graph(build_finite_graph(3, [])), [3])

    assert bounded.kind == "boundedStars"
    assert bounded.max_order == 2
    assert empty.kind == "noWitnessFound"
    assert empty.witnesses == ()
    assert witness_frame(empty).empty


@pytest.mark.parametrize(
    "orders, expected",
    [
        ([], []),
        ([5], [5]),
        ([4, 4, 4, 7, 10, 15], [4, 7, 10, 15]),
        ([3, 9, 4, 5, 6], [3, 4, 5, 6]),
        ([6, 5, 4], [6]),
        ([2, 2, 2], [2]),
    ],
)
def test_growing_orders(orders: list[int], expected: list[int]) -> None:
    assert growing_orders(orders) == expected


def test_sub_complexity_witness_skips_plateaus() -> None:
    """
    Close windows of the disjoint stars repeat the same best star; the orders
    still grow along the later windows, which is enough for a zero verdict.
    """
    verdict = sub_complexity_witness(disjoint_stars(2), [10, 11, 12, 30, 60, 120])
    orders = [w.witness.order for w in verdict.witnesses]

    assert orders[0] == orders[1] == orders[2]
    assert verdict.kind == "zeroWitness"
    assert verdict.max_order == orders[-1]
    assert len(growing_orders(orders)) >= 3


def test_sub_complexity_witness_bounded_chain_of_hub_cliques() -> None:
    """
    Hub `x_n` of the `K_{2,n}` chain sees two cliques and two chain hubs, so
    its best induced star has order 5 in every window.
    """
    k = 2
    windows = [hub_clique_hub_index(k, n + 1) + 1 for n in (4, 8, 12)]

    verdict = sub_complexity_witness(chained_hub_cliques(k), windows)

    assert [w.witness.order for w in verdict.witnesses] == [k + 3] * 3
    assert [w.witness.center for w in verdict.witnesses] == [
        hub_clique_hub_index(k, n) for n in (4, 8, 12)
    ]
    assert verdict.kind == "boundedStars"
    assert verdict.max_order == k + 3
