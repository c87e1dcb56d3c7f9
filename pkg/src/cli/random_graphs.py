"""
Purpose
-------
Seeded random inputs for the property criteria: weighted Erdős–Rényi graphs
and random surgery plans.

Key behaviors
-------------
- `random_weighted_graph(rng, nx_seed)`: `n` uniform in the configured
  range, `networkx.gnp_random_graph(n, p)` with `p` uniform in the
  configured range, weights uniform in `RANDOM_WEIGHT_RANGE`. A graph that
  came out edgeless gets the edge `(0, 1)`.
- `random_weighted_graphs(seed, count)`: graph `i` draws from the sub-seed
  of label `random-graph:i`, so any single graph can be regenerated alone.
- `random_surgery_plans(seed, count)`: 2 to `SURGERY_PLAN_MAX_PARTS` random
  parts chained in a random order by cross edges of weight at most `M/2`, so
  every anchor has cross-degree at most 2 and cross-weight at most `M`.

Conventions
-----------
- Every draw goes through `numpy.random.Generator`; networkx receives an
  integer seed derived from the same label.

Downstream usage
----------------
Criteria 5, 6, 7, 8 and 14 of `cli.verify_suite`.
"""

import networkx as nx
import numpy as np

from cli.cli_config import (
    RANDOM_EDGE_PROBABILITY_RANGE,
    RANDOM_GRAPH_COUNT,
    RANDOM_GRAPH_MAX_VERTICES,
    RANDOM_GRAPH_MIN_VERTICES,
    RANDOM_WEIGHT_RANGE,
    SURGERY_PART_MAX_VERTICES,
    SURGERY_PLAN_COUNT,
    SURGERY_PLAN_MAX_PARTS,
    SURGERY_ROW_BOUND_RANGE,
)
from cli.provenance import derive_seed, rng_for
from graphs.generators.surgery import SurgeryPart, SurgeryPlan, build_surgery_plan
from graphs.graph_core.finite_graph import FiniteGraph, build_finite_graph
from graphs.graph_core.graph_family import family_of_graph


def random_weighted_graph(
    rng: np.random.Generator,
    nx_seed: int,
    max_vertices: int = RANDOM_GRAPH_MAX_VERTICES,
) -> FiniteGraph:
    """
    Draw one weighted Erdős–Rényi graph.

    Parameters
    ----------
    rng : numpy.random.Generator
        Source of `n`, `p` and the weights.
    nx_seed : int
        Seed handed to `networkx.gnp_random_graph`.
    max_vertices : int
        Upper end of the vertex-count range.

    Returns
    -------
    FiniteGraph
        Graph with at least one edge.
    """

    n = int(rng.integers(RANDOM_GRAPH_MIN_VERTICES, max_vertices + 1))
    p = float(rng.uniform(*RANDOM_EDGE_PROBABILITY_RANGE))
    pattern = nx.gnp_random_graph(n, p, seed=nx_seed)
    pairs = sorted(pattern.edges()) or [(0, 1)]
    weights = rng.uniform(*RANDOM_WEIGHT_RANGE, size=len(pairs))
    return build_finite_graph(n, [(i, j, float(w)) for (i, j), w in zip(pairs, weights)])


def random_weighted_graphs(seed: int, count: int = RANDOM_GRAPH_COUNT) -> list[FiniteGraph]:
    """Return `count` reproducible random graphs for run seed `seed`."""
    graphs = []
    for index in range(count):
        label = f"random-graph:{index}"
        graphs.append(random_weighted_graph(rng_for(seed, label), derive_seed(seed, label)))
    return graphs


def random_surgery_plan(rng: np.random.Generator, nx_seed: int) -> SurgeryPlan:
    """
    Draw one surgery plan over small random weighted parts.

    Returns
    -------
    SurgeryPlan
        Validated plan whose row bound is uniform in `SURGERY_ROW_BOUND_RANGE`.
    """

    part_count = int(rng.integers(2, SURGERY_PLAN_MAX_PARTS + 1))
    parts = []
    for index in range(part_count):
        g = random_weighted_graph(rng, nx_seed + index, SURGERY_PART_MAX_VERTICES)
        anchor = int(rng.integers(0, g.vertex_count))
        parts.append(SurgeryPart(family=family_of_graph(g, f"random-part-{index}"), anchor=anchor))
    row_bound = float(rng.uniform(*SURGERY_ROW_BOUND_RANGE))
    order = rng.permutation(part_count)
    cross_edges = [
        (int(a), int(b), float(rng.uniform(RANDOM_WEIGHT_RANGE[0], row_bound / 2.0)))
        for a, b in zip(order, order[1:])
    ]
    return build_surgery_plan(parts, cross_edges, row_bound)


def random_surgery_plans(seed: int, count: int = SURGERY_PLAN_COUNT) -> list[SurgeryPlan]:
    """Return `count` reproducible random surgery plans for run seed `seed`."""
    plans = []
    for index in range(count):
        label = f"surgery-plan:{index}"
        plans.append(random_surgery_plan(rng_for(seed, label), derive_seed(seed, label)))
    return plans
