"""
Purpose
-------
Data model for explicit finite weighted graphs and the combinatorial
primitives (neighbors, degree, oriented triangle count, induced subgraph,
validation) every numerical module consumes.

Key behaviors
-------------
- `FiniteGraph` stores each undirected edge once as `(i, j, w)` with `i < j`
  and builds a per-vertex sorted neighbor index at construction.
- `build_finite_graph` canonicalizes raw edge lists (orientation, order) so
  symmetry holds by construction.
- `neighbor_set`, `degree`, `triangle_count` and `unordered_triangle_count`
  work on any `NeighborSource`, i.e. on finite graphs and on lazy families.
- `induced_subgraph` keeps a vertex subset with inherited weights and returns
  the re-indexing map explicitly.
- `validate` reports invariant violations as data, never raising.

Conventions
-----------
- x ∼ y iff a stored edge joins them; its weight is strictly positive once
  validated.
- Triangles are oriented: `triangle_count(x)` is the number of ordered pairs
  `(y, z)`, `y != z`, of neighbors of `x` that are adjacent to each other.
  Each unordered triangle therefore contributes 2 at each of its vertices.
- Graphs are immutable after construction.

Downstream usage
----------------
Generators return families whose truncations are `FiniteGraph`s; spectral,
complexity and deficiency code read graphs only through this module.
"""

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Protocol

from graphs.graph_core.graph_core_config import WEIGHT_FLOOR
from graphs.graph_core.graph_core_types import Neighbor, NeighborList, ReindexMap, WeightedEdge
from graphs.graph_core.graph_errors import GraphDomainError


class NeighborSource(Protocol):
    """Anything that answers neighbor and degree queries by vertex index."""

    def neighbors(self, x: int) -> NeighborList: ...

    def degree(self, x: int) -> int: ...


@dataclass(frozen=True)
class FiniteGraph:
    """
    Purpose
    -------
    Explicit symmetric weighted graph on the vertices `0..vertex_count-1`.

    Key behaviors
    -------------
    - Builds a sorted per-vertex neighbor index from the edge tuple.
    - Answers `neighbors`, `degree` and `weight` queries in O(degree) or O(1).

    Parameters
    ----------
    vertex_count : int
        Number of vertices.
    edges : tuple[WeightedEdge, ...]
        Undirected edges `(i, j, w)`; expected to satisfy `i < j` and `w > 0`
        (checked by `validate`, not here).
    labels : tuple[str | None, ...] | None
        Optional opaque vertex labels (e.g. word-tree letters).

    Attributes
    ----------
    adjacency : tuple[tuple[Neighbor, ...], ...]
        Sorted neighbor lists; edges with an endpoint out of range are left out
        of the index so that `validate` can report them.

    Notes
    -----
    - Equality compares vertex count, edge tuple and labels.
    - Construct through `build_finite_graph` unless a test needs a malformed
      graph on purpose.
    """

    vertex_count: int
    edges: tuple[WeightedEdge, ...]
    labels: tuple[str | None, ...] | None = None
    adjacency: tuple[tuple[Neighbor, ...], ...] = field(init=False, repr=False, compare=False)
    _weights: tuple[dict[int, float], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        count = max(self.vertex_count, 0)
        lists: list[list[Neighbor]] = [[] for _ in range(count)]
        for i, j, w in self.edges:
            if 0 <= i < count and 0 <= j < count:
                lists[i].append((j, w))
                lists[j].append((i, w))
        adjacency = tuple(tuple(sorted(nbrs)) for nbrs in lists)
        object.__setattr__(self, "adjacency", adjacency)
        object.__setattr__(self, "_weights", tuple(dict(nbrs) for nbrs in adjacency))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_vertex(self, x: int) -> bool:
        return 0 <= x < self.vertex_count

    def neighbors(self, x: int) -> NeighborList:
        self._require_vertex(x)
        return list(self.adjacency[x])

    def degree(self, x: int) -> int:
        self._require_vertex(x)
        return len(self.adjacency[x])

    def neighbor_weights(self, x: int) -> Mapping[int, float]:
        """Return the read-only map `y -> E(x, y)` over the neighbors of `x`."""
        self._require_vertex(x)
        return MappingProxyType(self._weights[x])

    def weight(self, x: int, y: int) -> float:
        """Return E(x, y), or 0.0 when the pair is not an edge."""
        self._require_vertex(x)
        self._require_vertex(y)
        return self._weights[x].get(y, 0.0)

    def label(self, x: int) -> str | None:
        self._require_vertex(x)
        return None if self.labels is None else self.labels[x]

    def _require_vertex(self, x: int) -> None:
        if not self.has_vertex(x):
            raise GraphDomainError(
                f"vertex {x} is out of range for a graph with {self.vertex_count} vertices"
            )


def build_finite_graph(
    vertex_count: int,
    edges: Iterable[WeightedEdge],
    labels: Iterable[str | None] | None = None,
) -> FiniteGraph:
    """
    Build a `FiniteGraph` with canonically oriented and sorted edges.

    Parameters
    ----------
    vertex_count : int
        Number of vertices; must be non-negative.
    edges : Iterable[WeightedEdge]
        Edges in any orientation; `(j, i, w)` is stored as `(i, j, w)`.
    labels : Iterable[str | None] | None
        Optional labels, one per vertex.

    Returns
    -------
    FiniteGraph
        Graph whose edge tuple is sorted by `(i, j)`.

    Raises
    ------
    GraphDomainError
        If `vertex_count` is negative or the label count does not match.

    Notes
    -----
    - Duplicates, loops and non-positive weights are kept so that `validate`
      can report them; generators never produce them.
    """

    if vertex_count < 0:
        raise GraphDomainError(f"vertex_count must be non-negative, got {vertex_count}")
    oriented = sorted((min(i, j), max(i, j), float(w)) for i, j, w in edges)
    label_tuple: tuple[str | None, ...] | None = None
    if labels is not None:
        label_tuple = tuple(labels)
        if len(label_tuple) != vertex_count:
            raise GraphDomainError(
                f"expected {vertex_count} labels, got {len(label_tuple)}"
            )
    return FiniteGraph(vertex_count=vertex_count, edges=tuple(oriented), labels=label_tuple)


def neighbor_set(g: NeighborSource, x: int) -> NeighborList:
    """
    Return the neighbors of `x` with their weights, sorted by vertex id.

    Parameters
    ----------
    g : NeighborSource
        Finite graph or graph family.
    x : int
        Vertex index.

    Returns
    -------
    list[tuple[int, float]]
        Exactly the vertices `y` with `E(x, y) != 0`.

    Raises
    ------
    GraphDomainError
        If `x` is out of range.
    """

    return sorted(g.neighbors(x))


def degree(g: NeighborSource, x: int) -> int:
    """Return d(x), the number of neighbors of `x` (weights ignored)."""
    return g.degree(x)


def triangle_count(g: NeighborSource, x: int) -> int:
    """
    Count the oriented x-triangles: ordered pairs `(y, z)` of adjacent neighbors.

    Parameters
    ----------
    g : NeighborSource
        Finite graph or graph family.
    x : int
        Vertex index.

    Returns
    -------
    int
        Number of ordered pairs `(y, z)`, `y != z`, with x ∼ y, x ∼ z, y ∼ z.
        Always even.

    Raises
    ------
    GraphDomainError
        If `x` is out of range.

    Notes
    -----
    - Cost is the sum of the degrees of the neighbors of `x`; families are
      queried locally, so a high-index vertex of an infinite family does not
      need a truncation.
    """

    around = {y for y, _ in g.neighbors(x) if y != x}
    count = 0
    for y in around:
        for z, _ in g.neighbors(y):
            if z != y and z in around:
                count += 1
    return count


def unordered_triangle_count(g: NeighborSource, x: int) -> int:
    """Return the number of unordered triangles through `x`."""
    return triangle_count(g, x) // 2


def degree_sequence(g: FiniteGraph) -> list[int]:
    """Return the ascending degree sequence of `g`."""
    return sorted(len(nbrs) for nbrs in g.adjacency)


def induced_subgraph(g: FiniteGraph, keep: Iterable[int]) -> tuple[FiniteGraph, ReindexMap]:
    """
    Restrict `g` to a vertex subset, keeping every inherited edge and weight.

    Parameters
    ----------
    g : FiniteGraph
        Source graph.
    keep : Iterable[int]
        Vertices to keep; duplicates are ignored.

    Returns
    -------
    tuple[FiniteGraph, dict[int, int]]
        The induced subgraph and the map old id → new id. New ids follow the
        ascending order of the kept old ids.

    Raises
    ------
    GraphDomainError
        If a kept vertex is not a vertex of `g`.

    Notes
    -----
    - An empty `keep` yields the empty graph.
    - Callers must go through the returned map; labels are carried over but
      are not identifiers.
    """

    kept = sorted(set(keep))
    for x in kept:
        if not g.has_vertex(x):
            raise GraphDomainError(
                f"cannot keep vertex {x}: graph has {g.vertex_count} vertices"
            )
    reindex: ReindexMap = {old: new for new, old in enumerate(kept)}
    edges = [
        (reindex[i], reindex[j], w) for i, j, w in g.edges if i in reindex and j in reindex
    ]
    labels = None if g.labels is None else [g.labels[x] for x in kept]
    return build_finite_graph(len(kept), edges, labels), reindex


def validate(g: FiniteGraph) -> list[str]:
    """
    Check the structural invariants of a finite graph.

    Parameters
    ----------
    g : FiniteGraph
        Graph to check.

    Returns
    -------
    list[str]
        One message per violation; empty iff the graph is valid.

    Notes
    -----
    - Checked: endpoints in range, no loops, `i < j` storage, no duplicate
      pair, finite weights above `WEIGHT_FLOOR`, label count, and consistency
      of the neighbor index with the edge set.
    """

    violations: list[str] = []
    if g.vertex_count < 0:
        violations.append(f"negative vertex count {g.vertex_count}")
    seen: set[tuple[int, int]] = set()
    for i, j, w in g.edges:
        if not (g.has_vertex(i) and g.has_vertex(j)):
            violations.append(
                f"edge ({i}, {j}) has an endpoint outside 0..{g.vertex_count - 1}"
            )
            continue
        if i == j:
            violations.append(f"loop edge at vertex {i}")
            continue
        if i > j:
            violations.append(f"edge ({i}, {j}) is not stored with i < j")
        pair = (min(i, j), max(i, j))
        if pair in seen:
            violations.append(f"duplicate edge {pair}")
        seen.add(pair)
        if not math.isfinite(w) or w <= WEIGHT_FLOOR:
            violations.append(f"edge ({i}, {j}) has weight {w} at or below {WEIGHT_FLOOR}")
    if g.labels is not None and len(g.labels) != g.vertex_count:
        violations.append(f"{len(g.labels)} labels for {g.vertex_count} vertices")
    for x, nbrs in enumerate(g.adjacency):
        for y, w in nbrs:
            if g._weights[y].get(x) != w:
                violations.append(f"index entry ({x} -> {y}) has no symmetric entry")
    return violations
