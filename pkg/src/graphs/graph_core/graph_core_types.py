"""
Purpose
-------
Provide shared type aliases for the finite-graph and graph-family layer.

Key behaviors
-------------
- Capture the shapes of edges, neighbor lists and the callables that describe
  lazy (possibly infinite) families in a single place.

Conventions
-----------
- Vertices are non-negative integer indices; a family's canonical order is the
  integer order of its indices.
- `WeightedEdge` is `(i, j, w)` with `i < j` and `w > 0` once validated.
- `Neighbor` is `(y, w)`; neighbor lists are sorted by `y`.
- `WindowNeighborFn(x, n)` returns only the neighbors of `x` with index `< n`.

Downstream usage
----------------
Import these aliases in `finite_graph`, `graph_family`, the generators and the
numerical modules to keep signatures concise and consistent.
"""

from typing import Callable, Mapping, TypeAlias

WeightedEdge: TypeAlias = tuple[int, int, float]
Neighbor: TypeAlias = tuple[int, float]
NeighborList: TypeAlias = list[Neighbor]
NeighborFn: TypeAlias = Callable[[int], NeighborList]
WindowNeighborFn: TypeAlias = Callable[[int, int], NeighborList]
DegreeFn: TypeAlias = Callable[[int], int]
LabelFn: TypeAlias = Callable[[int], str | None]
FamilyParams: TypeAlias = Mapping[str, int | float | bool]
ReindexMap: TypeAlias = dict[int, int]
