"""
Purpose
-------
Lazy description of (possibly infinite) locally finite graphs and their
finite windows.

Key behaviors
-------------
- `GraphFamily` enumerates vertices by integer index (the canonical order)
  and answers neighbor, degree and label queries through pure functions.
- `truncate` materializes the induced subgraph on the first `n` vertices and
  flags interior vertices (whole family neighborhood inside the window).
- `check_family_symmetry` samples a window and reports asymmetric
  neighbor-function entries.
- `family_of_graph` wraps a finite graph as a finite family.

Conventions
-----------
- Families whose vertices have very large degree supply `window_neighbor_fn`
  (neighbors below an index bound) and `degree_fn` so windows and degrees
  never require enumerating every neighbor.
- Infinite families carry a `default_window` taken from their window
  parameter; `truncate(f)` without `n` uses it.
- Interior is decided by comparing the family degree with the window degree;
  only interior vertices feed degree/triangle statistics downstream.

Downstream usage
----------------
Generators build `GraphFamily` objects; spectral scans, complexity estimates
and deficiency probes call `truncate` and the family query methods.
"""

from dataclasses import dataclass, field

from graphs.graph_core.finite_graph import FiniteGraph, build_finite_graph
from graphs.graph_core.graph_core_types import (
    DegreeFn,
    FamilyParams,
    LabelFn,
    NeighborFn,
    NeighborList,
    WindowNeighborFn,
)
from graphs.graph_core.graph_errors import GraphDomainError


@dataclass(frozen=True, eq=False)
class GraphFamily:
    """
    Purpose
    -------
    Vertex enumeration in canonical order plus a symmetric neighbor/weight
    function, describing a finite graph or a locally finite infinite one.

    Key behaviors
    -------------
    - `neighbors(x)` returns the full sorted neighbor list of `x`.
    - `neighbors_within(x, n)` returns the neighbors with index `< n`.
    - `degree(x)` uses `degree_fn` when supplied.

    Parameters
    ----------
    name : str
        Family identifier (e.g. "kkn", "ftree").
    params : FamilyParams
        Named scalars the family was built from.
    neighbor_fn : NeighborFn
        Pure function `x -> [(y, w), ...]`.
    size : int | None
        Vertex count when finite, None when infinite.
    default_window : int | None
        Window used by `truncate` when no size is given.
    window_neighbor_fn : WindowNeighborFn | None
        Optional `(x, n) -> neighbors below n`.
    degree_fn : DegreeFn | None
        Optional closed-form degree.
    label_fn : LabelFn | None
        Optional vertex label function.

    Notes
    -----
    - All supplied functions must be pure; families are shared freely across
      threads and parameter sweeps.
    """

    name: str
    params: FamilyParams
    neighbor_fn: NeighborFn = field(repr=False)
    size: int | None = None
    default_window: int | None = None
    window_neighbor_fn: WindowNeighborFn | None = field(default=None, repr=False)
    degree_fn: DegreeFn | None = field(default=None, repr=False)
    label_fn: LabelFn | None = field(default=None, repr=False)

    @property
    def is_finite(self) -> bool:
        return self.size is not None

    def neighbors(self, x: int) -> NeighborList:
        self._require_vertex(x)
        return sorted(self.neighbor_fn(x))

    def neighbors_within(self, x: int, n: int) -> NeighborList:
        self._require_vertex(x)
        if self.window_neighbor_fn is not None:
            return sorted(self.window_neighbor_fn(x, n))
        return [(y, w) for y, w in sorted(self.neighbor_fn(x)) if y < n]

    def degree(self, x: int) -> int:
        self._require_vertex(x)
        if self.degree_fn is not None:
            return self.degree_fn(x)
        return len(self.neighbor_fn(x))

    def label(self, x: int) -> str | None:
        self._require_vertex(x)
        return None if self.label_fn is None else self.label_fn(x)

    def _require_vertex(self, x: int) -> None:
        if x < 0 or (self.size is not None and x >= self.size):
            raise GraphDomainError(f"vertex {x} is not a vertex of family {self.name!r}")


@dataclass(frozen=True, eq=False)
class Truncation:
    """
    Purpose
    -------
    Finite window of a family: the induced subgraph on its first `order`
    vertices, with interior flags.

    Parameters
    ----------
    source : GraphFamily
        Family the window was taken from.
    order : int
        Number of leading vertices kept.
    graph : FiniteGraph
        Induced subgraph with inherited weights.
    interior_mask : tuple[bool, ...]
        True iff the vertex has the same degree in the window and the family.
    """

    source: GraphFamily
    order: int
    graph: FiniteGraph
    interior_mask: tuple[bool, ...]

    def interior_vertices(self) -> list[int]:
        return [x for x, inside in enumerate(self.interior_mask) if inside]


def truncate(family: GraphFamily, n: int | None = None) -> Truncation:
    """
    Materialize the window of a family on its first `n` vertices.

    Parameters
    ----------
    family : GraphFamily
        Source family.
    n : int | None
        Window size; defaults to the family size (finite) or its
        `default_window` (infinite).

    Returns
    -------
    Truncation
        Window graph plus interior mask.

    Raises
    ------
    GraphDomainError
        If `n` is missing with no default, `n < 1`, or `n` exceeds the size
        of a finite family.

    Notes
    -----
    - Edges are collected from `neighbors_within(x, n)` for `x < n` and
      stored once (`x < y`), so the window is the induced subgraph.
    """

    if n is None:
        n = family.size if family.size is not None else family.default_window
    if n is None:
        raise GraphDomainError(f"family {family.name!r} is infinite and has no default window")
    if n < 1:
        raise GraphDomainError(f"window size must be at least 1, got {n}")
    if family.size is not None and n > family.size:
        raise GraphDomainError(
            f"window size {n} exceeds the size {family.size} of family {family.name!r}"
        )
    edges = [
        (x, y, w) for x in range(n) for y, w in family.neighbors_within(x, n) if x < y
    ]
    labels = None
    if family.label_fn is not None:
        labels = [family.label_fn(x) for x in range(n)]
    graph = build_finite_graph(n, edges, labels)
    mask = tuple(family.degree(x) == graph.degree(x) for x in range(n))
    return Truncation(source=family, order=n, graph=graph, interior_mask=mask)


def check_family_symmetry(family: GraphFamily, n: int) -> list[str]:
    """
    Report neighbor-function asymmetries among the first `n` vertices.

    Parameters
    ----------
    family : GraphFamily
        Family to sample.
    n : int
        Number of leading vertices to check.

    Returns
    -------
    list[str]
        One message per pair `(x, y)` listed by `x` but not by `y` with the
        same weight; empty when symmetric on the window.
    """

    violations: list[str] = []
    for x in range(n):
        for y, w in family.neighbors_within(x, n):
            if (x, w) not in family.neighbors_within(y, n):
                violations.append(f"{family.name}: {y} lists no edge back to {x} with weight {w}")
    return violations


def family_of_graph(g: FiniteGraph, name: str = "graph") -> GraphFamily:
    """Wrap a finite graph as a finite family (e.g. a surgery part)."""
    return GraphFamily(
        name=name,
        params={"vertexCount": g.vertex_count},
        neighbor_fn=g.neighbors,
        size=g.vertex_count,
        degree_fn=g.degree,
        label_fn=None if g.labels is None else g.label,
    )
