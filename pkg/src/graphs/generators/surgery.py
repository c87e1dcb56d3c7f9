"""
Purpose
-------
Glue a sequence of graphs into one graph by cross edges between one anchor
vertex per part, keeping anchor row sums bounded.

Key behaviors
-------------
- `build_surgery_plan` validates a plan: cross edges between distinct parts,
  positive weights, anchor row sums `Σ_m E(x_n, x_m) <= M` and at most `M`
  cross neighbors per anchor.
- `surgery` truncates every part, lays the windows out consecutively and
  returns both the glued graph `G` and the disjoint union `G°`.
- Plan builders for the constructions used downstream: the chained `K_{k,n}`
  (`main_construction_plan`), Jacobi copies followed by stars
  (`jacobi_copies_with_stars_plan`) and constant-degree parts
  (`constant_degree_plan`).
- `load_surgery_plan` reads a plan from JSON.

Conventions
-----------
- Cross edges are stored as `(m, n, w)` with part indices `m < n`.
- Part `p` occupies the global index range starting at `offsets[p]`; its
  anchor is `offsets[p] + anchor`.
- `G` and `G°` share the vertex set; their edge sets differ exactly by the
  cross edges.

Downstream usage
----------------
`spectral.bound_checks.surgery_norm_check` compares `G` with `G°`; the verify
suite assembles the chained `K_{k,n}` through `main_construction_plan`.
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from graphs.generators.family_registry import family_from_name
from graphs.generators.finite_families import complete_graph, hub_of_cliques, star_graph
from graphs.generators.generators_config import DEFAULT_ROW_BOUND, DEFAULT_SURGERY_WEIGHT
from graphs.generators.jacobi_chain import jacobi_chain
from graphs.graph_core.finite_graph import FiniteGraph, build_finite_graph
from graphs.graph_core.graph_core_config import GRAPH_FILE_ENCODING, WEIGHT_FLOOR
from graphs.graph_core.graph_core_types import WeightedEdge
from graphs.graph_core.graph_errors import ConstructionError, GraphFormatError
from graphs.graph_core.graph_family import GraphFamily, truncate


@dataclass(frozen=True)
class SurgeryPart:
    """One part of a surgery: a family, its window size and its anchor vertex."""

    family: GraphFamily
    anchor: int
    size: int | None = None


@dataclass(frozen=True)
class SurgeryPlan:
    """
    Purpose
    -------
    Validated description of a surgery.

    Parameters
    ----------
    parts : tuple[SurgeryPart, ...]
        Parts in layout order.
    cross_edges : tuple[WeightedEdge, ...]
        Anchor cross edges `(m, n, w)` on part indices, `m < n`.
    row_bound : float
        `M`: bound on every anchor's cross-weight sum and cross-degree.

    Notes
    -----
    - Build with `build_surgery_plan`; direct construction skips validation.
    """

    parts: tuple[SurgeryPart, ...]
    cross_edges: tuple[WeightedEdge, ...]
    row_bound: float

    @property
    def max_cross_weight(self) -> float:
        return max((w for _, _, w in self.cross_edges), default=0.0)


@dataclass(frozen=True)
class SurgeryResult:
    """
    Purpose
    -------
    Output of `surgery`: the glued graph, the disjoint union and the layout.

    Attributes
    ----------
    graph : FiniteGraph
        `G`, with cross edges.
    disjoint : FiniteGraph
        `G°`, without cross edges.
    offsets : tuple[int, ...]
        Global index of the first vertex of each part.
    anchors : tuple[int, ...]
        Global index of each part's anchor.
    plan : SurgeryPlan
        The plan that was assembled.
    """

    graph: FiniteGraph
    disjoint: FiniteGraph
    offsets: tuple[int, ...]
    anchors: tuple[int, ...]
    plan: SurgeryPlan


def build_surgery_plan(
    parts: Sequence[SurgeryPart],
    cross_edges: Iterable[WeightedEdge],
    row_bound: float,
) -> SurgeryPlan:
    """
    Validate and assemble a surgery plan.

    Parameters
    ----------
    parts : Sequence[SurgeryPart]
        Parts, at least one.
    cross_edges : Iterable[WeightedEdge]
        Cross edges on part indices, in either orientation.
    row_bound : float
        `M > 0`.

    Returns
    -------
    SurgeryPlan
        Plan with canonically oriented, sorted cross edges.

    Raises
    ------
    ConstructionError
        On an empty part list, a non-positive bound, a self cross edge, an
        unknown part index, a weight at or below the floor, a duplicate pair,
        or an anchor whose cross-weight sum or cross-degree exceeds `M`
        (the message names the anchor).

    Notes
    -----
    - Requiring cross-degree `<= M` next to the weighted row sum makes
      `‖A_G − A_G°‖ <= M · max cross weight` hold for any weights.
    """

    if not parts:
        raise ConstructionError("a surgery plan needs at least one part")
    if row_bound <= 0:
        raise ConstructionError(f"row bound M must be positive, got {row_bound}")
    for index, part in enumerate(parts):
        if part.anchor < 0:
            raise ConstructionError(f"part {index} has negative anchor {part.anchor}")

    canonical: dict[tuple[int, int], float] = {}
    for m, n, w in cross_edges:
        if m == n:
            raise ConstructionError(f"cross edge ({m}, {n}) joins a part to itself")
        if not (0 <= m < len(parts) and 0 <= n < len(parts)):
            raise ConstructionError(f"cross edge ({m}, {n}) names an unknown part")
        if w <= WEIGHT_FLOOR:
            raise ConstructionError(f"cross edge ({m}, {n}) has weight {w} at or below floor")
        pair = (min(m, n), max(m, n))
        if pair in canonical:
            raise ConstructionError(f"duplicate cross edge {pair}")
        canonical[pair] = float(w)

    row_sums = [0.0] * len(parts)
    row_counts = [0] * len(parts)
    for (m, n), w in canonical.items():
        for p in (m, n):
            row_sums[p] += w
            row_counts[p] += 1
    for p, (total, count) in enumerate(zip(row_sums, row_counts)):
        if total > row_bound or count > row_bound:
            raise ConstructionError(
                f"anchor of part {p} has cross-weight sum {total} over {count} edges, "
                f"exceeding the row bound M={row_bound}"
            )
    edges = tuple(sorted((m, n, w) for (m, n), w in canonical.items()))
    return SurgeryPlan(parts=tuple(parts), cross_edges=edges, row_bound=float(row_bound))


def surgery(plan: SurgeryPlan, size_cap: int | None = None) -> SurgeryResult:
    """
    Assemble `G` and `G°` from a plan.

    Parameters
    ----------
    plan : SurgeryPlan
        Validated plan.
    size_cap : int | None
        Optional total vertex budget; each part's window is cut to at most
        `size_cap // len(parts)` vertices.

    Returns
    -------
    SurgeryResult
        Glued graph, disjoint union and layout.

    Raises
    ------
    ConstructionError
        If an anchor falls outside its part's window, or the budget leaves a
        part empty.
    """

    per_part = None if size_cap is None else size_cap // len(plan.parts)
    if per_part is not None and per_part < 1:
        raise ConstructionError(f"size cap {size_cap} is too small for {len(plan.parts)} parts")

    offsets: list[int] = []
    anchors: list[int] = []
    edges: list[WeightedEdge] = []
    labels: list[str | None] = []
    total = 0
    for index, part in enumerate(plan.parts):
        size = part.size
        if size is None:
            size = part.family.size if part.family.size is not None else part.family.default_window
        if per_part is not None:
            size = per_part if size is None else min(size, per_part)
        window = truncate(part.family, size)
        if part.anchor >= window.order:
            raise ConstructionError(
                f"anchor {part.anchor} of part {index} lies outside its window of {window.order}"
            )
        offsets.append(total)
        anchors.append(total + part.anchor)
        edges.extend((total + i, total + j, w) for i, j, w in window.graph.edges)
        labels.extend(f"{index}:{window.graph.label(x) or x}" for x in range(window.order))
        total += window.order

    disjoint = build_finite_graph(total, edges, labels)
    cross = [(anchors[m], anchors[n], w) for m, n, w in plan.cross_edges]
    glued = build_finite_graph(total, edges + cross, labels)
    return SurgeryResult(
        graph=glued,
        disjoint=disjoint,
        offsets=tuple(offsets),
        anchors=tuple(anchors),
        plan=plan,
    )


def chain_cross_edges(count: int, weight: float = DEFAULT_SURGERY_WEIGHT) -> list[WeightedEdge]:
    """Return the path of cross edges `(p, p+1, weight)` over `count` parts."""
    return [(p, p + 1, weight) for p in range(count - 1)]


def main_construction_plan(k: int, count: int) -> SurgeryPlan:
    """
    Plan of the chained hubs of cliques: parts `K_{k,n}` for `n = 1..count`,
    anchored at their hubs, chained by unit cross edges, `M = 2`.
    """

    parts = [SurgeryPart(hub_of_cliques(k, n), anchor=0) for n in range(1, count + 1)]
    return build_surgery_plan(parts, chain_cross_edges(count), DEFAULT_ROW_BOUND)


def jacobi_copies_with_stars_plan(
    alpha: float, copies: int, length: int, star_orders: Sequence[int]
) -> SurgeryPlan:
    """
    Plan joining `copies` Jacobi chains (windows of `length`) and then the
    stars `S_n` for `n` in `star_orders`, anchored at their first vertex or
    hub, chained by unit cross edges, `M = 2`.
    """

    parts = [SurgeryPart(jacobi_chain(alpha, length), anchor=0) for _ in range(copies)]
    parts.extend(SurgeryPart(star_graph(n), anchor=0) for n in star_orders)
    return build_surgery_plan(parts, chain_cross_edges(len(parts)), DEFAULT_ROW_BOUND)


def constant_degree_plan(degrees: Sequence[int]) -> SurgeryPlan:
    """
    Plan whose parts are the `d`-regular complete graphs `K_{d+1}` for `d` in
    `degrees`, chained at vertex 0 by unit cross edges, `M = 2`.
    """

    parts = [SurgeryPart(complete_graph(d + 1), anchor=0) for d in degrees]
    return build_surgery_plan(parts, chain_cross_edges(len(parts)), DEFAULT_ROW_BOUND)


def load_surgery_plan(path: str | Path) -> SurgeryPlan:
    """
    Read a plan from JSON.

    Parameters
    ----------
    path : str | Path
        File holding `{"parts": [{"family", "params", "anchor", "size"}],
        "crossEdges": [[m, n, w], ...], "rowBound": M}`.

    Returns
    -------
    SurgeryPlan
        Validated plan.

    Raises
    ------
    GraphFormatError
        On malformed JSON or missing keys.
    ConstructionError
        On plan invariant violations.
    """

    text = Path(path).read_text(encoding=GRAPH_FILE_ENCODING)
    try:
        payload = json.loads(text)
        raw_parts = payload["parts"]
        raw_edges = payload.get("crossEdges", [])
        row_bound = float(payload.get("rowBound", DEFAULT_ROW_BOUND))
    except json.JSONDecodeError as exc:
        raise GraphFormatError(
            f"malformed plan JSON in {path} at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"plan file {path} is missing or mistypes a field: {exc}") from exc

    parts: list[SurgeryPart] = []
    for raw in raw_parts:
        try:
            family = family_from_name(raw["family"], raw.get("params", {}), raw.get("size"))
            parts.append(SurgeryPart(family, int(raw.get("anchor", 0)), raw.get("size")))
        except (KeyError, TypeError) as exc:
            raise GraphFormatError(f"plan part {raw!r} is malformed: {exc}") from exc
    edges = [(int(m), int(n), float(w)) for m, n, w in raw_edges]
    return build_surgery_plan(parts, edges, row_bound)
