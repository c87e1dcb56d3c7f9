"""
Purpose
-------
Triangle/degree ratios and threshold sweeps approximating the lower local
complexity `C_loc = liminf N(x)/d(x)²` along the filter of vertices with
growing degree.

Key behaviors
-------------
- `ratio(g, x) = N(x)/d(x)²` with the oriented triangle count, on finite
  graphs or directly on families.
- `c_loc_estimate(family, windows)` truncates at each window, keeps interior
  vertices only, and computes `inf{ratio(x) : d(x) >= t}` for each threshold
  `t`. Empty cells are NaN, never 0.
- `stated_complexity_limit(family)` returns the limit claimed in the source
  material for `K_n`, `K_{k,n}` and the star-clique chain, printed beside the
  measured value.
- `check_local_complexity_floor` evaluates the per-vertex floor implied by the
  discriminant inequality.

Conventions
-----------
- The estimate of a window is the threshold infimum at the largest threshold
  whose cell is non-empty.
- Reports carry oriented and unordered triangle counts side by side.

Downstream usage
----------------
CLI `complexity` subcommand and criterion 9 of the verify suite.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
import pandas as pd

from graphs.graph_core.finite_graph import FiniteGraph, NeighborSource, triangle_count
from graphs.graph_core.graph_errors import GraphDomainError
from graphs.graph_core.graph_family import GraphFamily, truncate
from infra.logging.infra_logger import InfraLogger
from spectral.bound_checks import BoundCheck, default_shift, make_check

PER_VERTEX_COLUMNS: list[str] = [
    "vertex",
    "degree",
    "triangles",
    "unordered_triangles",
    "ratio",
]
THRESHOLD_COLUMNS: list[str] = ["window", "t", "inf_ratio", "n_vertices_at_t"]


def ratio(g: NeighborSource, x: int) -> float:
    """
    Return `N(x)/d(x)²` with the oriented triangle count.

    Parameters
    ----------
    g : NeighborSource
        Finite graph or family.
    x : int
        Vertex with `d(x) >= 1`.

    Returns
    -------
    float
        In `[0, 1]` for simple graphs; `(n−2)/(n−1)` on `K_n`.

    Raises
    ------
    GraphDomainError
        If `x` is isolated.
    """

    d = g.degree(x)
    if d == 0:
        raise GraphDomainError(f"vertex {x} is isolated; ratio needs d(x) >= 1")
    return triangle_count(g, x) / d**2


@dataclass(frozen=True)
class ThresholdCell:
    """`inf{ratio : d >= t}` over the selected vertices of one window."""

    t: int
    inf_ratio: float
    vertex_count: int

    @property
    def is_empty(self) -> bool:
        return self.vertex_count == 0


@dataclass(frozen=True, eq=False)
class ComplexityReport:
    """
    Purpose
    -------
    Per-vertex ratios and threshold infima of one window.

    Parameters
    ----------
    window_size : int
        Truncation order.
    interior_only : bool
        Whether boundary vertices were excluded.
    per_vertex : pandas.DataFrame
        Columns `PER_VERTEX_COLUMNS`, ascending by vertex.
    threshold_infima : tuple[ThresholdCell, ...]
        Ascending in `t`; `inf_ratio` nondecreasing over non-empty cells.
    """

    window_size: int
    interior_only: bool
    per_vertex: pd.DataFrame
    threshold_infima: tuple[ThresholdCell, ...]

    @property
    def estimate(self) -> float:
        """Threshold infimum at the largest non-empty threshold (NaN if none)."""
        filled = [cell for cell in self.threshold_infima if not cell.is_empty]
        return filled[-1].inf_ratio if filled else float("nan")

    @property
    def max_degree(self) -> int:
        return int(self.per_vertex["degree"].max()) if len(self.per_vertex) else 0


def vertex_ratios(g: FiniteGraph, vertices: Iterable[int]) -> pd.DataFrame:
    """Tabulate degree, oriented and unordered triangles and ratio for non-isolated vertices."""
    rows = []
    for x in sorted(set(vertices)):
        d = g.degree(x)
        if d == 0:
            continue
        t = triangle_count(g, x)
        rows.append(
            {
                "vertex": x,
                "degree": d,
                "triangles": t,
                "unordered_triangles": t // 2,
                "ratio": t / d**2,
            }
        )
    return pd.DataFrame(rows, columns=PER_VERTEX_COLUMNS)


def threshold_infima(
    per_vertex: pd.DataFrame, thresholds: Sequence[int] | None = None
) -> tuple[ThresholdCell, ...]:
    """
    Sweep thresholds over a per-vertex table.

    Parameters
    ----------
    per_vertex : pandas.DataFrame
        Output of `vertex_ratios`.
    thresholds : Sequence[int] | None
        Thresholds `t`; default is every distinct degree present.

    Returns
    -------
    tuple[ThresholdCell, ...]
        Ascending in `t`.
    """

    if thresholds is None:
        thresholds = sorted(int(d) for d in per_vertex["degree"].unique())
    degrees = per_vertex["degree"].to_numpy()
    ratios = per_vertex["ratio"].to_numpy(dtype=float)
    cells = []
    for t in sorted(set(thresholds)):
        selected = ratios[degrees >= t]
        inf_ratio = float(selected.min()) if selected.size else float("nan")
        cells.append(ThresholdCell(t=int(t), inf_ratio=inf_ratio, vertex_count=int(selected.size)))
    return tuple(cells)


def c_loc_estimate(
    family: GraphFamily,
    window_sizes: Iterable[int],
    thresholds: Sequence[int] | None = None,
    interior_only: bool = True,
    logger: InfraLogger | None = None,
) -> list[ComplexityReport]:
    """
    Approximate `C_loc` by threshold sweeps on successive windows.

    Parameters
    ----------
    family : GraphFamily
        Family to analyze.
    window_sizes : Iterable[int]
        Window sizes; finite families are clamped to their size.
    thresholds : Sequence[int] | None
        Fixed thresholds for every window; default per window is its distinct
        interior degrees.
    interior_only : bool
        Exclude boundary vertices (their degree is deflated by truncation).
    logger : InfraLogger | None
        Receives `window_done` per window and a `bounded_degree` warning
        when the maximal interior degree does not grow.

    Returns
    -------
    list[ComplexityReport]
        One report per window, in input order.
    """

    reports: list[ComplexityReport] = []
    for size in window_sizes:
        if family.size is not None:
            size = min(size, family.size)
        window = truncate(family, size)
        vertices = window.interior_vertices() if interior_only else range(window.order)
        per_vertex = vertex_ratios(window.graph, vertices)
        report = ComplexityReport(
            window_size=size,
            interior_only=interior_only,
            per_vertex=per_vertex,
            threshold_infima=threshold_infima(per_vertex, thresholds),
        )
        reports.append(report)
        if logger is not None:
            logger.info(
                "window_done",
                f"{family.name} window {size}",
                {"window": size, "estimate": report.estimate, "max_degree": report.max_degree},
            )
    if logger is not None and len(reports) > 1 and reports[-1].max_degree <= reports[0].max_degree:
        logger.warning(
            "bounded_degree",
            f"interior degree of {family.name} does not grow across windows",
            {"max_degree": reports[-1].max_degree},
        )
    return reports


def threshold_frame(reports: Sequence[ComplexityReport]) -> pd.DataFrame:
    """Flatten reports into the CSV table `window,t,inf_ratio,n_vertices_at_t`."""
    rows = [
        {
            "window": report.window_size,
            "t": cell.t,
            "inf_ratio": cell.inf_ratio,
            "n_vertices_at_t": cell.vertex_count,
        }
        for report in reports
        for cell in report.threshold_infima
    ]
    return pd.DataFrame(rows, columns=THRESHOLD_COLUMNS)


def estimate_trend(reports: Sequence[ComplexityReport]) -> pd.DataFrame:
    """Return per-window estimates and their change from the previous window."""
    estimates = np.array([report.estimate for report in reports], dtype=float)
    change = np.concatenate([[np.nan], np.diff(estimates)]) if len(estimates) else estimates
    return pd.DataFrame(
        {
            "window": [report.window_size for report in reports],
            "estimate": estimates,
            "change": change,
        }
    )


def stated_complexity_limit(family: GraphFamily) -> float | None:
    """
    Return the limit value claimed in the source material, if any.

    Notes
    -----
    - `K_n`: `(n−1)(n−2)/n²`; `K_{k,n}` and its chain: `1/(2k²)`;
      star-clique chain: `1/(1+α)²`. Only the last one agrees with oriented
      counting; the others are printed for comparison.
    """

    params = family.params
    if family.name == "complete":
        n = int(params["n"])
        return (n - 1) * (n - 2) / n**2
    if family.name in ("kkn", "chained-kkn"):
        return 1.0 / (2.0 * float(params["k"]) ** 2)
    if family.name == "skn":
        return 1.0 / (1.0 + float(params["alpha"])) ** 2
    return None


def check_local_complexity_floor(
    g: FiniteGraph, vertices: Iterable[int] | None = None, C: float | None = None
) -> list[BoundCheck]:
    """
    Evaluate `(1/C)·E_min²/E_max <= N(x)/d(x)² + C/(E_max·d(x))` per vertex.

    Parameters
    ----------
    g : FiniteGraph
        Graph with at least one edge.
    vertices : Iterable[int] | None
        Vertices to check (isolated ones are skipped); all by default.
    C : float | None
        Shift constant; defaults to `max(SLACK_ABS, −λ_min(g))`.

    Returns
    -------
    list[BoundCheck]
        One `complexity_floor` check per non-isolated vertex.

    Raises
    ------
    GraphDomainError
        If `g` has no edge or `C <= 0`.

    Notes
    -----
    - Follows from the discriminant inequality with `Σ_y E(x,y) >= d·E_min`
      and `Σ E(y,z) <= N(x)·E_max`, so it holds whenever `C >= −λ_min`.
    """

    if not g.edges:
        raise GraphDomainError("complexity floor needs at least one edge")
    if C is None:
        C = default_shift(g)
    if C <= 0:
        raise GraphDomainError(f"C must be positive, got {C}")
    weights = [w for _, _, w in g.edges]
    e_min, e_max = min(weights), max(weights)
    lhs = e_min**2 / (C * e_max)
    chosen = range(g.vertex_count) if vertices is None else sorted(set(vertices))
    checks = []
    for x in chosen:
        d = g.degree(x)
        if d == 0:
            continue
        rhs = triangle_count(g, x) / d**2 + C / (e_max * d)
        checks.append(make_check("complexity_floor", lhs, rhs, vertex=x))
    return checks
