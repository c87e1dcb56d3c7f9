"""
Purpose
-------
Evaluate the spectral inequalities for adjacency operators of finite graphs
and report each one as a `BoundCheck` value.

Key behaviors
-------------
- `check_estbd_sandwich`: `sup_x Σ_y E(x,y)² <= max(λ_min², λ_max²) <=
  sup_x Σ_{y∼x} d(y) E(x,y)²`.
- `rayleigh_witness`: the Rayleigh quotient of the test vector equal to 1 at
  `x` and `d(x)^{-1/2}` on its neighbors, a lower bound on `λ_max`;
  `check_rayleigh_witnesses` compares it with `λ_max` at every vertex.
- `check_discriminant_inequality`: per vertex,
  `(1/C)(Σ_y E(x,y))² <= Σ_{y∼x} Σ_{z∼y, z∼x} E(y,z) + C·d(x)`, which holds
  whenever `C >= −λ_min`.
- `surgery_norm_check`: `‖A_G − A_G°‖ <= M · w_max`.
- `kkn_lower_bound_check`, `main_construction_bound`: `λ_min(K_{k,n}) >= −4k`
  and `λ_min >= −4k − M` for the chained `K_{k,n}` surgery.
- `regular_graph_identity_check`: `σ(A) = d − σ(L)` on `d`-regular graphs.

Conventions
-----------
- Every check is stated as `lhs <= rhs`; it passes when
  `lhs <= rhs + SLACK_ABS + SLACK_REL · max(|lhs|, |rhs|)`.
- `slack = rhs − lhs`; negative slack within tolerance still passes.
- Neighbor sums over `z` use ordered pairs, matching the oriented triangle
  convention.

Downstream usage
----------------
The CLI `spectrum --check` and the verify suite render these checks; the
complexity module reuses `neighborhood_sums`.
"""

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np
import numpy.typing as npt

from graphs.generators.finite_families import hub_of_cliques
from graphs.generators.surgery import SurgeryResult, main_construction_plan, surgery
from graphs.graph_core.finite_graph import FiniteGraph
from graphs.graph_core.graph_errors import GraphDomainError
from graphs.graph_core.graph_family import truncate
from spectral.eigensolvers import SpectralReport, auto_extremal, dense_spectrum
from spectral.operators import adjacency_matrix, laplacian_matrix, operator_difference
from spectral.spectral_config import SLACK_ABS, SLACK_REL


@dataclass(frozen=True)
class BoundCheck:
    """
    Purpose
    -------
    One evaluated inequality `lhs <= rhs` with its verdict.

    Parameters
    ----------
    name : str
        Short identifier (`estbd_lower`, `witness`, `discriminant`, ...).
    lhs : float
        Left-hand side.
    rhs : float
        Right-hand side.
    verdict : bool
        True iff the inequality holds within `tolerance`.
    tolerance : float
        Allowed excess of `lhs` over `rhs`.
    vertex : int | None
        Vertex the check was evaluated at, when per-vertex.
    relation : str
        Always `"<="`; kept for rendering.
    """

    name: str
    lhs: float
    rhs: float
    verdict: bool
    tolerance: float
    vertex: int | None = None
    relation: str = "<="

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs


def make_check(
    name: str,
    lhs: float,
    rhs: float,
    vertex: int | None = None,
    slack_abs: float = SLACK_ABS,
    slack_rel: float = SLACK_REL,
) -> BoundCheck:
    """Evaluate `lhs <= rhs` with absolute plus relative slack."""
    tolerance = slack_abs + slack_rel * max(abs(lhs), abs(rhs))
    return BoundCheck(
        name=name,
        lhs=float(lhs),
        rhs=float(rhs),
        verdict=bool(lhs <= rhs + tolerance),
        tolerance=tolerance,
        vertex=vertex,
    )


def neighborhood_sums(g: FiniteGraph, x: int) -> tuple[float, float]:
    """
    Return `(Σ_y E(x,y), Σ_{y∼x} Σ_{z∼y, z∼x} E(y,z))` for vertex `x`.

    The second sum runs over ordered pairs `(y, z)`, so each edge inside the
    neighborhood is counted twice.
    """

    around = g.neighbor_weights(x)
    first = sum(around.values())
    inner = 0.0
    for y in around:
        for z, w in g.adjacency[y]:
            if z in around:
                inner += w
    return first, inner


def check_estbd_sandwich(
    g: FiniteGraph, report: SpectralReport | None = None
) -> tuple[BoundCheck, BoundCheck]:
    """
    Check both sides of the boundedness sandwich on a finite graph.

    Parameters
    ----------
    g : FiniteGraph
        Graph to check.
    report : SpectralReport | None
        Spectrum of `adjacency_matrix(g)` carrying `λ_min` and `λ_max`;
        computed when omitted.

    Returns
    -------
    tuple[BoundCheck, BoundCheck]
        `(estbd_lower, estbd_upper)`: `sup Σ E² <= sup σ(A²)` and
        `sup σ(A²) <= sup Σ d(y) E²`.

    Notes
    -----
    - `sup σ(A²) = max(λ_min², λ_max²)`.
    - The empty graph and edgeless graphs give three zeros.
    """

    if g.vertex_count == 0:
        return make_check("estbd_lower", 0.0, 0.0), make_check("estbd_upper", 0.0, 0.0)
    squares_lower = 0.0
    squares_upper = 0.0
    for x in range(g.vertex_count):
        row = g.adjacency[x]
        squares_lower = max(squares_lower, sum(w * w for _, w in row))
        squares_upper = max(squares_upper, sum(len(g.adjacency[y]) * w * w for y, w in row))
    if report is None:
        report = _extremes(g)
    middle = max(report.lambda_min**2, report.lambda_max**2)
    return (
        make_check("estbd_lower", squares_lower, middle),
        make_check("estbd_upper", middle, squares_upper),
    )


def _extremes(g: FiniteGraph) -> SpectralReport:
    op = adjacency_matrix(g)
    if op.dimension < 2:
        return dense_spectrum(op)
    return auto_extremal(op)


def rayleigh_witness_vector(g: FiniteGraph, x: int) -> npt.NDArray[np.float64]:
    """Return the test vector: 1 at `x`, `d(x)^{-1/2}` on each neighbor, 0 elsewhere."""
    d = g.degree(x)
    if d == 0:
        raise GraphDomainError(f"vertex {x} is isolated; the witness needs d(x) >= 1")
    vec = np.zeros(g.vertex_count)
    vec[x] = 1.0
    for y, _ in g.adjacency[x]:
        vec[y] = 1.0 / math.sqrt(d)
    return vec


def rayleigh_witness(g: FiniteGraph, x: int) -> float:
    """
    Return the witness lower bound on `λ_max` at vertex `x`.

    Parameters
    ----------
    g : FiniteGraph
        Graph (or induced subgraph `G′`) to evaluate on.
    x : int
        Vertex with `d(x) >= 1`.

    Returns
    -------
    float
        `(1/√d) Σ_y E(x,y) + (1/(2d)) Σ_{y∼x} Σ_{z∼y, z∼x} E(y,z)`.

    Raises
    ------
    GraphDomainError
        If `x` is isolated or out of range.

    Notes
    -----
    - Tight on star hubs: `√(n−1) = λ_max(S_n)`.
    """

    d = g.degree(x)
    if d == 0:
        raise GraphDomainError(f"vertex {x} is isolated; the witness needs d(x) >= 1")
    first, inner = neighborhood_sums(g, x)
    return first / math.sqrt(d) + inner / (2.0 * d)


def check_rayleigh_witnesses(g: FiniteGraph, lambda_max: float) -> list[BoundCheck]:
    """
    Check `rayleigh_witness(g, x) <= λ_max` at every non-isolated vertex.

    Parameters
    ----------
    g : FiniteGraph
        Graph (or induced subgraph `G′`).
    lambda_max : float
        Largest eigenvalue of `adjacency_matrix(g)`.

    Returns
    -------
    list[BoundCheck]
        One `witness` check per vertex with `d(x) >= 1`, in vertex order.
    """

    return [
        make_check("witness", rayleigh_witness(g, x), lambda_max, vertex=x)
        for x in range(g.vertex_count)
        if g.degree(x) > 0
    ]


def default_shift(g: FiniteGraph, c_floor: float = SLACK_ABS) -> float:
    """Return `max(c_floor, −λ_min(g))`, the smallest admissible shift `C`."""
    if g.vertex_count == 0:
        return c_floor
    return max(c_floor, -_extremes(g).lambda_min)


def check_discriminant_inequality(
    g: FiniteGraph,
    vertices: Iterable[int] | None = None,
    C: float | None = None,
    c_floor: float = SLACK_ABS,
) -> list[BoundCheck]:
    """
    Evaluate the discriminant inequality at each requested vertex.

    Parameters
    ----------
    g : FiniteGraph
        Graph (or induced subgraph `G′`).
    vertices : Iterable[int] | None
        Vertices to evaluate; all by default.
    C : float | None
        Shift constant; defaults to `max(c_floor, −λ_min(g))`.
    c_floor : float
        Lower clamp of the default `C`.

    Returns
    -------
    list[BoundCheck]
        One `discriminant` check per vertex, ascending.

    Raises
    ------
    GraphDomainError
        If `C <= 0`.

    Notes
    -----
    - All checks pass when `C >= −λ_min(g)`, since `A + C` is then positive
      semidefinite on the span of `δ_x` and `1_{N(x)}`.
    """

    if C is None:
        C = default_shift(g, c_floor)
    if C <= 0:
        raise GraphDomainError(f"C must be positive, got {C}")
    chosen = range(g.vertex_count) if vertices is None else sorted(set(vertices))
    checks = []
    for x in chosen:
        first, inner = neighborhood_sums(g, x)
        checks.append(
            make_check("discriminant", first * first / C, inner + C * g.degree(x), vertex=x)
        )
    return checks


def difference_norm(g: FiniteGraph, g_disjoint: FiniteGraph) -> float:
    """
    Return `‖A_G − A_G°‖` as the largest absolute eigenvalue of the difference.

    Raises
    ------
    GraphDomainError
        If the two graphs have different vertex counts.
    """

    diff = operator_difference(adjacency_matrix(g), adjacency_matrix(g_disjoint)).matrix
    diff.eliminate_zeros()
    rows, cols = diff.nonzero()
    support = np.unique(np.concatenate([rows, cols]))
    if support.size == 0:
        return 0.0
    block = diff[support][:, support].toarray()
    return float(np.max(np.abs(np.linalg.eigvalsh(block))))


def surgery_norm_check(
    g: FiniteGraph, g_disjoint: FiniteGraph, row_bound: float, max_weight: float
) -> BoundCheck:
    """
    Check `‖A_G − A_G°‖ <= M · w_max` for a surgery pair.

    Parameters
    ----------
    g, g_disjoint : FiniteGraph
        `G` and `G°` from the same plan.
    row_bound : float
        `M`.
    max_weight : float
        Largest cross-edge weight.

    Returns
    -------
    BoundCheck
        `surgery_norm`.

    Notes
    -----
    - The difference is supported on the anchors, so its norm is computed
      exactly on that block.
    """

    return make_check(
        "surgery_norm", difference_norm(g, g_disjoint), row_bound * max_weight, slack_abs=1e-9
    )


def surgery_result_norm_check(result: SurgeryResult) -> BoundCheck:
    """Run `surgery_norm_check` with the bound and weights of `result.plan`."""
    plan = result.plan
    return surgery_norm_check(
        result.graph, result.disjoint, plan.row_bound, plan.max_cross_weight
    )


def kkn_lower_bound_check(k: int, n: int) -> BoundCheck:
    """Check `−4k <= λ_min(K_{k,n})` with a dense eigensolve."""
    graph = truncate(hub_of_cliques(k, n)).graph
    report = dense_spectrum(adjacency_matrix(graph), graph_ref=f"kkn k={k} n={n}")
    return make_check("kkn_lower_bound", -4.0 * k, report.lambda_min)


def main_construction_bound(k: int, count: int) -> tuple[BoundCheck, SpectralReport]:
    """
    Assemble the chained `K_{k,n}`, `n = 1..count`, and check `λ_min >= −4k − M`.

    Returns
    -------
    tuple[BoundCheck, SpectralReport]
        The `main_construction_lower` check and the extremal spectrum, whose
        `λ_max` documents growth with `count`.
    """

    plan = main_construction_plan(k, count)
    graph = surgery(plan).graph
    report = auto_extremal(adjacency_matrix(graph), graph_ref=f"chained kkn k={k} N={count}")
    check = make_check("main_construction_lower", -4.0 * k - plan.row_bound, report.lambda_min)
    return check, report


def regular_graph_identity_check(g: FiniteGraph) -> BoundCheck:
    """
    Check `σ(A) = d − σ(L)` on a `d`-regular graph with unit weights.

    Returns
    -------
    BoundCheck
        `regular_identity` with `lhs` the largest deviation between the
        sorted spectra and `rhs = 0`.

    Raises
    ------
    GraphDomainError
        If the graph is empty, not regular, or carries non-unit weights.
    """

    if g.vertex_count == 0:
        raise GraphDomainError("the empty graph has no degree")
    degrees = {len(row) for row in g.adjacency}
    if len(degrees) != 1:
        raise GraphDomainError(f"graph is not regular; degrees {sorted(degrees)}")
    if any(w != 1.0 for _, _, w in g.edges):
        raise GraphDomainError("regular identity requires unit weights")
    d = degrees.pop()
    adjacency = np.asarray(dense_spectrum(adjacency_matrix(g)).eigenvalues)
    laplacian = np.asarray(dense_spectrum(laplacian_matrix(g)).eigenvalues)
    deviation = float(np.max(np.abs(np.sort(d - laplacian) - adjacency)))
    return make_check("regular_identity", deviation, 0.0)
