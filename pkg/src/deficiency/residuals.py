"""
Purpose
-------
Verify candidate solutions of `A*f = i f` against a truncation, and check
the F-tree partial sums against the per-vertex and tail estimates of the
summability argument.

Key behaviors
-------------
- `deficiency_residual_check(sol, truncation)`: evaluates
  `|Σ_y E(x,y) f(y) − i f(x)|` at every interior vertex of the truncation;
  exact over the Gaussian rationals when the solution carries exact values.
- `ftree_increment_bound_check(sol)`: every increment `|f(m)|²` is at most
  `4‖f‖_∞² / c(p)²` where `p` is the parent of `m` and `c(p)` its children
  count; every window tail from level `P` on is at most
  `4‖f‖_∞² Σ_{p >= P} 1/c(p)`.

Conventions
-----------
- The relative residual divides by the local term scale
  `max(|f(x)|, Σ_y E(x,y)|f(y)|)` (1 where that scale is 0).
- Increment checks are ratios reported against 1.

Downstream usage
----------------
CLI `deficiency --check` and criterion 12 of the verify suite.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from deficiency.deficiency_solution import DeficiencySolution
from deficiency.gaussian_rationals import ZERO
from graphs.generators.trees import f_tree_start
from graphs.graph_core.graph_errors import GraphDomainError
from graphs.graph_core.graph_family import Truncation
from spectral.bound_checks import BoundCheck, make_check


@dataclass(frozen=True)
class ResidualReport:
    """Largest interior residual of a candidate solution."""

    max_residual: float
    max_relative: float
    vertex: int | None
    evaluated: int


def deficiency_residual_check(sol: DeficiencySolution, truncation: Truncation) -> ResidualReport:
    """
    Evaluate `A*f − i f` at the interior vertices of `truncation`.

    Parameters
    ----------
    sol : DeficiencySolution
        Candidate solution indexed by the truncation's vertices.
    truncation : Truncation
        Window of the same family with `order == sol.window`.

    Returns
    -------
    ResidualReport
        Maximum absolute and relative residual and where it occurs.

    Raises
    ------
    GraphDomainError
        If the window orders or family names differ.
    """

    if truncation.order != sol.window:
        raise GraphDomainError(
            f"solution has {sol.window} entries but the truncation has {truncation.order} vertices"
        )
    if truncation.source.name != sol.family.name:
        raise GraphDomainError(
            f"solution belongs to family {sol.family.name!r}, "
            f"truncation to {truncation.source.name!r}"
        )

    g = truncation.graph
    worst, worst_rel, where = 0.0, 0.0, None
    interior = truncation.interior_vertices()
    for x in interior:
        if sol.exact_values is not None:
            exact = sol.exact_values
            total = ZERO
            for y, w in g.adjacency[x]:
                total = total + exact[y].scale(Fraction(w))
            residual = float((total - exact[x].times_i()).abs_sq()) ** 0.5
        else:
            total_f = sum((w * sol.values[y] for y, w in g.adjacency[x]), 0j)
            residual = abs(total_f - 1j * sol.values[x])
        scale = max(
            abs(sol.values[x]), sum(w * abs(sol.values[y]) for y, w in g.adjacency[x])
        )
        relative = residual / scale if scale > 0 else residual
        if residual > worst or where is None:
            worst, where = residual, x
        worst_rel = max(worst_rel, relative)
    return ResidualReport(
        max_residual=float(worst),
        max_relative=float(worst_rel),
        vertex=where,
        evaluated=len(interior),
    )


def ftree_increment_bound_check(sol: DeficiencySolution) -> tuple[BoundCheck, BoundCheck]:
    """
    Check the F-tree partial sums against the per-vertex and tail estimates.

    Returns
    -------
    tuple[BoundCheck, BoundCheck]
        `ftree_increment` (worst ratio of `|f(m)|²` to its bound) and
        `ftree_tail` (worst ratio of a window tail to its bound), each
        against 1.

    Raises
    ------
    GraphDomainError
        If `sol` was not produced by the F-tree recursion.
    """

    if sol.family.name != "ftree" or not sol.level_counts:
        raise GraphDomainError("increment bounds apply to F-tree recursion output only")
    alpha = float(sol.family.params["alpha"])
    sup_sq = sol.sup_norm**2
    squares = np.abs(sol.values) ** 2
    counts = np.array(sol.level_counts, dtype=np.float64)
    tails_of_reciprocals = np.cumsum((1.0 / counts)[::-1])[::-1]

    worst_increment, worst_vertex = 0.0, None
    worst_tail, worst_level = 0.0, None
    for p, count in enumerate(counts):
        start = f_tree_start(alpha, p)
        stop = min(f_tree_start(alpha, p + 1), sol.window)
        block = squares[start:stop]
        if block.size:
            ratio = float(block.max()) * count**2 / (4.0 * sup_sq)
            if ratio > worst_increment or worst_vertex is None:
                worst_increment = ratio
                worst_vertex = start + int(block.argmax())
        tail = float(squares[start:].sum())
        tail_ratio = tail / (4.0 * sup_sq * float(tails_of_reciprocals[p]))
        if tail_ratio > worst_tail or worst_level is None:
            worst_tail, worst_level = tail_ratio, p
    return (
        make_check("ftree_increment", worst_increment, 1.0, vertex=worst_vertex),
        make_check("ftree_tail", worst_tail, 1.0, vertex=worst_level),
    )
