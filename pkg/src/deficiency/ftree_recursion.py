"""
Purpose
-------
Solve `A*f = i f` on a window of the F-tree level by level, with `f`
constant on every children interval `[F(n), F(n+1))`.

Key behaviors
-------------
- Root: the children of 0 share the value `c_0 = i f(0) / d(0)`, read off
  from `Σ_{children} f = i f(0)` (the parent term vanishes at the root).
- Level `n >= 1`: `c_n = (i f(n) − f(n′)) / (d(n) − 1)` where `n′` is the
  parent of `n`; every child of `n` inside the window receives `c_n`.
- Windows up to `EXACT_ARITHMETIC_VERTEX_CAP` vertices are solved over the
  Gaussian rationals, so residuals on determined vertices are exactly 0;
  larger windows run in complex floats and report their float residuals.

Conventions
-----------
- A vertex is determined when all of its children lie in the window; its
  residual `|f(n′) + Σ_children f − i f(n)|` is then recorded.
- The decay fit uses the level values `|c_p|²` against `p >= 1`; the
  comparison series is the partial sums of `Σ_p 1/(d(p)−1)` over the solved
  levels.
- Only the tree is solved; the chain-connected variant differs from it by a
  perturbation of norm at most 2.

Downstream usage
----------------
CLI `deficiency --family ftree` and criterion 12 of the verify suite.
"""

import numpy as np

from deficiency.deficiency_config import CAUCHY_INCREMENT_TOL, EXACT_ARITHMETIC_VERTEX_CAP
from deficiency.deficiency_solution import DeficiencySolution
from deficiency.gaussian_rationals import ZERO, GaussianRational, exact_sum, from_complex
from deficiency.tail_diagnostics import partial_l2, tail_diagnostic
from graphs.generators.param_checks import require_int, require_real
from graphs.generators.trees import f_tree, f_tree_parent, f_tree_start
from graphs.graph_core.graph_errors import GraphDomainError


def _solve_exact(
    alpha: float, window: int, f0: complex
) -> tuple[list[GaussianRational], list[GaussianRational], list[int], list[float]]:
    values: list[GaussianRational] = [ZERO] * window
    values[0] = from_complex(f0)
    levels: list[GaussianRational] = []
    counts: list[int] = []
    residuals = [float("nan")] * window
    n = 0
    while (start := f_tree_start(alpha, n)) < window:
        stop = f_tree_start(alpha, n + 1)
        parent_value = values[f_tree_parent(alpha, n)] if n >= 1 else ZERO
        c = (values[n].times_i() - parent_value).divide(stop - start)
        values[start : min(stop, window)] = [c] * (min(stop, window) - start)
        if stop <= window:
            lhs = parent_value + exact_sum(values[start:stop])
            residuals[n] = float((lhs - values[n].times_i()).abs_sq()) ** 0.5
        levels.append(c)
        counts.append(stop - start)
        n += 1
    return values, levels, counts, residuals


def _solve_float(
    alpha: float, window: int, f0: complex
) -> tuple[np.ndarray, list[complex], list[int], np.ndarray]:
    values = np.zeros(window, dtype=np.complex128)
    values[0] = f0
    levels: list[complex] = []
    counts: list[int] = []
    residuals = np.full(window, np.nan)
    n = 0
    while (start := f_tree_start(alpha, n)) < window:
        stop = f_tree_start(alpha, n + 1)
        parent_value = values[f_tree_parent(alpha, n)] if n >= 1 else 0.0
        c = (1j * values[n] - parent_value) / (stop - start)
        values[start : min(stop, window)] = c
        if stop <= window:
            lhs = parent_value + values[start:stop].sum()
            residuals[n] = abs(lhs - 1j * values[n])
        levels.append(complex(c))
        counts.append(stop - start)
        n += 1
    return values, levels, counts, residuals


def f_tree_deficiency_vector(
    alpha: float,
    window: int,
    f0: complex = 1.0 + 0.0j,
    cauchy_tol: float = CAUCHY_INCREMENT_TOL,
    exact_cap: int = EXACT_ARITHMETIC_VERTEX_CAP,
) -> DeficiencySolution:
    """
    Construct the constant-on-children solution of `A*f = i f` on the F-tree.

    Parameters
    ----------
    alpha : float
        F-tree exponent, `> 0`.
    window : int
        Number of vertices `0..window−1`; must exceed `F(1)` so that every
        child of the root is inside and interior.
    f0 : complex
        Value at the root, non-zero.
    cauchy_tol : float
        Increment tolerance of the stabilization index.
    exact_cap : int
        Largest window solved in exact arithmetic.

    Returns
    -------
    DeficiencySolution
        Values, residuals on determined vertices, partial sums, level counts
        and tail diagnostic.

    Raises
    ------
    GraphDomainError
        On invalid `alpha` or `window`, `f0 == 0`, or a window too small to
        determine the first level.
    """

    require_real("alpha", alpha, 0.0)
    require_int("window", window, 2)
    if f0 == 0:
        raise GraphDomainError("f0 must be non-zero")
    first_level_end = f_tree_start(alpha, 1)
    if window <= first_level_end:
        raise GraphDomainError(
            f"window {window} does not determine any level; it must exceed F(1) = "
            f"{first_level_end}"
        )

    exact = window <= exact_cap
    if exact:
        exact_values, exact_levels, counts, residual_list = _solve_exact(alpha, window, f0)
        values = np.array([v.to_complex() for v in exact_values], dtype=np.complex128)
        level_sq = np.array([float(c.abs_sq()) for c in exact_levels])
        residuals = np.array(residual_list, dtype=np.float64)
        stored: tuple[GaussianRational, ...] | None = tuple(exact_values)
    else:
        values, float_levels, counts, residuals = _solve_float(alpha, window, f0)
        level_sq = np.abs(np.array(float_levels)) ** 2
        stored = None

    partial = partial_l2(values)
    level_index = np.arange(len(counts), dtype=np.float64)
    comparison = np.cumsum(1.0 / np.array(counts, dtype=np.float64))
    return DeficiencySolution(
        family=f_tree(alpha, window - 1),
        window=window,
        values=values,
        residuals=residuals,
        partial_l2=partial,
        tail=tail_diagnostic(level_index[1:], level_sq[1:], partial, cauchy_tol, comparison),
        arithmetic="exact" if exact else "float",
        exact_values=stored,
        level_counts=tuple(counts),
    )
