"""
Purpose
-------
Result type shared by the deficiency recursions: a candidate solution of
`A*f = i f` on a window, its residuals, partial ℓ² sums and tail diagnostic.

Key behaviors
-------------
- `DeficiencySolution.determined_vertices` lists the vertices whose equation
  lies entirely inside the window (finite residual entries).
- `solution_frame(sol)` renders the CSV rows `n,f_re,f_im,partial_l2,residual`.
- `candidate_solution(family, values)` wraps any vector for residual checks.

Conventions
-----------
- `values[v]` belongs to window vertex `v`; the CSV column `n` is
  `v + index_offset` so the Jacobi chain is printed with labels `1, 2, ...`.
- `residuals[v]` is NaN where the equation at `v` reaches outside the window.
- `exact_values` is set only when the recursion ran over the Gaussian
  rationals.

Downstream usage
----------------
Produced by `ftree_recursion` and `jacobi_recursion`; consumed by
`residuals`, the CLI `deficiency` subcommand and the verify suite.
"""

from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt
import pandas as pd

from deficiency.gaussian_rationals import GaussianRational
from deficiency.tail_diagnostics import TailDiagnostic, partial_l2, tail_diagnostic
from graphs.graph_core.graph_family import GraphFamily

SOLUTION_COLUMNS: list[str] = ["n", "f_re", "f_im", "partial_l2", "residual"]


@dataclass(frozen=True, eq=False)
class DeficiencySolution:
    """
    Purpose
    -------
    Candidate element of `ker(A* − i)` restricted to a window.

    Parameters
    ----------
    family : GraphFamily
        Family the recursion was solved on.
    window : int
        Number of window vertices.
    values : numpy.ndarray
        Complex values, length `window`.
    residuals : numpy.ndarray
        `|(A*f − i f)(v)|` per vertex, NaN where undetermined.
    partial_l2 : numpy.ndarray
        Cumulative `Σ_{m <= v} |f(m)|²`, nondecreasing.
    tail : TailDiagnostic
        Decay fit and stabilization evidence.
    arithmetic : str
        `"exact"`, `"float"` or `"scaled-float"`.
    index_offset : int
        Added to vertex indices in tabular output.
    exact_values : tuple[GaussianRational, ...] | None
        Exact values when `arithmetic == "exact"`.
    level_counts : tuple[int, ...]
        F-tree only: children count of each solved level `p` (`d(p) − 1`,
        or `d(0)` at the root).
    """

    family: GraphFamily
    window: int
    values: npt.NDArray[np.complex128]
    residuals: npt.NDArray[np.float64]
    partial_l2: npt.NDArray[np.float64]
    tail: TailDiagnostic
    arithmetic: str
    index_offset: int = 0
    exact_values: tuple[GaussianRational, ...] | None = field(default=None, repr=False)
    level_counts: tuple[int, ...] = ()

    @property
    def determined_vertices(self) -> list[int]:
        return [int(v) for v in np.nonzero(np.isfinite(self.residuals))[0]]

    @property
    def max_residual(self) -> float:
        finite = self.residuals[np.isfinite(self.residuals)]
        return float(finite.max()) if finite.size else 0.0

    @property
    def sup_norm(self) -> float:
        return float(np.abs(self.values).max())


def solution_frame(sol: DeficiencySolution) -> pd.DataFrame:
    """Return the CSV rows `n,f_re,f_im,partial_l2,residual`."""
    return pd.DataFrame(
        {
            "n": np.arange(sol.window) + sol.index_offset,
            "f_re": sol.values.real,
            "f_im": sol.values.imag,
            "partial_l2": sol.partial_l2,
            "residual": sol.residuals,
        },
        columns=SOLUTION_COLUMNS,
    )


def candidate_solution(
    family: GraphFamily, values: npt.ArrayLike, index_offset: int = 0
) -> DeficiencySolution:
    """
    Wrap an arbitrary vector as an unverified solution on `family`.

    Residuals are left undetermined; `deficiency_residual_check` evaluates
    them against a truncation.
    """

    arr = np.asarray(values, dtype=np.complex128)
    partial = partial_l2(arr)
    positions = np.arange(1, arr.size + 1, dtype=np.float64)
    return DeficiencySolution(
        family=family,
        window=int(arr.size),
        values=arr,
        residuals=np.full(arr.size, np.nan),
        partial_l2=partial,
        tail=tail_diagnostic(positions, np.abs(arr) ** 2, partial),
        arithmetic="float",
        index_offset=index_offset,
    )
