"""
Purpose
-------
Compute full (dense) or extremal (iterative) spectra of symmetric operators
and return residual-checked `SpectralReport`s.

Key behaviors
-------------
- `dense_spectrum`: all eigenvalues via `numpy.linalg.eigh`, sorted
  ascending, for dimensions up to `DENSE_DIMENSION_CAP`.
- `extremal_eigenvalues`: `λ_min` and/or `λ_max` via implicitly restarted
  Lanczos (`scipy.sparse.linalg.eigsh`, one call per end of the spectrum)
  with a deterministic start vector.
- `spectral_report`: dispatch on the CLI method name (`dense` / `iter`).
- Every reported pair is re-checked: `‖Av − λv‖ <= tol · ‖A‖_∞`.

Conventions
-----------
- `‖A‖_∞` of a zero operator is replaced by 1 for residual scaling.
- Operators of dimension `<= SMALL_DIMENSION_FALLBACK` are solved densely even
  when the iterative method is requested; the report states the method
  actually used.

Downstream usage
----------------
Bound checks, unboundedness scans, the CLI `spectrum` subcommand and the
verify suite.
"""

from dataclasses import dataclass
from typing import Literal

import numpy as np
import numpy.typing as npt
from scipy.sparse.linalg import ArpackNoConvergence, eigsh

from graphs.graph_core.graph_errors import ConstructionError, GraphDomainError, NonConvergenceError
from spectral.operators import SymmetricOperator, operator_inf_norm
from spectral.spectral_config import (
    DENSE_DIMENSION_CAP,
    DENSE_TOL,
    ITERATIVE_MAX_ITER,
    ITERATIVE_TOL,
    SMALL_DIMENSION_FALLBACK,
    START_VECTOR_PERTURBATION,
    START_VECTOR_SEED,
)

Which = Literal["min", "max", "both"]


@dataclass(frozen=True)
class SpectralReport:
    """
    Purpose
    -------
    Eigenvalues of one operator together with the evidence that they are
    accurate.

    Parameters
    ----------
    eigenvalues : tuple[float, ...]
        Ascending. All eigenvalues for `scope="all"`, otherwise the requested
        extremal ones (`(λ_min,)`, `(λ_max,)` or `(λ_min, λ_max)`).
    method : str
        `"dense"` or `"iterative"`.
    scope : str
        `"all"`, `"min"`, `"max"` or `"both"`.
    residual_norms : tuple[float, ...]
        `‖Av − λv‖` per reported eigenvalue, same order.
    tolerance : float
        Relative residual tolerance that was enforced.
    inf_norm : float
        `‖A‖_∞` of the operator.
    graph_ref : str
        Free-form provenance of the operator (family, window, file).
    """

    eigenvalues: tuple[float, ...]
    method: str
    scope: str
    residual_norms: tuple[float, ...]
    tolerance: float
    inf_norm: float
    graph_ref: str = ""

    @property
    def lambda_min(self) -> float:
        if self.scope == "max" or not self.eigenvalues:
            raise GraphDomainError(f"report with scope {self.scope!r} carries no λ_min")
        return self.eigenvalues[0]

    @property
    def lambda_max(self) -> float:
        if self.scope == "min" or not self.eigenvalues:
            raise GraphDomainError(f"report with scope {self.scope!r} carries no λ_max")
        return self.eigenvalues[-1]

    @property
    def max_residual(self) -> float:
        return max(self.residual_norms, default=0.0)


def _residual_scale(op: SymmetricOperator) -> float:
    norm = operator_inf_norm(op)
    return norm if norm > 0 else 1.0


def _residuals(
    op: SymmetricOperator, values: npt.NDArray[np.float64], vectors: npt.NDArray[np.float64]
) -> npt.NDArray[np.float64]:
    diff = op.matrix @ vectors - vectors * values
    return np.linalg.norm(diff, axis=0) / np.linalg.norm(vectors, axis=0)


def dense_spectrum(
    op: SymmetricOperator,
    tol: float = DENSE_TOL,
    cap: int = DENSE_DIMENSION_CAP,
    graph_ref: str = "",
) -> SpectralReport:
    """
    Compute every eigenvalue of `op`.

    Parameters
    ----------
    op : SymmetricOperator
        Operator to diagonalize.
    tol : float
        Relative residual tolerance.
    cap : int
        Largest admissible dimension.
    graph_ref : str
        Provenance carried into the report.

    Returns
    -------
    SpectralReport
        `scope="all"`, eigenvalues ascending.

    Raises
    ------
    ConstructionError
        If the dimension exceeds `cap`; use `extremal_eigenvalues` instead.
    NonConvergenceError
        If a residual exceeds `tol · ‖A‖_∞`.
    """

    if op.dimension > cap:
        raise ConstructionError(
            f"dimension {op.dimension} exceeds the dense cap {cap}; "
            "use the iterative method (extremal eigenvalues) instead"
        )
    inf_norm = operator_inf_norm(op)
    if op.dimension == 0:
        return SpectralReport((), "dense", "all", (), tol, inf_norm, graph_ref)
    values, vectors = np.linalg.eigh(op.to_dense())
    residuals = _residuals(op, values, vectors)
    worst = float(np.max(residuals))
    if worst > tol * _residual_scale(op):
        raise NonConvergenceError(
            f"dense eigensolve residual {worst:.3e} exceeds {tol:.1e} · ‖A‖_∞", worst, 0
        )
    return SpectralReport(
        eigenvalues=tuple(float(v) for v in values),
        method="dense",
        scope="all",
        residual_norms=tuple(float(r) for r in residuals),
        tolerance=tol,
        inf_norm=inf_norm,
        graph_ref=graph_ref,
    )


def start_vector(dimension: int, seed: int = START_VECTOR_SEED) -> npt.NDArray[np.float64]:
    """Return the normalized all-ones vector plus a small seeded perturbation."""
    rng = np.random.default_rng(seed)
    vec = np.ones(dimension) + START_VECTOR_PERTURBATION * rng.standard_normal(dimension)
    return vec / np.linalg.norm(vec)


def _lanczos_end(
    op: SymmetricOperator, end: str, tol: float, max_iter: int
) -> tuple[float, float]:
    scale = _residual_scale(op)
    try:
        values, vectors = eigsh(
            op.matrix,
            k=1,
            which=end,
            v0=start_vector(op.dimension),
            tol=tol * 0.1,
            maxiter=max_iter,
        )
    except ArpackNoConvergence as exc:
        last = float("nan")
        if len(exc.eigenvalues):
            last = float(np.max(_residuals(op, exc.eigenvalues, exc.eigenvectors)))
        raise NonConvergenceError(
            f"Lanczos ({end}) did not converge in {max_iter} iterations; "
            f"last residual {last:.3e}",
            last,
            max_iter,
        ) from exc
    residual = float(_residuals(op, values, vectors)[0])
    if residual > tol * scale:
        raise NonConvergenceError(
            f"Lanczos ({end}) residual {residual:.3e} exceeds {tol:.1e} · ‖A‖_∞ = "
            f"{tol * scale:.3e}",
            residual,
            max_iter,
        )
    return float(values[0]), residual


def extremal_eigenvalues(
    op: SymmetricOperator,
    which: Which = "both",
    tol: float = ITERATIVE_TOL,
    max_iter: int = ITERATIVE_MAX_ITER,
    graph_ref: str = "",
) -> SpectralReport:
    """
    Compute `λ_min`, `λ_max` or both.

    Parameters
    ----------
    op : SymmetricOperator
        Operator of dimension `>= 2`.
    which : {"min", "max", "both"}
        Requested end(s) of the spectrum.
    tol : float
        Relative residual tolerance.
    max_iter : int
        ARPACK iteration cap per end.
    graph_ref : str
        Provenance carried into the report.

    Returns
    -------
    SpectralReport
        `scope=which`; eigenvalues ascending.

    Raises
    ------
    GraphDomainError
        If the dimension is below 2 or `which` is unknown.
    NonConvergenceError
        On ARPACK non-convergence or a residual above `tol · ‖A‖_∞`; the
        exception carries the last residual.
    """

    if which not in ("min", "max", "both"):
        raise GraphDomainError(f"which must be 'min', 'max' or 'both', got {which!r}")
    if op.dimension < 2:
        raise GraphDomainError(f"extremal eigenvalues need dimension >= 2, got {op.dimension}")
    ends = {"min": ["SA"], "max": ["LA"], "both": ["SA", "LA"]}[which]

    if op.dimension <= SMALL_DIMENSION_FALLBACK:
        full = dense_spectrum(op, tol=tol, graph_ref=graph_ref)
        picks = [0 if end == "SA" else -1 for end in ends]
        return SpectralReport(
            eigenvalues=tuple(full.eigenvalues[p] for p in picks),
            method="dense",
            scope=which,
            residual_norms=tuple(full.residual_norms[p] for p in picks),
            tolerance=tol,
            inf_norm=full.inf_norm,
            graph_ref=graph_ref,
        )

    solved = [_lanczos_end(op, end, tol, max_iter) for end in ends]
    return SpectralReport(
        eigenvalues=tuple(value for value, _ in solved),
        method="iterative",
        scope=which,
        residual_norms=tuple(residual for _, residual in solved),
        tolerance=tol,
        inf_norm=operator_inf_norm(op),
        graph_ref=graph_ref,
    )


def spectral_report(
    op: SymmetricOperator,
    method: str = "dense",
    extremal: bool = False,
    tol: float | None = None,
    graph_ref: str = "",
) -> SpectralReport:
    """
    Run the solver named by the CLI.

    Parameters
    ----------
    op : SymmetricOperator
        Operator to solve.
    method : str
        `"dense"` or `"iter"`.
    extremal : bool
        With `"dense"`, keep only `(λ_min, λ_max)`; `"iter"` is always extremal.
    tol : float | None
        Residual tolerance; defaults to the method's configured tolerance.
    graph_ref : str
        Provenance carried into the report.

    Raises
    ------
    GraphDomainError
        On an unknown method.
    """

    if method == "dense":
        report = dense_spectrum(op, tol=DENSE_TOL if tol is None else tol, graph_ref=graph_ref)
        if not extremal or len(report.eigenvalues) < 2:
            return report
        return SpectralReport(
            eigenvalues=(report.eigenvalues[0], report.eigenvalues[-1]),
            method="dense",
            scope="both",
            residual_norms=(report.residual_norms[0], report.residual_norms[-1]),
            tolerance=report.tolerance,
            inf_norm=report.inf_norm,
            graph_ref=graph_ref,
        )
    if method == "iter":
        return extremal_eigenvalues(
            op, "both", tol=ITERATIVE_TOL if tol is None else tol, graph_ref=graph_ref
        )
    raise GraphDomainError(f"unknown method {method!r}; expected 'dense' or 'iter'")


def auto_extremal(
    op: SymmetricOperator, graph_ref: str = "", iterative_tol: float = ITERATIVE_TOL
) -> SpectralReport:
    """Return `(λ_min, λ_max)`, dense up to `DENSE_DIMENSION_CAP`, iterative above."""
    if op.dimension <= DENSE_DIMENSION_CAP:
        return spectral_report(op, "dense", extremal=True, graph_ref=graph_ref)
    return extremal_eigenvalues(op, "both", tol=iterative_tol, graph_ref=graph_ref)
