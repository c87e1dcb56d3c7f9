"""
Purpose
-------
Track the extremal eigenvalues of nested truncations of a family, giving
monotone two-sided enclosures of the spectrum bounds of any self-adjoint
extension.

Key behaviors
-------------
- `unboundedness_scan(family, sizes)` truncates at each size, solves for
  `λ_min` and `λ_max` (dense up to the dense cap, Lanczos above) and records
  the size-indexed lower bounds `sup_sigma_sq = max(λ_min², λ_max²)` and
  `sup_row_sq = sup_x Σ_y E(x,y)²`.
- `enclosure_violations(frame)` lists rows where `λ_max` decreases or
  `λ_min` increases beyond tolerance.

Conventions
-----------
- Sizes must be strictly increasing; each window contains the previous one,
  so by interlacing `λ_max` is nondecreasing and `λ_min` nonincreasing.
- Every row is a certificate `[λ_min, λ_max] ⊆ [inf σ, sup σ]`; nothing is
  reported as a limit.

Downstream usage
----------------
CLI `spectrum` over a family and the word-tree / main-construction criteria of
the verify suite.
"""

from typing import Iterable

import pandas as pd

from graphs.graph_core.graph_errors import GraphDomainError
from graphs.graph_core.graph_family import GraphFamily, truncate
from infra.logging.infra_logger import InfraLogger
from spectral.eigensolvers import auto_extremal
from spectral.operators import adjacency_matrix
from spectral.spectral_config import ITERATIVE_TOL, SLACK_ABS, SLACK_REL

SCAN_COLUMNS: list[str] = [
    "size",
    "lambda_min",
    "lambda_max",
    "sup_sigma_sq",
    "sup_row_sq",
    "method",
    "max_residual",
]


def unboundedness_scan(
    family: GraphFamily,
    sizes: Iterable[int],
    logger: InfraLogger | None = None,
    iterative_tol: float = ITERATIVE_TOL,
) -> pd.DataFrame:
    """
    Compute `(size, λ_min, λ_max)` over increasing truncations.

    Parameters
    ----------
    family : GraphFamily
        Family to scan.
    sizes : Iterable[int]
        Strictly increasing window sizes.
    logger : InfraLogger | None
        Receives one `scan_row` event per size.
    iterative_tol : float
        Residual tolerance of windows above the dense cap.

    Returns
    -------
    pandas.DataFrame
        Columns `SCAN_COLUMNS`, one row per size.

    Raises
    ------
    GraphDomainError
        If `sizes` is empty or not strictly increasing, or a size is below 2.
    NonConvergenceError
        If an iterative solve fails.
    """

    ordered = list(sizes)
    if not ordered:
        raise GraphDomainError("scan needs at least one size")
    if any(b <= a for a, b in zip(ordered, ordered[1:])):
        raise GraphDomainError(f"scan sizes must be strictly increasing, got {ordered}")
    if ordered[0] < 2:
        raise GraphDomainError(f"scan sizes must be at least 2, got {ordered[0]}")

    rows = []
    for size in ordered:
        graph = truncate(family, size).graph
        report = auto_extremal(
            adjacency_matrix(graph),
            graph_ref=f"{family.name} n={size}",
            iterative_tol=iterative_tol,
        )
        sup_row_sq = max((sum(w * w for _, w in row) for row in graph.adjacency), default=0.0)
        row = {
            "size": size,
            "lambda_min": report.lambda_min,
            "lambda_max": report.lambda_max,
            "sup_sigma_sq": max(report.lambda_min**2, report.lambda_max**2),
            "sup_row_sq": sup_row_sq,
            "method": report.method,
            "max_residual": report.max_residual,
        }
        rows.append(row)
        if logger is not None:
            logger.info("scan_row", f"{family.name} window {size} solved", row)
    return pd.DataFrame(rows, columns=SCAN_COLUMNS)


def enclosure_violations(frame: pd.DataFrame) -> list[str]:
    """
    Return one message per consecutive pair breaking enclosure monotonicity.

    Notes
    -----
    - A decrease of `λ_max` (or increase of `λ_min`) within
      `SLACK_ABS + SLACK_REL · |λ|` is tolerated.
    """

    violations: list[str] = []
    records = frame.to_dict("records")
    for before, after in zip(records, records[1:]):
        for column, sign in (("lambda_max", 1.0), ("lambda_min", -1.0)):
            drift = sign * (before[column] - after[column])
            if drift > SLACK_ABS + SLACK_REL * abs(before[column]):
                violations.append(
                    f"{column} moved inward from {before[column]} at size {before['size']} "
                    f"to {after[column]} at size {after['size']}"
                )
    return violations
