"""
Purpose
-------
Numerical evidence of ℓ²-summability for a sequence `|f(n)|²`: Cauchy
stabilization of partial sums and a fitted polynomial decay exponent with a
confidence interval.

Key behaviors
-------------
- `partial_l2(values)`: cumulative `Σ_{m <= n} |f(m)|²`.
- `cauchy_stabilization_index(partial, tol)`: first index after which every
  increment stays below `tol`, or None when the last increment is above it.
- `fit_decay_exponent(n, y)`: ordinary least squares of `log y` on `log n`
  over the tail (`scipy.stats.linregress`), with a Student t interval
  (`scipy.stats.t`).
- `tail_diagnostic(...)` bundles both into a `TailDiagnostic`.

Conventions
-----------
- Zero entries are dropped before the log-log fit.
- A fit with fewer than `FIT_MIN_POINTS` points reports NaN for the exponent
  and its interval.
- Nothing here claims membership in ℓ²; the diagnostics are consistency
  evidence.

Downstream usage
----------------
`DeficiencySolution.tail` and the deficiency CSV/JSON outputs.
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np
import numpy.typing as npt
from scipy import stats

from deficiency.deficiency_config import (
    CAUCHY_INCREMENT_TOL,
    FIT_CONFIDENCE,
    FIT_MIN_POINTS,
    FIT_TAIL_FRACTION,
)


@dataclass(frozen=True)
class DecayFit:
    """Slope of `log y` against `log n` with its confidence interval."""

    exponent: float
    ci_low: float
    ci_high: float
    confidence: float
    points: int


@dataclass(frozen=True)
class TailDiagnostic:
    """
    Purpose
    -------
    Summability evidence for one solution.

    Parameters
    ----------
    fit : DecayFit
        Fitted decay exponent of `|f(n)|²` (or of the level values for the
        F-tree).
    stabilization_index : int | None
        First index after which all partial-sum increments are below
        `cauchy_tol`; None if the sequence has not stabilized in the window.
    cauchy_tol : float
        Increment tolerance used.
    comparison_partial_sums : tuple[float, ...]
        Partial sums of a comparison series (F-tree: `Σ 1/(d(p)−1)` over
        levels); empty when not applicable.
    """

    fit: DecayFit
    stabilization_index: int | None
    cauchy_tol: float
    comparison_partial_sums: tuple[float, ...] = ()


def partial_l2(values: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """Return the cumulative sums of `|f|²`."""
    return np.cumsum(np.abs(np.asarray(values)) ** 2)


def cauchy_stabilization_index(
    partial: npt.ArrayLike, tol: float = CAUCHY_INCREMENT_TOL
) -> int | None:
    """
    Return the smallest `N` with every increment `partial[m] − partial[m−1] < tol`
    for `m > N`.

    Returns
    -------
    int | None
        `N`, or None when the final increment is still `>= tol`.
    """

    arr = np.asarray(partial, dtype=np.float64)
    increments = np.diff(arr)
    if increments.size == 0:
        return 0
    large = np.nonzero(increments >= tol)[0]
    if large.size == 0:
        return 0
    last = int(large[-1]) + 1
    return None if last == increments.size else last


def fit_decay_exponent(
    n: Sequence[float] | npt.NDArray[np.float64],
    y: Sequence[float] | npt.NDArray[np.float64],
    tail_fraction: float = FIT_TAIL_FRACTION,
    confidence: float = FIT_CONFIDENCE,
) -> DecayFit:
    """
    Fit `y ≈ c·n^exponent` on the last `tail_fraction` of the positive points.

    Parameters
    ----------
    n, y : array-like
        Abscissae (positive) and values.
    tail_fraction : float
        Fraction of the positive points, counted from the end, used for the fit.
    confidence : float
        Two-sided confidence level of the interval.

    Returns
    -------
    DecayFit
        Slope and interval; NaN when fewer than `FIT_MIN_POINTS` points remain.
    """

    xs = np.asarray(n, dtype=np.float64)
    ys = np.asarray(y, dtype=np.float64)
    keep = (xs > 0) & (ys > 0)
    xs, ys = xs[keep], ys[keep]
    start = int(len(xs) * (1.0 - tail_fraction))
    xs, ys = xs[start:], ys[start:]
    if len(xs) < FIT_MIN_POINTS or np.ptp(np.log(xs)) == 0:
        nan = float("nan")
        return DecayFit(nan, nan, nan, confidence, int(len(xs)))
    result = stats.linregress(np.log(xs), np.log(ys))
    quantile = stats.t.ppf(0.5 + confidence / 2.0, df=len(xs) - 2)
    half_width = float(quantile * result.stderr)
    slope = float(result.slope)
    return DecayFit(slope, slope - half_width, slope + half_width, confidence, int(len(xs)))


def tail_diagnostic(
    n: Sequence[float] | npt.NDArray[np.float64],
    y: Sequence[float] | npt.NDArray[np.float64],
    partial: npt.ArrayLike,
    cauchy_tol: float = CAUCHY_INCREMENT_TOL,
    comparison: Sequence[float] = (),
) -> TailDiagnostic:
    """Bundle a decay fit, the stabilization index and a comparison series."""
    return TailDiagnostic(
        fit=fit_decay_exponent(n, y),
        stabilization_index=cauchy_stabilization_index(partial, cauchy_tol),
        cauchy_tol=cauchy_tol,
        comparison_partial_sums=tuple(float(v) for v in comparison),
    )
