"""
Purpose
-------
Forward solve of `a_{n−1} f(n−1) + a_n f(n+1) = i f(n)` on the Jacobi chain
with `a_n = n^(1+α)`, starting from `f(1)`.

Key behaviors
-------------
- `f(2) = i f(1) / a_1`; for `n >= 2`
  `f(n+1) = i f(n)·a_n⁻¹ − (a_{n−1}/a_n)·f(n−1)`.
- Scaled arithmetic: only `a_n⁻¹ = exp(−(1+α) log n)` and
  `a_{n−1}/a_n = exp((1+α) log1p(−1/n))` are formed, never `a_n`, so long
  chains with large `α` do not overflow.
- `stabilization_sweep(alphas, length, tol)` tabulates the Cauchy
  stabilization index and decay exponent across `α`.

Conventions
-----------
- Window vertex `v` carries label `n = v + 1`; the last vertex is
  undetermined (its equation needs `f(length + 1)`).
- Residuals are evaluated in the scaled form and multiplied back by `a_n`.

Downstream usage
----------------
CLI `deficiency --family jacobi`; the Jacobi row of the verify report.
"""

from typing import Sequence

import numpy as np
import pandas as pd

from deficiency.deficiency_config import CAUCHY_INCREMENT_TOL, JACOBI_DEFAULT_LENGTH
from deficiency.deficiency_solution import DeficiencySolution
from deficiency.tail_diagnostics import partial_l2, tail_diagnostic
from graphs.generators.jacobi_chain import jacobi_chain
from graphs.generators.param_checks import require_int, require_real
from graphs.graph_core.graph_errors import GraphDomainError

SWEEP_COLUMNS: list[str] = ["alpha", "stabilization_index", "exponent", "ci_low", "ci_high"]


def jacobi_deficiency_vector(
    alpha: float,
    length: int = JACOBI_DEFAULT_LENGTH,
    f1: complex = 1.0 + 0.0j,
    cauchy_tol: float = CAUCHY_INCREMENT_TOL,
) -> DeficiencySolution:
    """
    Solve `A*f = i f` forward along the Jacobi chain.

    Parameters
    ----------
    alpha : float
        Weight exponent, `> 0`.
    length : int
        Number of labels `1..length`, `>= 3`.
    f1 : complex
        Starting value, non-zero.
    cauchy_tol : float
        Increment tolerance of the stabilization index.

    Returns
    -------
    DeficiencySolution
        Scaled-float solution with residuals on labels `1..length−1`.

    Raises
    ------
    GraphDomainError
        On invalid parameters or `f1 == 0`.
    """

    require_real("alpha", alpha, 0.0)
    require_int("length", length, 3)
    if f1 == 0:
        raise GraphDomainError("f1 must be non-zero")

    power = 1.0 + alpha
    labels = np.arange(1, length + 1, dtype=np.float64)
    inv_a = np.exp(-power * np.log(labels))
    back = np.zeros(length)
    back[1:] = np.exp(power * np.log1p(-1.0 / labels[1:]))

    f = np.zeros(length, dtype=np.complex128)
    f[0] = f1
    f[1] = 1j * f1 * inv_a[0]
    for v in range(1, length - 1):
        f[v + 1] = 1j * f[v] * inv_a[v] - back[v] * f[v - 1]

    residuals = np.full(length, np.nan)
    previous = np.concatenate([[0.0], f[: length - 2]])
    scaled = back[: length - 1] * previous + f[1:] - 1j * f[: length - 1] * inv_a[: length - 1]
    residuals[: length - 1] = np.abs(scaled) / inv_a[: length - 1]

    partial = partial_l2(f)
    return DeficiencySolution(
        family=jacobi_chain(alpha, length),
        window=length,
        values=f,
        residuals=residuals,
        partial_l2=partial,
        tail=tail_diagnostic(labels, np.abs(f) ** 2, partial, cauchy_tol),
        arithmetic="scaled-float",
        index_offset=1,
    )


def stabilization_sweep(
    alphas: Sequence[float],
    length: int = JACOBI_DEFAULT_LENGTH,
    tol: float = CAUCHY_INCREMENT_TOL,
) -> pd.DataFrame:
    """Tabulate stabilization index and fitted exponent for each `α` (N/A as NaN)."""
    rows = []
    for alpha in alphas:
        tail = jacobi_deficiency_vector(alpha, length, cauchy_tol=tol).tail
        index = tail.stabilization_index
        rows.append(
            {
                "alpha": alpha,
                "stabilization_index": float("nan") if index is None else index,
                "exponent": tail.fit.exponent,
                "ci_low": tail.fit.ci_low,
                "ci_high": tail.fit.ci_high,
            }
        )
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)
