"""
Purpose
-------
Closed-form spectra of the finite families whose characteristic polynomials
factor explicitly.

Key behaviors
-------------
- `kkn_char_poly_roots(k, n)`: roots of the characteristic polynomial of
  `K_{k,n}`: the two roots of `λ² − (n−1)λ − nk`, `n − 1` with multiplicity
  `k − 1`, and `−1` with multiplicity `k(n − 1)`; `kn + 1` roots in total.
- `complete_graph_roots(n)` and `star_roots(n)` for `K_n` and `S_n`.
- `expand_multiset` flattens `(value, multiplicity)` pairs into a sorted
  array comparable with a dense spectrum.

Conventions
-----------
- Multisets are returned as ascending `(value, multiplicity)` tuples with
  zero multiplicities dropped and coinciding values merged.

Downstream usage
----------------
The verify suite compares these against `dense_spectrum`; the `−4k` lower
bound is read off the smaller quadratic root.
"""

import math

import numpy as np
import numpy.typing as npt

from graphs.generators.param_checks import require_int

Multiset = tuple[tuple[float, int], ...]

MERGE_TOL: float = 1e-12


def _merge(pairs: list[tuple[float, int]]) -> Multiset:
    merged: list[tuple[float, int]] = []
    for value, count in sorted(p for p in pairs if p[1] > 0):
        if merged and abs(merged[-1][0] - value) <= MERGE_TOL * max(1.0, abs(value)):
            merged[-1] = (merged[-1][0], merged[-1][1] + count)
        else:
            merged.append((value, count))
    return tuple(merged)


def kkn_quadratic_roots(k: int, n: int) -> tuple[float, float]:
    """Return the roots of `λ² − (n−1)λ − nk`, smaller first."""
    half = (n - 1) / 2.0
    radius = math.sqrt(half * half + n * k)
    return half - radius, half + radius


def kkn_char_poly_roots(k: int, n: int) -> Multiset:
    """
    Return the eigenvalue multiset of `K_{k,n}` from its factored
    characteristic polynomial.

    Parameters
    ----------
    k : int
        Number of clique copies, `>= 1`.
    n : int
        Clique size, `>= 1`.

    Returns
    -------
    tuple[tuple[float, int], ...]
        Ascending `(eigenvalue, multiplicity)` pairs; multiplicities sum to
        `kn + 1`.

    Raises
    ------
    GraphDomainError
        On invalid parameters.

    Notes
    -----
    - `k = 1, n = 2` gives `{−1: 2, 2: 1}` (the triangle).
    - `n = 1` gives `±√k` and `0` with multiplicity `k − 1` (the star `S_{k+1}`).
    """

    require_int("k", k, 1)
    require_int("n", n, 1)
    low, high = kkn_quadratic_roots(k, n)
    return _merge([(low, 1), (high, 1), (float(n - 1), k - 1), (-1.0, k * (n - 1))])


def complete_graph_roots(n: int) -> Multiset:
    """Return `{n − 1: 1, −1: n − 1}`, the spectrum of `K_n`."""
    require_int("n", n, 1)
    return _merge([(float(n - 1), 1), (-1.0, n - 1)])


def star_roots(n: int) -> Multiset:
    """Return `{±√(n−1): 1, 0: n − 2}`, the spectrum of the star of order `n`."""
    require_int("n", n, 2)
    root = math.sqrt(n - 1)
    return _merge([(-root, 1), (0.0, n - 2), (root, 1)])


def expand_multiset(roots: Multiset) -> npt.NDArray[np.float64]:
    """Return the multiset as an ascending array with repeated entries."""
    values = [value for value, count in roots for _ in range(count)]
    return np.sort(np.asarray(values, dtype=np.float64))
