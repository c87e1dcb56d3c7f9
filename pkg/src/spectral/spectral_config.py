"""
Purpose
-------
Numerical tolerances and caps for matrix assembly, eigensolves and bound
checks.

Key behaviors
-------------
- `DENSE_DIMENSION_CAP` bounds the dimension accepted by the dense solver.
- `DENSE_TOL` / `ITERATIVE_TOL` are relative residual tolerances: a reported
  pair must satisfy `‖Av − λv‖ <= tol · ‖A‖_∞`.
- `ITERATIVE_MAX_ITER` caps ARPACK restarts; `SMALL_DIMENSION_FALLBACK`
  routes tiny operators to the dense solver (ARPACK needs `k < N`).
- `START_VECTOR_SEED` and `START_VECTOR_PERTURBATION` make the Krylov start
  vector deterministic: normalized all-ones plus a small seeded perturbation,
  so it is never orthogonal to the target eigenvector.
- `SLACK_ABS` and `SLACK_REL` define the tolerance of every `BoundCheck`:
  `lhs <= rhs + SLACK_ABS + SLACK_REL * max(|lhs|, |rhs|)`.

Conventions
-----------
- All tolerances are dimensionless except `SLACK_ABS`, which is absolute.

Downstream usage
----------------
Imported by `spectral.eigensolvers`, `spectral.bound_checks` and the verify
suite; CLI `--tol` overrides the residual tolerance per run.
"""

DENSE_DIMENSION_CAP: int = 4000
DENSE_TOL: float = 1e-10
ITERATIVE_TOL: float = 1e-8
ITERATIVE_MAX_ITER: int = 20_000
SMALL_DIMENSION_FALLBACK: int = 8
START_VECTOR_SEED: int = 20_240_917
START_VECTOR_PERTURBATION: float = 1e-2
SLACK_ABS: float = 1e-7
SLACK_REL: float = 1e-9
