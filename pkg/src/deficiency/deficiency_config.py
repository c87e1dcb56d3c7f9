"""
Purpose
-------
Tolerances and caps for the deficiency recursions and their diagnostics.

Key behaviors
-------------
- `EXACT_ARITHMETIC_VERTEX_CAP`: F-tree windows up to this many vertices are
  solved over the Gaussian rationals; larger windows use complex floats.
- `CAUCHY_INCREMENT_TOL`: increment size below which partial ℓ² sums count
  as stabilized.
- `RESIDUAL_REL_TOL`: residual bound relative to `max |f|` on determined
  interior vertices.
- `FIT_CONFIDENCE`, `FIT_TAIL_FRACTION`, `FIT_MIN_POINTS`: log-log decay fit
  settings (confidence level, fraction of the sequence used as tail, and the
  fewest points a fit accepts).
- `JACOBI_DEFAULT_LENGTH`: chain length used by the CLI when `--window` is
  omitted.

Conventions
-----------
- Tolerances are absolute on the quantity they name.

Downstream usage
----------------
Imported by every module of the `deficiency` package.
"""

EXACT_ARITHMETIC_VERTEX_CAP: int = 100_000
CAUCHY_INCREMENT_TOL: float = 1e-12
RESIDUAL_REL_TOL: float = 1e-12
FIT_CONFIDENCE: float = 0.95
FIT_TAIL_FRACTION: float = 0.5
FIT_MIN_POINTS: int = 3
JACOBI_DEFAULT_LENGTH: int = 50_000
