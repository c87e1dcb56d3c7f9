"""
Purpose
-------
Constants of the command-line surface: tool version, seeds, the random-graph
distribution used by property criteria, and exit codes.

Key behaviors
-------------
- `TOOL_VERSION`: written into every output's provenance.
- `DEFAULT_SEED`: run seed when `--seed` is omitted.
- `RANDOM_GRAPH_*`, `RANDOM_WEIGHT_RANGE`, `RANDOM_EDGE_PROBABILITY_RANGE`:
  Erdős–Rényi graphs with `n` uniform in
  `[RANDOM_GRAPH_MIN_VERTICES, RANDOM_GRAPH_MAX_VERTICES]`, edge probability
  uniform in the given range and weights uniform in `RANDOM_WEIGHT_RANGE`.
- `SURGERY_PLAN_*`: random surgery plans for the norm-bound criterion.
- `EXIT_*`: process exit codes.

Conventions
-----------
- Ranges are closed `(low, high)` tuples.

Downstream usage
----------------
`cli.main`, `cli.random_graphs` and `cli.verify_suite`.
"""

TOOL_VERSION: str = "0.1.0"
DEFAULT_SEED: int = 20_240_917

RANDOM_GRAPH_COUNT: int = 200
RANDOM_GRAPH_MIN_VERTICES: int = 2
RANDOM_GRAPH_MAX_VERTICES: int = 60
RANDOM_EDGE_PROBABILITY_RANGE: tuple[float, float] = (0.05, 0.6)
RANDOM_WEIGHT_RANGE: tuple[float, float] = (0.1, 10.0)

SURGERY_PLAN_COUNT: int = 50
SURGERY_PLAN_MAX_PARTS: int = 6
SURGERY_PART_MAX_VERTICES: int = 12
SURGERY_ROW_BOUND_RANGE: tuple[float, float] = (2.0, 5.0)

DISCRIMINANT_SHIFT_MARGIN: float = 1e-6
WITNESS_TOL: float = 1e-9

EXIT_OK: int = 0
EXIT_FAILURE: int = 1
EXIT_USAGE: int = 2
EXIT_NON_CONVERGENCE: int = 3
