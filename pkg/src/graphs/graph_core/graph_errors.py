"""
Purpose
-------
Define the exception types raised across the toolkit.

Key behaviors
-------------
- `GraphDomainError`: a precondition on a vertex, a parameter or a window
  size does not hold.
- `GraphFormatError`: a graph or plan file is malformed or violates the
  bit-strict file format.
- `ConstructionError`: a generator or surgery plan cannot be assembled
  (row-bound violation, size cap exceeded).
- `NonConvergenceError`: an iterative eigensolve did not reach the requested
  residual; carries the last residual and the iteration budget.

Conventions
-----------
- The first three derive from `ValueError`, non-convergence from
  `RuntimeError`, so callers that only know the built-ins still catch them.
- Messages always name the offending value (vertex, pair, anchor, residual).

Downstream usage
----------------
The CLI maps these to exit codes: domain/format/construction errors → 2,
non-convergence → 3.
"""


class GraphDomainError(ValueError):
    """Raised when an operation's precondition on its inputs does not hold."""


class GraphFormatError(ValueError):
    """Raised when a graph or plan file cannot be parsed or violates the format."""


class ConstructionError(ValueError):
    """Raised when a generator or surgery plan cannot be assembled."""


class NonConvergenceError(RuntimeError):
    """
    Purpose
    -------
    Signal that an iterative eigensolver stopped without meeting its residual
    tolerance.

    Parameters
    ----------
    message : str
        Human-readable diagnostic.
    last_residual : float
        Largest residual norm of the last Ritz pairs (NaN when unavailable).
    iterations : int
        Iteration budget that was exhausted.

    Attributes
    ----------
    last_residual : float
        As passed in.
    iterations : int
        As passed in.
    """

    def __init__(self, message: str, last_residual: float, iterations: int) -> None:
        super().__init__(message)
        self.last_residual = last_residual
        self.iterations = iterations
