"""
Purpose
-------
Generator for the weighted half-line `ℕ*` whose adjacency operator is the
Jacobi matrix with zero diagonal and off-diagonal `a_n = n^(1+α)`.

Key behaviors
-------------
- `jacobi_chain(alpha, length)` returns the infinite path family; the window
  of `length` vertices is the path on `1..length`.
- `jacobi_weight(alpha, n)` evaluates `E(n, n+1)`.

Conventions
-----------
- Vertex index `v` carries the label `n = v + 1`; `E(v, v+1) = (v+1)^(1+α)`.
- Maximal degree is 2; the window's last vertex is boundary.

Downstream usage
----------------
The deficiency module solves `A*f = i f` on this chain; the Nelson check reads
its weight gaps.
"""

from graphs.generators.param_checks import require_int, require_real
from graphs.graph_core.graph_core_types import NeighborList
from graphs.graph_core.graph_family import GraphFamily


def jacobi_weight(alpha: float, n: int) -> float:
    """Return `a_n = n^(1+α)`, the weight of the edge between labels `n` and `n+1`."""
    return float(n) ** (1.0 + alpha)


def jacobi_chain(alpha: float, length: int) -> GraphFamily:
    """
    Build the Jacobi chain with weights `n^(1+α)`, windowed at `length` vertices.

    Parameters
    ----------
    alpha : float
        Growth exponent, `> 0`.
    length : int
        Number of vertices in the default window, `>= 2`.

    Returns
    -------
    GraphFamily
        Infinite path family labelled `1, 2, ...`.

    Raises
    ------
    GraphDomainError
        On invalid parameters.
    """

    require_real("alpha", alpha, 0.0)
    require_int("length", length, 2)

    def neighbors(v: int) -> NeighborList:
        found: NeighborList = []
        if v >= 1:
            found.append((v - 1, jacobi_weight(alpha, v)))
        found.append((v + 1, jacobi_weight(alpha, v + 1)))
        return found

    return GraphFamily(
        name="jacobi",
        params={"alpha": alpha, "length": length},
        neighbor_fn=neighbors,
        default_window=length,
        degree_fn=lambda v: 1 if v == 0 else 2,
        label_fn=lambda v: str(v + 1),
    )
