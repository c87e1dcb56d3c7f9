"""
Purpose
-------
Assemble the adjacency and Laplacian operators of a finite graph as sparse
symmetric matrices, plus the small linear-algebra helpers the checks share.

Key behaviors
-------------
- `adjacency_matrix(g)`: entry `(x, y) = E(x, y)`, zero diagonal.
- `laplacian_matrix(g)`: the positive semidefinite form `L = D_w − W` with
  `D_w(x, x) = Σ_y E(x, y)`; rows sum to 0 and `⟨f, Lf⟩ >= 0`.
- `operator_inf_norm(op)`: maximum absolute row sum `‖A‖_∞`.
- `rayleigh_quotient(op, f)`: `⟨f, Af⟩ / ⟨f, f⟩`.
- `operator_difference(a, b)`: `a − b` for operators of equal dimension.

Conventions
-----------
- Matrices are `scipy.sparse.csr_array` with float64 entries; both triangles
  are stored, so symmetry is exact in the stored structure.
- The graph Laplacian written with weighted differences `f(y) − f(x)` is the
  negative of `L`; this module always assembles `L` itself.

Downstream usage
----------------
`spectral.eigensolvers` consumes `SymmetricOperator`; bound checks read
`operator_inf_norm` for residual scaling.
"""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy import sparse

from graphs.graph_core.finite_graph import FiniteGraph
from graphs.graph_core.graph_errors import GraphDomainError


@dataclass(frozen=True, eq=False)
class SymmetricOperator:
    """
    Purpose
    -------
    Sparse real symmetric matrix with a short description of its origin.

    Parameters
    ----------
    matrix : scipy.sparse.csr_array
        Square float64 matrix; both triangles stored.
    kind : str
        `"adjacency"`, `"laplacian"` or `"difference"`.

    Notes
    -----
    - Build through `adjacency_matrix` / `laplacian_matrix`; the constructor
      does not check symmetry.
    """

    matrix: sparse.csr_array
    kind: str

    @property
    def dimension(self) -> int:
        return int(self.matrix.shape[0])

    def to_dense(self) -> npt.NDArray[np.float64]:
        return np.asarray(self.matrix.toarray(), dtype=np.float64)

    def rows(self) -> list[list[tuple[int, float]]]:
        """Return row-indexed lists of `(column, value)` for non-zero entries."""
        indptr, indices, data = self.matrix.indptr, self.matrix.indices, self.matrix.data
        return [
            [(int(indices[k]), float(data[k])) for k in range(indptr[r], indptr[r + 1])]
            for r in range(self.dimension)
        ]

    def is_symmetric(self) -> bool:
        return (self.matrix != self.matrix.T).nnz == 0


def _edge_arrays(g: FiniteGraph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    if not g.edges:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty, np.empty(0, dtype=np.float64)
    arr = np.asarray(g.edges, dtype=np.float64)
    return arr[:, 0].astype(np.int64), arr[:, 1].astype(np.int64), arr[:, 2]


def adjacency_matrix(g: FiniteGraph) -> SymmetricOperator:
    """
    Assemble `A` with `A[x, y] = E(x, y)` and zero diagonal.

    Parameters
    ----------
    g : FiniteGraph
        Valid graph.

    Returns
    -------
    SymmetricOperator
        `kind="adjacency"`; the empty graph gives a zero matrix.
    """

    i, j, w = _edge_arrays(g)
    n = g.vertex_count
    rows = np.concatenate([i, j])
    cols = np.concatenate([j, i])
    vals = np.concatenate([w, w])
    matrix = sparse.coo_array((vals, (rows, cols)), shape=(n, n)).tocsr()
    return SymmetricOperator(matrix=matrix, kind="adjacency")


def laplacian_matrix(g: FiniteGraph) -> SymmetricOperator:
    """
    Assemble the PSD Laplacian `L = D_w − W`.

    Parameters
    ----------
    g : FiniteGraph
        Valid graph.

    Returns
    -------
    SymmetricOperator
        `kind="laplacian"`; diagonal `Σ_y E(x, y)`, off-diagonal `−E(x, y)`.

    Notes
    -----
    - For a `d`-regular graph with unit weights, `L = d·I − A`.
    """

    adjacency = adjacency_matrix(g).matrix
    n = g.vertex_count
    weighted_degree = np.asarray(adjacency.sum(axis=1)).ravel()
    matrix = (sparse.diags_array(weighted_degree, shape=(n, n)) - adjacency).tocsr()
    return SymmetricOperator(matrix=matrix, kind="laplacian")


def operator_inf_norm(op: SymmetricOperator) -> float:
    """Return `‖A‖_∞`, the maximum absolute row sum (0.0 for an empty matrix)."""
    if op.dimension == 0:
        return 0.0
    return float(np.max(np.asarray(abs(op.matrix).sum(axis=1)).ravel()))


def rayleigh_quotient(op: SymmetricOperator, f: npt.ArrayLike) -> float:
    """
    Return `⟨f, Af⟩ / ⟨f, f⟩` for a real vector `f`.

    Raises
    ------
    GraphDomainError
        If `f` has the wrong length or is zero.
    """

    vec = np.asarray(f, dtype=np.float64)
    if vec.shape != (op.dimension,):
        raise GraphDomainError(
            f"vector of shape {vec.shape} does not match dimension {op.dimension}"
        )
    norm_sq = float(vec @ vec)
    if norm_sq == 0.0:
        raise GraphDomainError("Rayleigh quotient of the zero vector is undefined")
    return float(vec @ (op.matrix @ vec)) / norm_sq


def operator_difference(a: SymmetricOperator, b: SymmetricOperator) -> SymmetricOperator:
    """
    Return `a − b`.

    Raises
    ------
    GraphDomainError
        If the dimensions differ.
    """

    if a.dimension != b.dimension:
        raise GraphDomainError(
            f"cannot subtract operators of dimensions {a.dimension} and {b.dimension}"
        )
    return SymmetricOperator(matrix=(a.matrix - b.matrix).tocsr(), kind="difference")
