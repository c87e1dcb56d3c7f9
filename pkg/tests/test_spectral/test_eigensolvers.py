"""
Purpose
-------
Unit tests for `spectral.eigensolvers`.

Key behaviors
-------------
- `dense_spectrum` returns every eigenvalue in ascending order and refuses
  operators above its dimension cap.
- `extremal_eigenvalues` agrees with the dense solver on mid-sized graphs,
  falls back to dense below `SMALL_DIMENSION_FALLBACK`, and validates its
  arguments.
- Residual failures and ARPACK non-convergence surface as
  `NonConvergenceError` carrying the last residual.
- `spectral_report` dispatches on the CLI method name.

Conventions
-----------
- Failure paths are driven with `monkeypatch` on the solver entry points
  rather than with ill-conditioned inputs.

Downstream usage
----------------
Run via `pytest` as part of the CI suite.
"""

from __future__ import annotations

import math

import networkx as nx
import numpy as np
import pytest
from scipy.sparse.linalg import ArpackNoConvergence

from graphs.generators.finite_families import hub_of_cliques, star_graph
from graphs.graph_core.finite_graph import FiniteGraph, build_finite_graph
from graphs.graph_core.graph_errors import ConstructionError, GraphDomainError, NonConvergenceError
from graphs.graph_core.graph_family import truncate
from spectral import eigensolvers
from spectral.eigensolvers import (
    auto_extremal,
    dense_spectrum,
    extremal_eigenvalues,
    spectral_report,
    start_vector,
)
from spectral.operators import adjacency_matrix


def _gnp_weighted(n: int, p: float, seed: int) -> FiniteGraph:
    rng = np.random.default_rng(seed)
    pattern = nx.gnp_random_graph(n, p, seed=seed)
    return build_finite_graph(
        n, [(i, j, float(rng.uniform(0.1, 10.0))) for i, j in pattern.edges()]
    )


def test_dense_spectrum_of_path(path_graph: FiniteGraph) -> None:
    report = dense_spectrum(adjacency_matrix(path_graph), graph_ref="P4")
    expected = sorted(2.0 * math.cos(math.pi * k / 5.0) for k in range(1, 5))

    np.testing.assert_allclose(report.eigenvalues, expected, atol=1e-12)
    assert report.scope == "all"
    assert report.method == "dense"
    assert report.graph_ref == "P4"
    assert report.max_residual <= 1e-10 * report.inf_norm


def test_dense_spectrum_of_empty_graph() -> None:
    report = dense_spectrum(adjacency_matrix(build_finite_graph(0, [])))

    assert report.eigenvalues == ()
    with pytest.raises(GraphDomainError):
        _ = report.lambda_min


def test_dense_spectrum_refuses_dimension_above_cap(triangle_graph: FiniteGraph) -> None:
    with pytest.raises(ConstructionError, match="exceeds the dense cap 2"):
        dense_spectrum(adjacency_matrix(triangle_graph), cap=2)


def test_dense_residual_failure_raises(
    triangle_graph: FiniteGraph, monkeypatch: pytest.MonkeyPatch
) -> None:
    """
    A perturbed eigendecomposition leaves residuals near 0.1, far above the
    dense tolerance, and is reported with zero iterations.
    """
    real_eigh = np.linalg.eigh

    def shifted_eigh(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        values, vectors = real_eigh(matrix)
        return values + 0.1, vectors

    monkeypatch.setattr(eigensolvers.np.linalg, "eigh", shifted_eigh)

    with pytest.raises(NonConvergenceError) as info:
        dense_spectrum(adjacency_matrix(triangle_graph))

    assert info.value.iterations == 0
    assert info.value.last_residual == pytest.approx(0.1, rel=1e-6)


@pytest.mark.parametrize("n", [20, 200])
def test_extremal_eigenvalues_of_star(n: int) -> None:
    report = extremal_eigenvalues(adjacency_matrix(truncate(star_graph(n)).graph))

    assert report.method == "iterative"
    assert report.scope == "both"
    assert report.lambda_max == pytest.approx(math.sqrt(n - 1), abs=1e-7)
    assert report.lambda_min == pytest.approx(-math.sqrt(n - 1), abs=1e-7)
    assert report.max_residual <= report.tolerance * report.inf_norm


@pytest.mark.parametrize("seed", [1, 2, 3, 4])
def test_extremal_eigenvalues_agree_with_dense(seed: int) -> None:
    g = _gnp_weighted(60, 0.15, seed)
    op = adjacency_matrix(g)

    dense = dense_spectrum(op)
    iterative = extremal_eigenvalues(op, "both")

    scale = max(dense.inf_norm, 1.0)
    assert abs(iterative.lambda_min - dense.lambda_min) <= 1e-6 * scale
    assert abs(iterative.lambda_max - dense.lambda_max) <= 1e-6 * scale


def test_extremal_eigenvalues_single_end() -> None:
    op = adjacency_matrix(truncate(hub_of_cliques(3, 10)).graph)

    top = extremal_eigenvalues(op, "max")

    assert top.scope == "max"
    assert len(top.eigenvalues) == 1
    assert top.lambda_max == pytest.approx(dense_spectrum(op).lambda_max, abs=1e-7)
    with pytest.raises(GraphDomainError, match="no λ_min"):
        _ = top.lambda_min


def test_extremal_eigenvalues_small_dimension_uses_dense(triangle_graph: FiniteGraph) -> None:
    report = extremal_eigenvalues(adjacency_matrix(triangle_graph))

    assert report.method == "dense"
    assert report.eigenvalues == pytest.approx((-1.0, 2.0))


def test_extremal_eigenvalues_argument_checks(triangle_graph: FiniteGraph) -> None:
    with pytest.raises(GraphDomainError, match="dimension >= 2"):
        extremal_eigenvalues(adjacency_matrix(build_finite_graph(1, [])))
    with pytest.raises(GraphDomainError, match="which must be"):
        extremal_eigenvalues(adjacency_matrix(triangle_graph), "middle")  # type: ignore[arg-type]


def test_arpack_non_convergence_is_wrapped(monkeypatch: pytest.MonkeyPatch) -> None:
    def failing_eigsh(*args: object, **kwargs: object) -> None:
        raise ArpackNoConvergence("no luck", np.empty(0), np.empty((0, 0)))

    monkeypatch.setattr(eigensolvers, "eigsh", failing_eigsh)
    op = adjacency_matrix(truncate(star_graph(30)).graph)

    with pytest.raises(NonConvergenceError, match="did not converge in 7 iterations") as info:
        extremal_eigenvalues(op, max_iter=7)

    assert info.value.iterations == 7
    assert math.isnan(info.value.last_residual)


def test_tight_tolerance_reports_residual(monkeypatch: pytest.MonkeyPatch) -> None:
    """
    A Ritz pair whose true residual exceeds the tolerance is rejected even if
    ARPACK returned it.
    """
    op = adjacency_matrix(truncate(star_graph(30)).graph)

    def sloppy_eigsh(
        matrix: object, k: int, which: str, **kwargs: object
    ) -> tuple[np.ndarray, np.ndarray]:
        vec = start_vector(op.dimension).reshape(-1, 1)
        return np.array([1.0]), vec

    monkeypatch.setattr(eigensolvers, "eigsh", sloppy_eigsh)

    with pytest.raises(NonConvergenceError, match="residual"):
        extremal_eigenvalues(op, "max")


def test_start_vector_is_deterministic_and_normalized() -> None:
    first = start_vector(50)

    np.testing.assert_array_equal(first, start_vector(50))
    assert np.linalg.norm(first) == pytest.approx(1.0)
    assert np.all(first > 0.5 / np.sqrt(50))


def test_spectral_report_dispatch(path_graph: FiniteGraph) -> None:
    op = adjacency_matrix(path_graph)

    assert spectral_report(op, "dense").scope == "all"
    assert spectral_report(op, "dense", extremal=True).scope == "both"
    assert spectral_report(op, "iter").scope == "both"
    assert auto_extremal(op).eigenvalues == pytest.approx(
        (-2.0 * math.cos(math.pi / 5.0), 2.0 * math.cos(math.pi / 5.0))
    )
    with pytest.raises(GraphDomainError, match="unknown method"):
        spectral_report(op, "lanczos")
