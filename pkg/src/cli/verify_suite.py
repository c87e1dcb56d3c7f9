"""
Purpose
-------
Reproducible acceptance suite: fourteen numerical criteria covering spectra,
bounds, complexity, witnesses and deficiency probes, with a machine-readable
and a human-readable report.

Key behaviors
-------------
- `run_verify_suite(config, logger)` runs every criterion (or the subset in
  `only`) and never raises for a failing criterion: exceptions become
  failed results carrying the exception text as diagnostic.
- A `NonConvergenceError` inside a criterion marks the result as a
  non-convergence; the suite exit code is 3 when every failure is one, 1 for
  any other failure, 0 when all pass.
- Random inputs come from `cli.random_graphs` with sub-seeds of
  `config.seed`, so a run is deterministic given seed and config.

Conventions
-----------
- `measured` is the worst value over the criterion's cases (a margin,
  deviation or ratio); `expected` states the relation it must satisfy.
- Tolerance overrides: `dense` (dense eigensolver residual), `iterative`
  (Lanczos residual), `witness`, `residual` and `cauchy`.

Downstream usage
----------------
CLI `verify`; tests run single criteria through `only`.
"""

import math
from dataclasses import asdict, dataclass
from typing import Any, Callable, Sequence

import networkx as nx
import numpy as np

from cli.cli_config import DISCRIMINANT_SHIFT_MARGIN, EXIT_FAILURE, EXIT_NON_CONVERGENCE, EXIT_OK
from cli.cli_config import WITNESS_TOL
from cli.random_graphs import random_surgery_plans, random_weighted_graphs
from cli.run_config import RunConfig, config_hash
from complexity.local_complexity import ratio, stated_complexity_limit
from complexity.star_witness import sub_complexity_witness
from deficiency.deficiency_config import RESIDUAL_REL_TOL
from deficiency.ftree_recursion import f_tree_deficiency_vector
from deficiency.nelson_check import consecutive_gap_profile
from deficiency.residuals import deficiency_residual_check, ftree_increment_bound_check
from graphs.generators.finite_families import complete_graph, hub_of_cliques, star_graph
from graphs.generators.infinite_families import chained_star_cliques, star_clique_hub_index
from graphs.generators.jacobi_chain import jacobi_chain
from graphs.generators.surgery import main_construction_plan, surgery
from graphs.generators.trees import f_tree, f_tree_degree, word_tree, word_tree_level_offset
from graphs.graph_core.finite_graph import FiniteGraph, triangle_count
from graphs.graph_core.graph_errors import NonConvergenceError
from graphs.graph_core.graph_family import GraphFamily, truncate
from infra.logging.infra_logger import InfraLogger
from spectral.analytic_spectra import complete_graph_roots, expand_multiset, kkn_char_poly_roots
from spectral.bound_checks import (
    check_discriminant_inequality,
    check_estbd_sandwich,
    kkn_lower_bound_check,
    main_construction_bound,
    rayleigh_witness,
    surgery_result_norm_check,
)
from spectral.eigensolvers import auto_extremal, dense_spectrum
from spectral.operators import adjacency_matrix, laplacian_matrix, operator_inf_norm
from spectral.spectral_config import DENSE_TOL, ITERATIVE_TOL
from spectral.unboundedness_scan import unboundedness_scan

TABLE_HEADER: str = f"{'id':>3}  {'verdict':<8} {'measured':>14}  {'expected':<28} description"


@dataclass(frozen=True)
class Measurement:
    """Outcome of one criterion body before it is labelled."""

    measured: float
    expected: str
    tolerance: float
    verdict: bool
    diagnostic: str = ""


@dataclass(frozen=True)
class CriterionResult:
    """
    Purpose
    -------
    One row of the verify report.

    Parameters
    ----------
    criterion_id : int
        1 to 14.
    description : str
        Short name.
    statement : str
        The mathematical claim being checked.
    measured : float
        Worst value over the cases (NaN when the criterion crashed).
    expected : str
        Relation `measured` must satisfy.
    tolerance : float
        Numerical slack used.
    verdict : bool
        Pass or fail.
    diagnostic : str
        Details on failure or notable context.
    non_convergence : bool
        True when the failure was an eigensolver non-convergence.
    """

    criterion_id: int
    description: str
    statement: str
    measured: float
    expected: str
    tolerance: float
    verdict: bool
    diagnostic: str = ""
    non_convergence: bool = False


@dataclass(frozen=True)
class VerifySuiteResult:
    """All criterion results of one run plus its provenance."""

    criteria: tuple[CriterionResult, ...]
    seed: int
    config_hash: str

    @property
    def passed(self) -> bool:
        return all(c.verdict for c in self.criteria)

    @property
    def exit_code(self) -> int:
        failures = [c for c in self.criteria if not c.verdict]
        if not failures:
            return EXIT_OK
        if all(c.non_convergence for c in failures):
            return EXIT_NON_CONVERGENCE
        return EXIT_FAILURE

    def to_json_dict(self) -> dict[str, Any]:
        rows = []
        for result in self.criteria:
            row = asdict(result)
            if not math.isfinite(row["measured"]):
                row["measured"] = None
            rows.append(row)
        return {"passed": self.passed, "exit_code": self.exit_code, "criteria": rows}

    def table(self) -> str:
        lines = [TABLE_HEADER, "-" * len(TABLE_HEADER)]
        for c in self.criteria:
            verdict = "PASS" if c.verdict else ("NOCONV" if c.non_convergence else "FAIL")
            lines.append(
                f"{c.criterion_id:>3}  {verdict:<8} {c.measured:>14.6g}  "
                f"{c.expected:<28} {c.description}"
            )
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _graph(family: GraphFamily, size: int | None = None) -> FiniteGraph:
    return truncate(family, size).graph


def _complete_spectra(config: RunConfig) -> Measurement:
    tol = 1e-9
    worst = 0.0
    for n in range(2, 13):
        computed = dense_spectrum(
            adjacency_matrix(_graph(complete_graph(n))), tol=config.tolerance("dense", DENSE_TOL)
        ).eigenvalues
        expected = expand_multiset(complete_graph_roots(n))
        worst = max(worst, float(np.max(np.abs(np.asarray(computed) - expected))))
    return Measurement(worst, f"<= {tol:g}", tol, worst <= tol)


def _kkn_char_poly(config: RunConfig) -> Measurement:
    tol = 1e-9
    worst, where = 0.0, ""
    for k in range(1, 9):
        for n in range(1, 9):
            computed = dense_spectrum(
                adjacency_matrix(_graph(hub_of_cliques(k, n))),
                tol=config.tolerance("dense", DENSE_TOL),
            ).eigenvalues
            expected = expand_multiset(kkn_char_poly_roots(k, n))
            deviation = float(np.max(np.abs(np.asarray(computed) - expected)))
            if deviation > worst:
                worst, where = deviation, f"worst at k={k}, n={n}"
    return Measurement(worst, f"<= {tol:g}", tol, worst <= tol, where)


def _kkn_lower_bound(config: RunConfig) -> Measurement:
    checks = [kkn_lower_bound_check(k, n) for k in range(1, 13) for n in range(1, 41)]
    margin = min(c.slack for c in checks)
    failing = [c for c in checks if not c.verdict]
    diagnostic = f"{len(failing)} of {len(checks)} fail" if failing else ""
    return Measurement(margin, "λ_min + 4k >= 0", checks[0].tolerance, not failing, diagnostic)


def _main_construction(config: RunConfig) -> Measurement:
    margins = []
    growth: list[str] = []
    growing = True
    for k in (2, 3, 5):
        tops = []
        for count in (5, 10, 15):
            check, report = main_construction_bound(k, count)
            margins.append((check.slack, check.verdict))
            tops.append(report.lambda_max)
        growing &= all(b > a for a, b in zip(tops, tops[1:]))
        growth.append(f"k={k}: λ_max " + " < ".join(f"{t:.4f}" for t in tops))
    margin = min(m for m, _ in margins)
    verdict = all(v for _, v in margins) and growing
    return Measurement(
        margin, "λ_min + 4k + M >= 0, λ_max grows", 1e-7, verdict, "; ".join(growth)
    )


def _sandwich(config: RunConfig) -> Measurement:
    checks = [c for g in random_weighted_graphs(config.seed) for c in check_estbd_sandwich(g)]
    slack = min(c.slack for c in checks)
    return Measurement(slack, "slack >= -1e-07", 1e-7, all(c.verdict for c in checks))


def _witness(config: RunConfig) -> Measurement:
    tol = config.tolerance("witness", WITNESS_TOL)
    excess = -math.inf
    for g in random_weighted_graphs(config.seed):
        top = auto_extremal(adjacency_matrix(g)).lambda_max
        for x in range(g.vertex_count):
            if g.degree(x):
                excess = max(excess, rayleigh_witness(g, x) - top)
    gap = 0.0
    for n in range(3, 51):
        star = _graph(star_graph(n))
        top = dense_spectrum(adjacency_matrix(star)).lambda_max
        gap = max(gap, abs(rayleigh_witness(star, 0) - top))
    verdict = excess <= tol and gap <= tol
    diagnostic = f"max witness − λ_max {excess:.3e}; star tightness gap {gap:.3e}"
    return Measurement(max(excess, gap), f"<= {tol:g}", tol, verdict, diagnostic)


def _discriminant(config: RunConfig) -> Measurement:
    worst = math.inf
    verdict = True
    for g in random_weighted_graphs(config.seed):
        lowest = auto_extremal(adjacency_matrix(g)).lambda_min
        checks = check_discriminant_inequality(g, C=-lowest + DISCRIMINANT_SHIFT_MARGIN)
        worst = min(worst, min(c.slack for c in checks))
        verdict &= all(c.verdict for c in checks)
    return Measurement(worst, "slack >= -1e-07", 1e-7, verdict)


def _surgery_norm(config: RunConfig) -> Measurement:
    plans = random_surgery_plans(config.seed)
    checks = [surgery_result_norm_check(surgery(plan)) for plan in plans]
    slack = min(c.slack for c in checks)
    verdict = all(c.verdict for c in checks)
    return Measurement(slack, "‖A_G − A_G°‖ <= M·w_max", 1e-9, verdict)


def _oracle_ratio_mismatches(g: FiniteGraph) -> int:
    oracle = nx.Graph()
    oracle.add_nodes_from(range(g.vertex_count))
    oracle.add_edges_from((i, j) for i, j, _ in g.edges)
    triangles = nx.triangles(oracle)
    return sum(1 for x in range(g.vertex_count) if triangle_count(g, x) != 2 * triangles[x])


def _complexity_limit(config: RunConfig) -> Measurement:
    tol = 0.02
    worst = 0.0
    notes = []
    for alpha in (1, 2, 3):
        family = chained_star_cliques(alpha)
        measured = ratio(family, star_clique_hub_index(alpha, 200))
        target = 1.0 / (1.0 + alpha) ** 2
        worst = max(worst, abs(measured - target))
        notes.append(f"α={alpha}: {measured:.5f} vs {target:.5f}")
    mismatches = 0
    for family in (complete_graph(6), hub_of_cliques(3, 5)):
        mismatches += _oracle_ratio_mismatches(_graph(family))
        stated = stated_complexity_limit(family)
        if stated is not None:
            notes.append(f"{family.name} stated limit {stated:.5f}")
    notes.append(f"oracle mismatches {mismatches}")
    return Measurement(
        worst,
        f"|ratio − 1/(1+α)²| <= {tol:g}",
        tol,
        worst <= tol and not mismatches,
        "; ".join(notes),
    )


def _sub_complexity(config: RunConfig) -> Measurement:
    alpha = 1
    hubs = (10, 25, 50, 100)
    windows = [star_clique_hub_index(alpha, n + 1) + 1 for n in hubs]
    verdict = sub_complexity_witness(chained_star_cliques(alpha), windows)
    shortfall = min(
        w.witness.order - alpha * n for w, n in zip(verdict.witnesses, hubs)
    ) if len(verdict.witnesses) == len(hubs) else -math.inf
    orders = [w.witness.order for w in verdict.witnesses]
    return Measurement(
        float(shortfall),
        "zeroWitness, order >= αn",
        0.0,
        verdict.kind == "zeroWitness" and shortfall >= 0,
        f"{verdict.kind}; orders {orders}",
    )


def _word_tree_scan(config: RunConfig) -> Measurement:
    M, depths = 3, range(2, 6)
    sizes = [word_tree_level_offset(M, depth + 1) for depth in depths]
    frame = unboundedness_scan(
        word_tree(M, max(depths)),
        sizes,
        iterative_tol=config.tolerance("iterative", ITERATIVE_TOL),
    )
    tops = frame["lambda_max"].to_numpy()
    bottoms = frame["lambda_min"].to_numpy()
    step = float(min(np.min(np.diff(tops)), np.min(-np.diff(bottoms))))
    diagnostic = "λ_max " + ", ".join(f"{t:.4f}" for t in tops)
    return Measurement(step, "strict growth > 0", 0.0, step > 0, diagnostic)


def _ftree_deficiency(config: RunConfig) -> Measurement:
    alpha, window = 1.0, 10_000
    sol = f_tree_deficiency_vector(alpha, window)
    residual = deficiency_residual_check(sol, truncate(sol.family, window)).max_residual
    rel_tol = config.tolerance("residual", RESIDUAL_REL_TOL)
    residual_ok = residual <= rel_tol * sol.sup_norm
    increment, tail = ftree_increment_bound_check(sol)
    n = window
    degree_ratio = (f_tree_degree(alpha, n) - 1) / ((alpha + 2) * (n + 1) ** (alpha + 1))
    degree_ok = abs(degree_ratio - 1.0) <= 0.05
    verdict = residual_ok and increment.verdict and tail.verdict and degree_ok
    diagnostic = (
        f"increment ratio {increment.lhs:.3f}; tail ratio {tail.lhs:.3f}; "
        f"degree ratio {degree_ratio:.4f}; arithmetic {sol.arithmetic}"
    )
    return Measurement(residual, f"<= {rel_tol:g}·max|f|", rel_tol, verdict, diagnostic)


def _nelson_gap(config: RunConfig) -> Measurement:
    tol = 0.05
    worst = 0.0
    notes = []
    for alpha in (0.5, 1.0):
        family = f_tree(alpha, 10_001, connected=True)
        scaled = float(consecutive_gap_profile(family, [10_000], alpha)["scaled_gap"].iloc[0])
        target = (alpha + 2) * (alpha + 1)
        worst = max(worst, abs(scaled / target - 1.0))
        notes.append(f"α={alpha}: {scaled:.4f} vs {target:.4f}")
    return Measurement(worst, f"relative deviation <= {tol:g}", tol, worst <= tol, "; ".join(notes))


def _laplacian_psd(config: RunConfig) -> Measurement:
    generated = [
        _graph(complete_graph(8)),
        _graph(star_graph(10)),
        _graph(hub_of_cliques(3, 4)),
        _graph(chained_star_cliques(1), 300),
        _graph(word_tree(3, 3)),
        _graph(f_tree(1.0, 200)),
        _graph(jacobi_chain(1.0, 200)),
        surgery(main_construction_plan(2, 6)).graph,
    ]
    worst = math.inf
    for g in generated + random_weighted_graphs(config.seed):
        op = laplacian_matrix(g)
        report = auto_extremal(op, iterative_tol=config.tolerance("iterative", ITERATIVE_TOL))
        worst = min(worst, report.lambda_min / max(operator_inf_norm(op), 1.0))
    return Measurement(worst, "λ_min(L)/‖L‖_∞ >= -1e-10", 1e-10, worst >= -1e-10)


Criterion = tuple[int, str, str, Callable[[RunConfig], Measurement]]

CRITERIA: tuple[Criterion, ...] = (
    (1, "complete graph spectra", "σ(K_n) = {n−1} ∪ {−1}^(n−1)", _complete_spectra),
    (2, "K_{k,n} characteristic roots", "roots of λ² − (n−1)λ − nk", _kkn_char_poly),
    (3, "K_{k,n} lower bound", "λ_min(K_{k,n}) >= −4k", _kkn_lower_bound),
    (4, "main construction", "λ_min >= −4k − M, λ_max unbounded", _main_construction),
    (5, "boundedness sandwich", "sup ΣE² <= sup σ(A²) <= sup Σ d(y)E²", _sandwich),
    (6, "Rayleigh witness", "witness <= λ_max, tight on stars", _witness),
    (7, "discriminant inequality", "s1²/C <= s2 + C·d for C >= −λ_min", _discriminant),
    (8, "surgery norm bound", "‖A_G − A_G°‖ <= M·w_max", _surgery_norm),
    (9, "local complexity limit", "ratio(x_n) → 1/(1+α)²", _complexity_limit),
    (10, "sub-complexity witness", "induced stars of order >= αn", _sub_complexity),
    (11, "word tree unboundedness", "λ_max ↑ and λ_min ↓ with depth", _word_tree_scan),
    (12, "F-tree deficiency vector", "A*f = i f on determined vertices", _ftree_deficiency),
    (13, "F-tree degree gaps", "n^(−α)|d(n)−d(n+1)| → (α+2)(α+1)", _nelson_gap),
    (14, "Laplacian positivity", "λ_min(L) >= 0", _laplacian_psd),
)


def _run_one(criterion: Criterion, config: RunConfig) -> CriterionResult:
    criterion_id, description, statement, body = criterion
    try:
        m = body(config)
    except NonConvergenceError as exc:
        return CriterionResult(
            criterion_id, description, statement, float("nan"), "converged solve", 0.0,
            False, f"non-convergence: {exc} (last residual {exc.last_residual:.3e})", True,
        )
    except (ValueError, ArithmeticError) as exc:
        return CriterionResult(
            criterion_id, description, statement, float("nan"), "no error", 0.0,
            False, f"{type(exc).__name__}: {exc}",
        )
    return CriterionResult(
        criterion_id, description, statement, float(m.measured), m.expected, m.tolerance,
        bool(m.verdict), m.diagnostic,
    )


def run_verify_suite(
    config: RunConfig,
    logger: InfraLogger | None = None,
    only: Sequence[int] | None = None,
) -> VerifySuiteResult:
    """
    Run the acceptance criteria.

    Parameters
    ----------
    config : RunConfig
        Seed and tolerance overrides.
    logger : InfraLogger | None
        Receives `criterion_done` per criterion and `suite_done` at the end.
    only : Sequence[int] | None
        Criterion ids to run; all when omitted.

    Returns
    -------
    VerifySuiteResult
        Results in criterion order.
    """

    selected = [c for c in CRITERIA if only is None or c[0] in set(only)]
    results = []
    for criterion in selected:
        result = _run_one(criterion, config)
        results.append(result)
        if logger is not None:
            log = logger.info if result.verdict else logger.warning
            log(
                "criterion_done",
                f"criterion {result.criterion_id}: {result.description}",
                {
                    "verdict": result.verdict,
                    "measured": result.measured,
                    "diagnostic": result.diagnostic,
                },
            )
    suite = VerifySuiteResult(
        criteria=tuple(results), seed=config.seed, config_hash=config_hash(config)
    )
    if logger is not None:
        logger.info("suite_done", "verify suite finished", {"passed": suite.passed})
    return suite
