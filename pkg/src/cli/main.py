"""
Purpose
-------
Single command-line entry point of the toolkit: `generate`, `spectrum`,
`complexity`, `deficiency`, `witness` and `verify` subcommands over a shared
set of flags.

Key behaviors
-------------
- `extract_cli_args(argv)` parses the flags; `config_from_args(args)` turns
  them (optionally merged into a `--config` JSON file) into a validated
  `RunConfig`.
- Each subcommand handler reads only the `RunConfig`, writes its outputs
  (graph JSON via `--out`, tables via `--csv`, reports via `--json`) with
  provenance, prints a short summary to STDOUT and returns an exit code.
- `main(argv)` maps exceptions to exit codes: domain, format, construction
  and file errors give 2, `NonConvergenceError` gives 3, failing checks give
  1, success 0. Usage errors detected by argparse also exit with 2.

Conventions
-----------
- `--tol` overrides the subcommand's primary tolerance: the solver residual
  for `spectrum` (`dense` or `iterative` by `--method`), the Lanczos residual
  for `verify`, the Cauchy increment for `deficiency` and the witness slack
  for `witness`.
- `spectrum` takes its graph file positionally (or via `--graph`) and a
  repeatable `--check estbd|witness|discriminant|surgery`; elsewhere `--check`
  is a plain switch.
- The `complexity` CSV stacks threshold rows and, with `--witness`, one star
  row per window; each kind leaves the other's columns empty.
- Every run logs `run_start` and `run_done` (or `run_failed`,
  `non_convergence`) with the provenance triple in `run_meta`.

Downstream usage
----------------
Installed as the `graph-spectra` console script; `python -m cli.main` is
equivalent.
"""

import argparse
import sys
from dataclasses import asdict
from typing import Any, Callable, Sequence

import pandas as pd
from dotenv import load_dotenv

from cli.cli_config import EXIT_FAILURE, EXIT_NON_CONVERGENCE, EXIT_OK, EXIT_USAGE
from cli.cli_config import TOOL_VERSION, WITNESS_TOL
from cli.provenance import provenance_fields, write_json_report
from cli.run_config import RunConfig, build_run_config, config_hash, load_run_config
from cli.verify_suite import run_verify_suite
from complexity.local_complexity import (
    c_loc_estimate,
    estimate_trend,
    stated_complexity_limit,
    threshold_frame,
)
from complexity.star_witness import sub_complexity_witness, witness_frame
from deficiency.deficiency_config import (
    CAUCHY_INCREMENT_TOL,
    JACOBI_DEFAULT_LENGTH,
    RESIDUAL_REL_TOL,
)
from deficiency.deficiency_solution import DeficiencySolution, solution_frame
from deficiency.ftree_recursion import f_tree_deficiency_vector
from deficiency.jacobi_recursion import jacobi_deficiency_vector
from deficiency.nelson_check import nelson_hypothesis_check
from deficiency.residuals import deficiency_residual_check, ftree_increment_bound_check
from graphs.generators.family_registry import family_from_name, parse_params
from graphs.generators.generators_config import DEFAULT_FTREE_WINDOW
from graphs.generators.surgery import load_surgery_plan, surgery
from graphs.graph_core.finite_graph import FiniteGraph, induced_subgraph, validate
from graphs.graph_core.graph_errors import (
    ConstructionError,
    GraphDomainError,
    GraphFormatError,
    NonConvergenceError,
)
from graphs.graph_core.graph_family import GraphFamily, family_of_graph, truncate
from graphs.graph_core.graph_io import (
    export_family_window,
    import_graph,
    vertex_statistics_frame,
    write_report_csv,
)
from infra.logging.infra_logger import InfraLogger, initialize_logger, provenance_run_meta
from spectral.bound_checks import (
    BoundCheck,
    check_discriminant_inequality,
    check_estbd_sandwich,
    check_rayleigh_witnesses,
    rayleigh_witness,
    surgery_result_norm_check,
)
from spectral.eigensolvers import auto_extremal, spectral_report
from spectral.operators import adjacency_matrix
from spectral.spectral_config import ITERATIVE_TOL, SLACK_ABS
from spectral.unboundedness_scan import enclosure_violations, unboundedness_scan

SUBCOMMANDS: tuple[str, ...] = (
    "generate",
    "spectrum",
    "complexity",
    "deficiency",
    "witness",
    "verify",
)
OPTION_FLAGS: tuple[str, ...] = (
    "graph",
    "plan",
    "subset",
    "thresholds",
    "alpha",
    "window",
    "f0",
    "check",
    "extremal",
    "witness",
    "nelson",
    "criteria",
)
WITNESS_COLUMNS: list[str] = ["vertex", "degree", "witness", "lambda_max", "sound"]
SPECTRUM_CHECKS: tuple[str, ...] = ("estbd", "witness", "discriminant", "surgery")
SPECTRUM_COLUMNS: list[str] = [
    "size",
    "lambda_min",
    "lambda_max",
    "check",
    "lhs",
    "rhs",
    "verdict",
]
COMPLEXITY_INT_COLUMNS: tuple[str, ...] = ("t", "n_vertices_at_t", "center", "star_order")

Handler = Callable[[RunConfig, InfraLogger], int]


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run one CLI invocation.

    Parameters
    ----------
    argv : Sequence[str] | None
        Arguments without the program name; `sys.argv[1:]` when omitted.

    Returns
    -------
    int
        Process exit code (0, 1, 2 or 3).
    """
    load_dotenv()
    args = extract_cli_args(argv)
    try:
        config = config_from_args(args)
    except (GraphDomainError, GraphFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    logger: InfraLogger = initialize_logger(
        component_name=f"cli.{config.subcommand}",
        level=args.log_level,
        run_meta=provenance_run_meta(TOOL_VERSION, config_hash(config), config.seed),
    )
    logger.info(
        "run_start",
        f"{config.subcommand} started",
        {"family": config.family, "size": config.size, "windows": list(config.windows)},
    )
    try:
        code = HANDLERS[config.subcommand](config, logger)
    except NonConvergenceError as exc:
        logger.error(
            "non_convergence",
            str(exc),
            {"last_residual": exc.last_residual, "iterations": exc.iterations},
        )
        print(f"non-convergence: {exc}", file=sys.stderr)
        return EXIT_NON_CONVERGENCE
    except (GraphDomainError, GraphFormatError, ConstructionError, OSError) as exc:
        logger.error("run_failed", str(exc), {"error": type(exc).__name__})
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logger.info("run_done", f"{config.subcommand} finished", {"exit_code": code})
    return code


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected integers 'a,b,...', got {text!r}") from exc


def _complex_pair(text: str) -> list[float]:
    parts = text.split(",")
    try:
        values = [float(part) for part in parts]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}") from exc
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}")
    return values


def _thresholds(text: str) -> str | list[int]:
    return "auto" if text.strip() == "auto" else _int_list(text)


def extract_cli_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    """
    Parse the subcommand and its flags.

    Returns
    -------
    argparse.Namespace
        One attribute per flag; flags that were not given are None so a
        `--config` file can supply them.

    Raises
    ------
    SystemExit
        With code 2 on a usage error (argparse behavior).
    """

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", help="registry name, or 'surgery' with --plan")
    common.add_argument("--params", help="family parameters, e.g. k=2,n=3")
    common.add_argument("--size", type=int, help="window size")
    common.add_argument("--windows", type=_int_list, help="comma-separated window sizes")
    common.add_argument("--method", choices=("dense", "iter"))
    common.add_argument("--tol", type=float, help="primary tolerance of the subcommand")
    common.add_argument("--seed", type=int)
    common.add_argument("--out", help="graph JSON output path")
    common.add_argument("--csv", help="table output path")
    common.add_argument("--json", help="report output path")
    common.add_argument("--config", help="JSON RunConfig file; flags override it")
    common.add_argument("--log-level", dest="log_level", default=None)
    common.add_argument("--graph", help="graph JSON input instead of --family")
    common.add_argument("--plan", help="surgery plan JSON for --family surgery")
    common.add_argument("--subset", type=_int_list, help="vertices inducing G'")
    common.add_argument("--thresholds", type=_thresholds, help="degree thresholds t, or auto")
    common.add_argument("--alpha", type=float)
    common.add_argument("--window", type=int)
    common.add_argument("--f0", type=_complex_pair, help="starting value re,im")
    common.add_argument("--criteria", type=_int_list, help="verify only these criteria")
    for flag in ("--extremal", "--witness", "--nelson"):
        common.add_argument(flag, action="store_true", default=None)

    parser = argparse.ArgumentParser(
        prog="graph-spectra", description="Spectral toolkit for weighted graphs."
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        sub = subparsers.add_parser(name, parents=[common])
        if name == "spectrum":
            sub.add_argument("graph_file", nargs="?", help="graph JSON input")
            sub.add_argument(
                "--check", action="append", choices=SPECTRUM_CHECKS, help="repeatable"
            )
        else:
            sub.add_argument("--check", action="store_true", default=None)
    return parser.parse_args(argv)


def _tolerance_name(subcommand: str, method: str | None) -> str | None:
    if subcommand == "spectrum":
        return "iterative" if method == "iter" else "dense"
    return {"verify": "iterative", "deficiency": "cauchy", "witness": "witness"}.get(subcommand)


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """
    Build the run configuration from parsed flags.

    Raises
    ------
    GraphDomainError
        On malformed parameters, a `--tol` on a subcommand without a primary
        tolerance, or an invalid configuration.
    GraphFormatError
        On a malformed `--config` file.
    """

    tolerances = None
    if args.tol is not None:
        name = _tolerance_name(args.subcommand, args.method)
        if name is None:
            raise GraphDomainError(f"--tol has no effect on {args.subcommand!r}")
        tolerances = {name: args.tol}
    options = {flag: getattr(args, flag) for flag in OPTION_FLAGS}
    graph_file = getattr(args, "graph_file", None)
    if graph_file is not None:
        if args.graph is not None and args.graph != graph_file:
            raise GraphDomainError(f"two graph inputs: {graph_file!r} and --graph {args.graph!r}")
        options["graph"] = graph_file
    mapping: dict[str, Any] = {
        "subcommand": args.subcommand,
        "family": args.family,
        "params": parse_params(args.params) if args.params else None,
        "size": args.size,
        "windows": args.windows,
        "method": args.method,
        "tolerances": tolerances,
        "seed": args.seed,
        "out": args.out,
        "csv": args.csv,
        "json": args.json,
        "options": {k: v for k, v in options.items() if v is not None} or None,
    }
    if args.config:
        return load_run_config(args.config, mapping)
    return build_run_config(mapping)


def _emit_csv(frame: pd.DataFrame, config: RunConfig) -> None:
    if config.csv:
        write_report_csv(frame, config.csv, provenance_fields(config))


def _emit_json(payload: dict[str, Any], config: RunConfig) -> None:
    if config.json:
        write_json_report(payload, config.json, config)


def _resolve_family(config: RunConfig) -> GraphFamily:
    if config.family is None:
        raise GraphDomainError(f"{config.subcommand} needs --family (or --graph)")
    if config.family == "surgery":
        plan_path = config.options.get("plan")
        if plan_path is None:
            raise GraphDomainError("--family surgery needs --plan")
        result = surgery(load_surgery_plan(plan_path), config.size)
        return family_of_graph(result.graph, "surgery")
    return family_from_name(config.family, config.params, config.size)


def _resolve_graph(config: RunConfig) -> tuple[FiniteGraph, str]:
    path = config.options.get("graph")
    if path is not None:
        return import_graph(path), f"file {path}"
    family = _resolve_family(config)
    window = truncate(family, config.size)
    return window.graph, f"{family.name} {family.params} n={window.order}"


def _checks_payload(checks: Sequence[BoundCheck]) -> list[dict[str, Any]]:
    return [{**asdict(c), "slack": c.slack} for c in checks]


def run_generate(config: RunConfig, logger: InfraLogger) -> int:
    """Write a family window as graph JSON; optional per-vertex CSV and validation."""
    family = _resolve_family(config)
    if not config.out:
        raise GraphDomainError("generate needs --out")
    g = export_family_window(family, config.size, config.out, provenance_fields(config))
    violations = validate(g) if config.options.get("check") else []
    _emit_csv(vertex_statistics_frame(g), config)
    _emit_json(
        {
            "family": family.name,
            "params": dict(family.params),
            "vertexCount": g.vertex_count,
            "edgeCount": g.edge_count,
            "violations": violations,
        },
        config,
    )
    logger.info(
        "graph_written",
        f"{family.name} window written to {config.out}",
        {"vertices": g.vertex_count, "edges": g.edge_count, "violations": len(violations)},
    )
    print(f"{family.name}: {g.vertex_count} vertices, {g.edge_count} edges -> {config.out}")
    for message in violations:
        print(f"violation: {message}")
    return EXIT_FAILURE if violations else EXIT_OK


def _spectrum_checks(config: RunConfig) -> list[str]:
    """Return the requested spectrum checks, deduplicated in request order."""
    raw = config.options.get("check")
    if raw is None or raw is False:
        return []
    names = [raw] if isinstance(raw, str) else raw
    if not isinstance(names, list) or any(name not in SPECTRUM_CHECKS for name in names):
        raise GraphDomainError(f"spectrum --check takes {'|'.join(SPECTRUM_CHECKS)}, got {raw!r}")
    return list(dict.fromkeys(names))


def run_spectrum(config: RunConfig, logger: InfraLogger) -> int:
    """Eigenvalues of one graph, or an unboundedness scan when windows are given."""
    if config.windows:
        family = _resolve_family(config)
        frame = unboundedness_scan(
            family,
            config.windows,
            logger,
            iterative_tol=config.tolerance("iterative", ITERATIVE_TOL),
        )
        violations = enclosure_violations(frame)
        _emit_csv(frame, config)
        _emit_json(
            {
                "family": family.name,
                "params": dict(family.params),
                "scan": frame.to_dict(orient="records"),
                "violations": violations,
            },
            config,
        )
        print(frame.to_string(index=False))
        return EXIT_FAILURE if violations else EXIT_OK

    g, graph_ref = _resolve_graph(config)
    tol_name = "iterative" if config.method == "iter" else "dense"
    report = spectral_report(
        adjacency_matrix(g),
        config.method,
        extremal=bool(config.options.get("extremal")),
        tol=config.tolerances.get(tol_name),
        graph_ref=graph_ref,
    )
    checks: list[BoundCheck] = []
    for name in _spectrum_checks(config):
        if name == "estbd":
            checks.extend(check_estbd_sandwich(g, report))
        elif name == "witness":
            checks.extend(check_rayleigh_witnesses(g, report.lambda_max))
        elif name == "discriminant":
            checks.extend(check_discriminant_inequality(g, C=max(SLACK_ABS, -report.lambda_min)))
        else:
            plan_path = config.options.get("plan")
            if plan_path is None:
                raise GraphDomainError("--check surgery needs --plan")
            result = surgery(load_surgery_plan(plan_path), config.size)
            checks.append(surgery_result_norm_check(result))
    extremes = {
        "size": g.vertex_count,
        "lambda_min": report.lambda_min,
        "lambda_max": report.lambda_max,
    }
    rows = [
        {**extremes, "check": c.name, "lhs": c.lhs, "rhs": c.rhs, "verdict": c.verdict}
        for c in checks
    ]
    _emit_csv(pd.DataFrame(rows or [extremes], columns=SPECTRUM_COLUMNS), config)
    _emit_json(
        {
            "spectrum": asdict(report),
            "lambda_min": report.lambda_min,
            "lambda_max": report.lambda_max,
            "checks": _checks_payload(checks),
        },
        config,
    )
    failing = [c for c in checks if not c.verdict]
    logger.info(
        "spectrum_done",
        f"{graph_ref} solved",
        {"method": report.method, "max_residual": report.max_residual, "failing": len(failing)},
    )
    print(
        f"{graph_ref}: λ_min={report.lambda_min:.12g} λ_max={report.lambda_max:.12g} "
        f"({report.method}, max residual {report.max_residual:.3e})"
    )
    for check in failing:
        print(f"failed: {check.name} at vertex {check.vertex} (slack {check.slack:.3e})")
    return EXIT_FAILURE if failing else EXIT_OK


def run_complexity(config: RunConfig, logger: InfraLogger) -> int:
    """Threshold sweeps of the local complexity ratio, with an optional star witness."""
    family = _resolve_family(config)
    windows = list(config.windows) or [truncate(family, config.size).order]
    thresholds = config.options.get("thresholds")
    reports = c_loc_estimate(
        family, windows, thresholds=None if thresholds == "auto" else thresholds, logger=logger
    )
    frames = [threshold_frame(reports)]
    trend = estimate_trend(reports)
    payload: dict[str, Any] = {
        "family": family.name,
        "params": dict(family.params),
        "estimate": reports[-1].estimate,
        "stated_limit": stated_complexity_limit(family),
        "trend": trend.to_dict(orient="records"),
    }
    if config.options.get("witness"):
        verdict = sub_complexity_witness(family, windows, logger=logger)
        witnesses = witness_frame(verdict)
        frames.append(witnesses)
        payload["witness"] = {
            "kind": verdict.kind,
            "max_order": verdict.max_order,
            "windows": witnesses.to_dict(orient="records"),
        }
        print(f"sub-complexity witness: {verdict.kind} (max star order {verdict.max_order})")
    # threshold rows leave the witness columns empty and vice versa
    table = pd.concat([f for f in frames if not f.empty] or frames[:1], ignore_index=True)
    for column in COMPLEXITY_INT_COLUMNS:
        if column in table:
            table[column] = table[column].astype("Int64")
    _emit_csv(table, config)
    _emit_json(payload, config)
    print(trend.to_string(index=False))
    return EXIT_OK


def _solve_deficiency(config: RunConfig) -> tuple[DeficiencySolution, list[BoundCheck]]:
    name = config.family or "ftree"
    alpha = float(config.options.get("alpha", config.params.get("alpha", 1.0)))
    default_window = JACOBI_DEFAULT_LENGTH if name == "jacobi" else DEFAULT_FTREE_WINDOW
    window = int(config.options.get("window", config.size or default_window))
    f0 = complex(*config.options.get("f0", (1.0, 0.0)))
    cauchy_tol = config.tolerance("cauchy", CAUCHY_INCREMENT_TOL)
    if name == "ftree":
        sol = f_tree_deficiency_vector(alpha, window, f0, cauchy_tol)
        return sol, list(ftree_increment_bound_check(sol))
    if name == "jacobi":
        return jacobi_deficiency_vector(alpha, window, f0, cauchy_tol), []
    raise GraphDomainError(f"deficiency solves 'ftree' or 'jacobi', not {name!r}")


def run_deficiency(config: RunConfig, logger: InfraLogger) -> int:
    """Deficiency-vector recursion with residual and tail diagnostics, or the Nelson check."""
    if config.options.get("nelson"):
        if not config.windows:
            raise GraphDomainError("--nelson needs --windows")
        family = _resolve_family(config)
        nelson = nelson_hypothesis_check(family, config.windows, logger)
        frame = nelson.frame()
        _emit_csv(frame, config)
        _emit_json(asdict(nelson), config)
        print(frame.to_string(index=False))
        print(
            f"degree gaps bounded: {nelson.degree_bounded}; "
            f"weight gaps bounded: {nelson.weight_bounded}"
        )
        return EXIT_OK

    sol, checks = _solve_deficiency(config)
    residual = deficiency_residual_check(sol, truncate(sol.family, sol.window))
    rel_tol = config.tolerance("residual", RESIDUAL_REL_TOL)
    residual_ok = residual.max_relative <= rel_tol
    _emit_csv(solution_frame(sol), config)
    _emit_json(
        {
            "family": sol.family.name,
            "params": dict(sol.family.params),
            "window": sol.window,
            "arithmetic": sol.arithmetic,
            "determined_vertices": sol.determined_vertices,
            "sup_norm": sol.sup_norm,
            "residual": asdict(residual),
            "tail": asdict(sol.tail),
            "checks": _checks_payload(checks),
        },
        config,
    )
    fit = sol.tail.fit
    logger.info(
        "deficiency_done",
        f"{sol.family.name} window {sol.window} solved",
        {
            "arithmetic": sol.arithmetic,
            "max_residual": residual.max_residual,
            "stabilization_index": sol.tail.stabilization_index,
            "exponent": fit.exponent,
        },
    )
    print(
        f"{sol.family.name} window {sol.window} ({sol.arithmetic}): "
        f"max residual {residual.max_residual:.3e} (relative {residual.max_relative:.3e}), "
        f"‖f‖² ≈ {sol.partial_l2[-1]:.12g}"
    )
    print(
        f"decay exponent {fit.exponent:.4f} [{fit.ci_low:.4f}, {fit.ci_high:.4f}], "
        f"stabilization index {sol.tail.stabilization_index}"
    )
    failing = [c for c in checks if not c.verdict]
    return EXIT_OK if residual_ok and not failing else EXIT_FAILURE


def run_witness(config: RunConfig, logger: InfraLogger) -> int:
    """Rayleigh witnesses on a graph or the subgraph induced by `--subset`."""
    g, graph_ref = _resolve_graph(config)
    subset = config.options.get("subset")
    if subset:
        g, reindex = induced_subgraph(g, subset)
        original = {new: old for old, new in reindex.items()}
    else:
        original = {x: x for x in range(g.vertex_count)}
    report = auto_extremal(adjacency_matrix(g), graph_ref=graph_ref)
    tol = config.tolerance("witness", WITNESS_TOL)
    rows = []
    for x in range(g.vertex_count):
        d = g.degree(x)
        if d == 0:
            continue
        value = rayleigh_witness(g, x)
        rows.append(
            {
                "vertex": original[x],
                "degree": d,
                "witness": value,
                "lambda_max": report.lambda_max,
                "sound": value <= report.lambda_max + tol,
            }
        )
    frame = pd.DataFrame(rows, columns=WITNESS_COLUMNS)
    checks: list[BoundCheck] = []
    if config.options.get("check"):
        checks = check_discriminant_inequality(g, C=max(SLACK_ABS, -report.lambda_min))
    unsound = int((~frame["sound"].astype(bool)).sum()) if len(frame) else 0
    best = frame.loc[frame["witness"].idxmax()] if len(frame) else None
    _emit_csv(frame, config)
    _emit_json(
        {
            "graph": graph_ref,
            "subset": subset,
            "lambda_max": report.lambda_max,
            "best_witness": None if best is None else float(best["witness"]),
            "best_vertex": None if best is None else int(best["vertex"]),
            "unsound": unsound,
            "checks": _checks_payload(checks),
        },
        config,
    )
    failing = [c for c in checks if not c.verdict]
    logger.info(
        "witness_done",
        f"{len(frame)} witnesses on {graph_ref}",
        {"lambda_max": report.lambda_max, "unsound": unsound, "failing": len(failing)},
    )
    if best is not None:
        print(
            f"best witness {best['witness']:.12g} at vertex {int(best['vertex'])}; "
            f"λ_max {report.lambda_max:.12g}"
        )
    return EXIT_FAILURE if unsound or failing else EXIT_OK


def run_verify(config: RunConfig, logger: InfraLogger) -> int:
    """Run the acceptance suite and print its table."""
    suite = run_verify_suite(config, logger, only=config.options.get("criteria"))
    print(suite.table())
    _emit_json(suite.to_json_dict(), config)
    _emit_csv(pd.DataFrame([asdict(c) for c in suite.criteria]), config)
    return suite.exit_code


HANDLERS: dict[str, Handler] = {
    "generate": run_generate,
    "spectrum": run_spectrum,
    "complexity": run_complexity,
    "deficiency": run_deficiency,
    "witness": run_witness,
    "verify": run_verify,
}


if __name__ == "__main__":
    raise SystemExit(main())
