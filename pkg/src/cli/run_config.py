"""
Purpose
-------
Validated run configuration shared by every subcommand, and its hash.

Key behaviors
-------------
- `build_run_config(mapping)` accepts parsed CLI flags or a JSON config
  object, rejects unknown keys and non-positive tolerances, and normalises
  sequences to tuples.
- `load_run_config(path)` reads a JSON config file.
- `config_hash(config)` is the SHA-256 of the canonical JSON (sorted keys)
  of the configuration without its output paths.

Conventions
-----------
- Tolerance overrides live in `tolerances` (name to positive float); the
  recognised names are the keys of `TOLERANCE_NAMES`.
- Output paths do not enter the hash, so the same computation written to
  different files has one hash.

Downstream usage
----------------
`cli.main` builds one `RunConfig` per invocation; `cli.verify_suite` reads
its seed and tolerance overrides.
"""

import hashlib
import json
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Mapping

from cli.cli_config import DEFAULT_SEED
from graphs.graph_core.graph_core_config import GRAPH_FILE_ENCODING
from graphs.graph_core.graph_errors import GraphDomainError, GraphFormatError

TOLERANCE_NAMES: frozenset[str] = frozenset(
    {"dense", "iterative", "slack_abs", "witness", "residual", "cauchy"}
)
OUTPUT_KEYS: frozenset[str] = frozenset({"out", "csv", "json"})
MERGED_KEYS: frozenset[str] = frozenset({"params", "tolerances", "options"})


@dataclass(frozen=True)
class RunConfig:
    """
    Purpose
    -------
    Everything a subcommand needs to reproduce its output.

    Attributes
    ----------
    subcommand : str
        One of `generate`, `spectrum`, `complexity`, `deficiency`, `witness`,
        `verify`.
    family : str | None
        Registry name of the family.
    params : dict[str, Any]
        Family parameters.
    size : int | None
        Window size.
    windows : tuple[int, ...]
        Window sizes for sweeps.
    method : str
        `"dense"` or `"iter"`.
    tolerances : dict[str, float]
        Tolerance overrides.
    seed : int
        Run seed for random-graph criteria.
    out, csv, json : str | None
        Output paths.
    options : dict[str, Any]
        Subcommand-specific inputs (`graph`, `plan`, `subset`, `thresholds`,
        `alpha`, `window`, `f0`, `check`, `extremal`, `witness`, `nelson`,
        `criteria`); they enter the hash like every other input.
    """

    subcommand: str
    family: str | None = None
    params: dict[str, Any] = field(default_factory=dict)
    size: int | None = None
    windows: tuple[int, ...] = ()
    method: str = "dense"
    tolerances: dict[str, float] = field(default_factory=dict)
    seed: int = DEFAULT_SEED
    out: str | None = None
    csv: str | None = None
    json: str | None = None
    options: dict[str, Any] = field(default_factory=dict)

    def tolerance(self, name: str, default: float) -> float:
        return self.tolerances.get(name, default)


def build_run_config(mapping: Mapping[str, Any]) -> RunConfig:
    """
    Validate a mapping and build a `RunConfig`.

    Parameters
    ----------
    mapping : Mapping[str, Any]
        Keys are `RunConfig` field names; None values fall back to defaults.

    Returns
    -------
    RunConfig
        Frozen configuration.

    Raises
    ------
    GraphDomainError
        On unknown keys, a missing subcommand, an unknown method or tolerance
        name, a non-positive tolerance, or a negative seed.
    """

    known = {f.name for f in fields(RunConfig)}
    unknown = sorted(set(mapping) - known)
    if unknown:
        raise GraphDomainError(f"unknown configuration keys {unknown}")
    values = {key: value for key, value in mapping.items() if value is not None}
    if "subcommand" not in values:
        raise GraphDomainError("configuration needs a subcommand")
    if values.get("method", "dense") not in ("dense", "iter"):
        raise GraphDomainError(f"method must be 'dense' or 'iter', got {values['method']!r}")
    tolerances = dict(values.get("tolerances", {}))
    for name, tol in tolerances.items():
        if name not in TOLERANCE_NAMES:
            raise GraphDomainError(
                f"unknown tolerance {name!r}; expected one of {sorted(TOLERANCE_NAMES)}"
            )
        if isinstance(tol, bool) or not isinstance(tol, (int, float)) or not tol > 0:
            raise GraphDomainError(f"tolerance {name!r} must be positive, got {tol!r}")
    values["tolerances"] = {name: float(tol) for name, tol in tolerances.items()}
    seed = values.get("seed", DEFAULT_SEED)
    if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
        raise GraphDomainError(f"seed must be a non-negative integer, got {seed!r}")
    values["windows"] = tuple(int(w) for w in values.get("windows", ()))
    values["params"] = dict(values.get("params", {}))
    values["options"] = {k: v for k, v in dict(values.get("options", {})).items() if v is not None}
    return RunConfig(**values)


def load_run_config(path: str | Path, overrides: Mapping[str, Any] | None = None) -> RunConfig:
    """
    Read a JSON config file, apply non-None overrides, and validate.

    Notes
    -----
    - `params`, `tolerances` and `options` overrides are merged key by key
      into the file's values; other keys replace them.
    """
    text = Path(path).read_text(encoding=GRAPH_FILE_ENCODING)
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(
            f"config {path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(payload, dict):
        raise GraphFormatError(f"config {path}: top level must be an object")
    merged = dict(payload)
    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if key in MERGED_KEYS and isinstance(merged.get(key), dict):
            merged[key] = {**merged[key], **value}
        else:
            merged[key] = value
    return build_run_config(merged)


def config_hash(config: RunConfig) -> str:
    """Return the SHA-256 hex digest of the canonical JSON of `config`."""
    payload = {k: v for k, v in asdict(config).items() if k not in OUTPUT_KEYS}
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
