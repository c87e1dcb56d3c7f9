"""
Purpose
-------
Provenance fields attached to every output and deterministic sub-seeds.

Key behaviors
-------------
- `provenance_fields(config)`: ordered `tool_version`, `config_hash`, `seed`.
- `derive_seed(seed, label)`: SHA-256 of `"<seed>:<label>"` reduced to 64
  bits, so each consumer of randomness has its own reproducible stream.
- `rng_for(seed, label)`: `numpy.random.default_rng(derive_seed(...))`.
- `write_json_report(payload, path, config)`: strict JSON with a
  `provenance` object; NaN and infinities become `null`.

Downstream usage
----------------
`cli.main` (CSV headers and JSON outputs), `cli.random_graphs` and
`cli.verify_suite` (per-criterion generators).
"""

import hashlib
import json
import math
from pathlib import Path
from typing import Any

import numpy as np

from cli.cli_config import TOOL_VERSION
from cli.run_config import RunConfig, config_hash
from graphs.graph_core.graph_core_config import GRAPH_FILE_ENCODING


def provenance_fields(config: RunConfig) -> dict[str, Any]:
    return {
        "tool_version": TOOL_VERSION,
        "config_hash": config_hash(config),
        "seed": config.seed,
    }


def derive_seed(seed: int, label: str) -> int:
    digest = hashlib.sha256(f"{seed}:{label}".encode("utf-8")).hexdigest()
    return int(digest, 16) % (2**64)


def rng_for(seed: int, label: str) -> np.random.Generator:
    return np.random.default_rng(derive_seed(seed, label))


def write_json_report(payload: dict[str, Any], path: str | Path, config: RunConfig) -> None:
    """Write `payload` plus a `provenance` object as indented JSON."""
    document = dict(payload)
    document["provenance"] = provenance_fields(config)
    text = json.dumps(_jsonable(document), indent=2, sort_keys=True, allow_nan=False)
    Path(path).write_text(text + "\n", encoding=GRAPH_FILE_ENCODING)


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)
