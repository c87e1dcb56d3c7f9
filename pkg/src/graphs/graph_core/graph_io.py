"""
Purpose
-------
Read and write graphs in the bit-strict JSON format and write tabular reports
as CSV with a provenance header.

Key behaviors
-------------
- `export_graph` / `export_family_window` write
  `{"vertexCount": N, "labels": [...], "edges": [[i, j, w], ...]}` plus an
  optional `provenance` object.
- `import_graph` parses a file strictly: malformed JSON is reported with line
  and column, duplicate pairs and `i >= j` edges are rejected by name, and the
  result must pass `validate`.
- `vertex_statistics_frame` builds the per-vertex table
  `vertex,degree,triangles,ratio`.
- `write_report_csv` writes any pandas frame behind `# key=value` header
  lines; `read_report_csv` reads it back with `comment="#"`.

Conventions
-----------
- Files are UTF-8, one graph object per file.
- Edges are written in the canonical `(i, j)` order of `FiniteGraph.edges`,
  so export → import is the identity.
- Weights are written as JSON numbers (shortest round-trip repr).

Downstream usage
----------------
The CLI `generate` subcommand writes graphs through `export_family_window`;
`spectrum` and `witness` read them with `import_graph`. Every CSV report in
the toolkit goes through `write_report_csv`.
"""

import json
from pathlib import Path
from typing import Any, Iterable, Mapping

import pandas as pd

from graphs.graph_core.finite_graph import (
    FiniteGraph,
    build_finite_graph,
    triangle_count,
    validate,
)
from graphs.graph_core.graph_core_config import GRAPH_FILE_ENCODING, GRAPH_JSON_KEYS
from graphs.graph_core.graph_errors import GraphFormatError
from graphs.graph_core.graph_family import GraphFamily, truncate


def graph_to_json_dict(g: FiniteGraph, provenance: Mapping[str, Any] | None = None) -> dict:
    """
    Convert a graph into the JSON-ready file object.

    Parameters
    ----------
    g : FiniteGraph
        Graph to serialize.
    provenance : Mapping[str, Any] | None
        Optional provenance fields stored under `provenance`.

    Returns
    -------
    dict
        Object with `vertexCount`, `edges`, and `labels` when the graph has
        labels.
    """

    payload: dict[str, Any] = {
        "vertexCount": g.vertex_count,
        "edges": [[i, j, w] for i, j, w in g.edges],
    }
    if g.labels is not None:
        payload["labels"] = list(g.labels)
    if provenance is not None:
        payload["provenance"] = dict(provenance)
    return payload


def export_graph(
    g: FiniteGraph, path: str | Path, provenance: Mapping[str, Any] | None = None
) -> None:
    """Write `g` to `path` in the graph JSON format."""
    text = json.dumps(graph_to_json_dict(g, provenance), ensure_ascii=False)
    Path(path).write_text(text + "\n", encoding=GRAPH_FILE_ENCODING)


def export_family_window(
    family: GraphFamily,
    size: int | None,
    path: str | Path,
    provenance: Mapping[str, Any] | None = None,
) -> FiniteGraph:
    """
    Truncate a family and write the window graph to `path`.

    Parameters
    ----------
    family : GraphFamily
        Family to export.
    size : int | None
        Window size (defaults as in `truncate`).
    path : str | Path
        Destination file.
    provenance : Mapping[str, Any] | None
        Optional provenance; the family name and parameters are added to it.

    Returns
    -------
    FiniteGraph
        The exported window graph.
    """

    window = truncate(family, size)
    meta: dict[str, Any] = dict(provenance or {})
    meta.update({"family": family.name, "params": dict(family.params), "size": window.order})
    export_graph(window.graph, path, meta)
    return window.graph


def graph_from_json_dict(payload: Any) -> FiniteGraph:
    """
    Build a graph from a parsed JSON object, enforcing the strict format.

    Parameters
    ----------
    payload : Any
        Result of `json.loads` on a graph file.

    Returns
    -------
    FiniteGraph
        Validated graph.

    Raises
    ------
    GraphFormatError
        On missing or unknown keys, wrongly typed fields, edges not stored as
        `i < j`, duplicate pairs, or any `validate` violation.
    """

    if not isinstance(payload, dict):
        raise GraphFormatError("graph file must contain one JSON object")
    unknown = set(payload) - GRAPH_JSON_KEYS
    if unknown:
        raise GraphFormatError(f"unknown keys in graph file: {sorted(unknown)}")
    if "vertexCount" not in payload or "edges" not in payload:
        raise GraphFormatError("graph file requires 'vertexCount' and 'edges'")
    vertex_count = payload["vertexCount"]
    if not _is_int(vertex_count) or vertex_count < 0:
        raise GraphFormatError(f"vertexCount must be a non-negative integer, got {vertex_count!r}")
    raw_edges = payload["edges"]
    if not isinstance(raw_edges, list):
        raise GraphFormatError("'edges' must be a list of [i, j, w] triples")

    edges: list[tuple[int, int, float]] = []
    seen: set[tuple[int, int]] = set()
    for position, raw in enumerate(raw_edges):
        if not (isinstance(raw, list) and len(raw) == 3):
            raise GraphFormatError(f"edge #{position} is not an [i, j, w] triple: {raw!r}")
        i, j, w = raw
        if not (_is_int(i) and _is_int(j)) or not _is_number(w):
            raise GraphFormatError(f"edge #{position} has non-numeric fields: {raw!r}")
        if i >= j:
            raise GraphFormatError(f"edge ({i}, {j}) must be stored with i < j")
        if (i, j) in seen:
            raise GraphFormatError(f"duplicate edge ({i}, {j})")
        seen.add((i, j))
        edges.append((i, j, float(w)))

    labels = payload.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or any(
            lab is not None and not isinstance(lab, str) for lab in labels
        ):
            raise GraphFormatError("'labels' must be a list of strings or nulls")
        if len(labels) != vertex_count:
            raise GraphFormatError(f"{len(labels)} labels for {vertex_count} vertices")

    g = build_finite_graph(vertex_count, edges, labels)
    violations = validate(g)
    if violations:
        raise GraphFormatError("graph file violates invariants: " + "; ".join(violations))
    return g


def import_graph(path: str | Path) -> FiniteGraph:
    """
    Read a graph JSON file.

    Parameters
    ----------
    path : str | Path
        File to read.

    Returns
    -------
    FiniteGraph
        Validated graph, equal to the exported one for files written by
        `export_graph`.

    Raises
    ------
    GraphFormatError
        On malformed JSON (message carries line and column) or any format
        violation.
    """

    text = Path(path).read_text(encoding=GRAPH_FILE_ENCODING)
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(
            f"malformed graph JSON in {path} at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return graph_from_json_dict(payload)


def vertex_statistics_frame(g: FiniteGraph, vertices: Iterable[int] | None = None) -> pd.DataFrame:
    """
    Tabulate degree, oriented triangle count and ratio per vertex.

    Parameters
    ----------
    g : FiniteGraph
        Graph to summarize.
    vertices : Iterable[int] | None
        Vertices to include (default: all), reported in ascending order.

    Returns
    -------
    pandas.DataFrame
        Columns `vertex, degree, triangles, ratio`; `ratio` is NaN for isolated
        vertices.
    """

    chosen = sorted(range(g.vertex_count) if vertices is None else set(vertices))
    rows = []
    for x in chosen:
        d = g.degree(x)
        t = triangle_count(g, x)
        rows.append({"vertex": x, "degree": d, "triangles": t, "ratio": t / d**2 if d else None})
    frame = pd.DataFrame(rows, columns=["vertex", "degree", "triangles", "ratio"])
    frame["ratio"] = frame["ratio"].astype(float)
    return frame


def write_report_csv(
    frame: pd.DataFrame, path: str | Path, header: Mapping[str, Any] | None = None
) -> None:
    """
    Write a report table as CSV behind `# key=value` header lines.

    Parameters
    ----------
    frame : pandas.DataFrame
        Table to write (index is dropped).
    path : str | Path
        Destination file.
    header : Mapping[str, Any] | None
        Provenance fields, one comment line each, in the given order.
    """

    with open(path, "w", encoding=GRAPH_FILE_ENCODING, newline="") as handle:
        for key, value in (header or {}).items():
            handle.write(f"# {key}={value}\n")
        frame.to_csv(handle, index=False)


def read_report_csv(path: str | Path) -> pd.DataFrame:
    """Read a CSV written by `write_report_csv`, skipping header comments."""
    return pd.read_csv(path, comment="#")


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)
