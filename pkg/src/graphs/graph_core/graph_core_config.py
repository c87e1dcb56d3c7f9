"""
Purpose
-------
Provide configuration constants for graph validation and graph file I/O.

Key behaviors
-------------
- Fixes the smallest admissible edge weight (`WEIGHT_FLOOR`).
- Fixes the text encoding of graph JSON files and report CSVs
  (`GRAPH_FILE_ENCODING`).
- Lists the keys a graph JSON object may carry (`GRAPH_JSON_KEYS`).

Conventions
-----------
- Weights at or below `WEIGHT_FLOOR` are violations, not zeros: an absent pair
  is the only way to express weight 0.
- `provenance` is accepted on import and ignored; any other unknown key is a
  format error.

Downstream usage
----------------
Import these constants as read-only configuration:

    from graphs.graph_core.graph_core_config import WEIGHT_FLOOR
"""

WEIGHT_FLOOR: float = 1e-12
GRAPH_FILE_ENCODING: str = "utf-8"
GRAPH_JSON_KEYS: frozenset[str] = frozenset({"vertexCount", "labels", "edges", "provenance"})
