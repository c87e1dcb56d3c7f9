"""
Purpose
-------
Provide configuration constants shared by the graph-family generators and the
surgery combinator.

Key behaviors
-------------
- Caps the number of vertices a word-tree window may contain
  (`WORD_TREE_VERTEX_CAP`).
- Fixes the default cross-edge weight of CLI-built surgery plans
  (`DEFAULT_SURGERY_WEIGHT`) and the default anchor row bound
  (`DEFAULT_ROW_BOUND`).
- Bounds the denominator used to read a real exponent `alpha + 2` as a
  rational for the exact fTree interval endpoints
  (`EXPONENT_MAX_DENOMINATOR`).
- Provides default windows for infinite families built from the CLI without
  an explicit size (`DEFAULT_FTREE_WINDOW`, `DEFAULT_JACOBI_LENGTH`,
  `DEFAULT_WORD_TREE_DEPTH`, `DEFAULT_BLOCK_WINDOW`).

Conventions
-----------
- Windows are vertex counts of the canonical order, never limits.
- Weight 1 across surgery anchors matches the unit cross edges of the
  chained `K_{k,n}` construction.

Downstream usage
----------------
Import these constants as read-only configuration in `graphs.generators.*`
and in the CLI defaults.
"""

WORD_TREE_VERTEX_CAP: int = 2_000_000
DEFAULT_SURGERY_WEIGHT: float = 1.0
DEFAULT_ROW_BOUND: float = 2.0
EXPONENT_MAX_DENOMINATOR: int = 1000
DEFAULT_FTREE_WINDOW: int = 10_000
DEFAULT_JACOBI_LENGTH: int = 1_000
DEFAULT_WORD_TREE_DEPTH: int = 3
DEFAULT_BLOCK_WINDOW: int = 400
