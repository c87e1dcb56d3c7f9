"""
Purpose
-------
Generators for the two rooted trees: the word tree with increment `M` and the
F-tree built from `F(x) = (x+1)^(α+2)`.

Key behaviors
-------------
- `word_tree(M, max_len)`: vertices are words whose `j`-th letter ranges over
  an alphabet of `j*M` letters; a word of length `K` has `(K+1)*M` children.
  Vertices are numbered in level (BFS) order with children of a word
  contiguous, so parents, children and letters are computed arithmetically.
- `f_tree(alpha, max_vertex, connected)`: vertex 0 is the root and `n < m`
  are adjacent iff `m ∈ [F(n), F(n+1))`; with `connected=True` the chain
  edges `n ∼ n+1` for `n >= 1` are added.
- Both trees are infinite; the window parameter becomes the family's
  `default_window`, so vertices at the edge of the window are boundary
  (their degree is deflated) and are excluded from interior statistics.

Conventions
-----------
- Integer interval endpoints: `start(n) = ceil(F(n))`. The exponent `α + 2`
  is read as a rational `p/q` (denominator at most
  `EXPONENT_MAX_DENOMINATOR`) and `start(n)` is the least integer `c` with
  `c^q >= (n+1)^p`, so perfect powers never suffer float rounding.
- Word labels are the letters joined by "." (root label is the empty string).

Downstream usage
----------------
Deficiency probes rely on `f_tree_children_interval` / `f_tree_parent`;
spectral scans use `word_tree_level_offset` to pick windows ending at a depth.
"""

import math
from fractions import Fraction
from functools import lru_cache

from graphs.generators.generators_config import EXPONENT_MAX_DENOMINATOR, WORD_TREE_VERTEX_CAP
from graphs.generators.param_checks import require_int, require_real
from graphs.graph_core.graph_core_types import NeighborList
from graphs.graph_core.graph_errors import ConstructionError, GraphDomainError
from graphs.graph_core.graph_family import GraphFamily


def word_tree_level_size(M: int, level: int) -> int:
    """Return the number of words of length `level`: `Π_{j=1..level} j*M`."""
    return math.prod(j * M for j in range(1, level + 1))


def word_tree_level_offset(M: int, level: int) -> int:
    """Return the index of the first word of length `level` (= number of shorter words)."""
    return sum(word_tree_level_size(M, j) for j in range(level))


def _word_tree_position(M: int, x: int) -> tuple[int, int]:
    level, start = 0, 0
    size = 1
    while x >= start + size:
        start += size
        level += 1
        size *= level * M
    return level, x - start


def word_tree(M: int, max_len: int) -> GraphFamily:
    """
    Build the word tree with increment `M`, windowed at words of length `<= max_len`.

    Parameters
    ----------
    M : int
        Alphabet increment, `>= 1`.
    max_len : int
        Longest word in the default window, `>= 1`.

    Returns
    -------
    GraphFamily
        Infinite family; `default_window` is the number of words of length at
        most `max_len`.

    Raises
    ------
    GraphDomainError
        On invalid parameters.
    ConstructionError
        If the window would exceed `WORD_TREE_VERTEX_CAP` vertices.

    Notes
    -----
    - Root degree is `M`; a word of length `K >= 1` has degree `(K+1)*M + 1`.
    """

    require_int("M", M, 1)
    require_int("max_len", max_len, 1)
    window = word_tree_level_offset(M, max_len + 1)
    if window > WORD_TREE_VERTEX_CAP:
        raise ConstructionError(
            f"word tree M={M}, max_len={max_len} has {window} vertices, "
            f"above the cap {WORD_TREE_VERTEX_CAP}"
        )

    def neighbors(x: int) -> NeighborList:
        level, rank = _word_tree_position(M, x)
        found: NeighborList = []
        if level > 0:
            parent_rank = rank // (level * M)
            found.append((word_tree_level_offset(M, level - 1) + parent_rank, 1.0))
        fanout = (level + 1) * M
        child_start = word_tree_level_offset(M, level + 1) + rank * fanout
        found.extend((child_start + c, 1.0) for c in range(fanout))
        return found

    def degree(x: int) -> int:
        level, _ = _word_tree_position(M, x)
        return M if level == 0 else (level + 1) * M + 1

    def label(x: int) -> str:
        level, rank = _word_tree_position(M, x)
        letters = []
        for j in range(level, 0, -1):
            rank, letter = divmod(rank, j * M)
            letters.append(letter)
        return ".".join(str(letter) for letter in reversed(letters))

    return GraphFamily(
        name="wordtree",
        params={"M": M, "max_len": max_len},
        neighbor_fn=neighbors,
        default_window=window,
        degree_fn=degree,
        label_fn=label,
    )


@lru_cache(maxsize=64)
def _rational_exponent(alpha: float) -> Fraction:
    return Fraction(alpha + 2).limit_denominator(EXPONENT_MAX_DENOMINATOR)


def f_tree_start(alpha: float, n: int) -> int:
    """
    Return `ceil(F(n))`, the first child of `n`, with `F(x) = (x+1)^(α+2)`.

    Parameters
    ----------
    alpha : float
        Exponent parameter, `> 0`.
    n : int
        Vertex index, `>= 0`.

    Returns
    -------
    int
        Least integer `c` with `c >= (n+1)^(α+2)`.
    """

    exponent = _rational_exponent(alpha)
    p, q = exponent.numerator, exponent.denominator
    target = (n + 1) ** p
    c = math.ceil((n + 1) ** float(exponent))
    while c > 1 and (c - 1) ** q >= target:
        c -= 1
    while c**q < target:
        c += 1
    return c


def f_tree_children_interval(alpha: float, n: int) -> range:
    """Return the children of `n`: the integers in `[F(n), F(n+1))`."""
    return range(f_tree_start(alpha, n), f_tree_start(alpha, n + 1))


def f_tree_parent(alpha: float, m: int) -> int:
    """
    Return the unique parent `n < m` of vertex `m >= 1`.

    Raises
    ------
    GraphDomainError
        If `m < 1` (the root has no parent).
    """

    if m < 1:
        raise GraphDomainError(f"vertex {m} has no parent in the F-tree")
    n = max(int(m ** (1.0 / float(_rational_exponent(alpha)))) - 1, 0)
    while f_tree_start(alpha, n + 1) <= m:
        n += 1
    while n > 0 and f_tree_start(alpha, n) > m:
        n -= 1
    return n


def f_tree_degree(alpha: float, n: int, connected: bool = False) -> int:
    """
    Return the degree of `n` in the F-tree (optionally with chain edges).

    Notes
    -----
    - Tree part: children count plus one parent for `n >= 1`.
    - Chain part: `n = 1` gains one neighbor (2), `n >= 2` gains two.
    """

    children = f_tree_start(alpha, n + 1) - f_tree_start(alpha, n)
    tree = children + (1 if n >= 1 else 0)
    if not connected:
        return tree
    return tree + (0 if n == 0 else 1 if n == 1 else 2)


def f_tree(alpha: float, max_vertex: int, connected: bool = False) -> GraphFamily:
    """
    Build the F-tree with `F(x) = (x+1)^(α+2)`, windowed at vertices `0..max_vertex`.

    Parameters
    ----------
    alpha : float
        Growth exponent, `> 0`.
    max_vertex : int
        Last vertex of the default window; must be at least `F(1) = 2^(α+2)`.
    connected : bool
        Add the chain edges `n ∼ n+1` for `n >= 1`.

    Returns
    -------
    GraphFamily
        Infinite family with window-aware neighbor and closed-form degree
        functions, so windows never enumerate the huge child intervals of
        late vertices.

    Raises
    ------
    GraphDomainError
        On invalid parameters.

    Notes
    -----
    - Every `m >= 1` has exactly one parent; the intervals tile `[1, ∞)`.
    - `d(n) - 1 ~ (α+2)(n+1)^(α+1)` for the tree.
    """

    require_real("alpha", alpha, 0.0)
    require_int("max_vertex", max_vertex, 1)
    if max_vertex < 2 ** (alpha + 2):
        raise GraphDomainError(
            f"max_vertex must be at least F(1) = {2 ** (alpha + 2):.6g}, got {max_vertex}"
        )

    def within(x: int, limit: int) -> NeighborList:
        found: NeighborList = []
        if x >= 1:
            found.append((f_tree_parent(alpha, x), 1.0))
        start = f_tree_start(alpha, x)
        stop = min(f_tree_start(alpha, x + 1), limit)
        found.extend((m, 1.0) for m in range(start, stop))
        if connected:
            if x >= 2:
                found.append((x - 1, 1.0))
            if x >= 1:
                found.append((x + 1, 1.0))
        return [(y, w) for y, w in found if y < limit]

    def neighbors(x: int) -> NeighborList:
        return within(x, f_tree_start(alpha, x + 1) + 1)

    return GraphFamily(
        name="ftree",
        params={"alpha": alpha, "max_vertex": max_vertex, "connected": connected},
        neighbor_fn=neighbors,
        default_window=max_vertex + 1,
        window_neighbor_fn=within,
        degree_fn=lambda x: f_tree_degree(alpha, x, connected),
    )
