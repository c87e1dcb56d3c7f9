"""
Purpose
-------
Generators for infinite families assembled from consecutive finite blocks:
the star-clique chain `∪_n S_{αn+1}K_n`, the disjoint stars `∪_n S_n`, and
the chained hubs of cliques `∪_n K_{k,n}`.

Key behaviors
-------------
- Blocks are laid out consecutively in the canonical order, hub first within
  each block; block offsets have closed forms and a vertex is located by
  binary search over them.
- Chained families join consecutive hubs `x_n ∼ x_{n+1}` with weight 1.
- Landmark helpers return the index of the hub of block `n`.

Conventions
-----------
- Star-clique block `n >= 1`: hub, then `αn` star leaves, then `n` vertices
  forming `K_n` (block 1's `K_1` has no clique edge). The hub is adjacent to
  all `αn + n` block vertices.
- Disjoint-star block `j >= 0` is `S_{start+j}`; no edges between blocks.
- Chained `K_{k,n}` block `n >= 1` is `hub_of_cliques(k, n)`.

Downstream usage
----------------
Complexity estimates, sub-complexity witnesses and unboundedness scans take
these families; `star_clique_hub_index` addresses the hub `x_n` directly.
"""

from dataclasses import dataclass
from typing import Callable

from graphs.generators.finite_families import hub_clique_block
from graphs.generators.generators_config import DEFAULT_BLOCK_WINDOW
from graphs.generators.param_checks import require_int
from graphs.graph_core.graph_core_types import NeighborList
from graphs.graph_core.graph_family import GraphFamily


@dataclass(frozen=True)
class BlockLayout:
    """
    Purpose
    -------
    Consecutive layout of blocks `first, first+1, ...` in a canonical order.

    Parameters
    ----------
    first : int
        Index of the first block.
    offset : Callable[[int], int]
        Closed-form index of the first vertex (the hub) of block `b`;
        `offset(first) == 0` and strictly increasing.
    """

    first: int
    offset: Callable[[int], int]

    def locate(self, x: int) -> tuple[int, int]:
        """Return `(block, position within block)` of vertex `x`."""
        lo, hi = self.first, self.first + 1
        while self.offset(hi) <= x:
            lo, hi = hi, self.first + 2 * (hi - self.first)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.offset(mid) <= x:
                lo = mid
            else:
                hi = mid
        return lo, x - self.offset(lo)


def _block_family(
    name: str,
    params: dict[str, int],
    layout: BlockLayout,
    local_neighbors: Callable[[int, int], list[int]],
    chained: bool,
) -> GraphFamily:
    def neighbors(x: int) -> NeighborList:
        block, position = layout.locate(x)
        base = layout.offset(block)
        found = [(base + p, 1.0) for p in local_neighbors(block, position)]
        if chained and position == 0:
            if block > layout.first:
                found.append((layout.offset(block - 1), 1.0))
            found.append((layout.offset(block + 1), 1.0))
        return sorted(found)

    return GraphFamily(
        name=name,
        params=params,
        neighbor_fn=neighbors,
        default_window=DEFAULT_BLOCK_WINDOW,
    )


def star_clique_hub_index(alpha: int, n: int) -> int:
    """Return the index of hub `x_n` in `chained_star_cliques(alpha)`."""
    return (n - 1) + (alpha + 1) * (n - 1) * n // 2


def chained_star_cliques(alpha: int) -> GraphFamily:
    """
    Build the star-clique chain: blocks `S_{αn+1}K_n`, `n >= 1`, hubs chained.

    Parameters
    ----------
    alpha : int
        Star multiplier, integer `>= 1`.

    Returns
    -------
    GraphFamily
        Infinite family; hub `x_n` has degree `(α+1)n` plus its chain
        neighbors, and `triangle_count(x_n) = n(n-1)`.

    Raises
    ------
    GraphDomainError
        If `alpha` is not an integer `>= 1`.

    Notes
    -----
    - `N(x_n)/d(x_n)^2 → 1/(1+α)^2`.
    """

    require_int("alpha", alpha, 1)
    layout = BlockLayout(first=1, offset=lambda n: star_clique_hub_index(alpha, n))

    def local(n: int, position: int) -> list[int]:
        size = (alpha + 1) * n
        if position == 0:
            return list(range(1, size + 1))
        clique_start = alpha * n + 1
        if position < clique_start:
            return [0]
        return [0] + [p for p in range(clique_start, size + 1) if p != position]

    return _block_family("skn", {"alpha": alpha}, layout, local, chained=True)


def disjoint_stars(start: int = 2) -> GraphFamily:
    """
    Build the disjoint union of stars `S_start, S_{start+1}, ...`.

    Parameters
    ----------
    start : int
        Order of the first star, `>= 2`.

    Returns
    -------
    GraphFamily
        Infinite family with hub-first blocks and no edges between blocks.
    """

    require_int("start", start, 2)
    layout = BlockLayout(first=0, offset=lambda j: j * start + j * (j - 1) // 2)

    def local(j: int, position: int) -> list[int]:
        if position == 0:
            return list(range(1, start + j))
        return [0]

    return _block_family("stars", {"start": start}, layout, local, chained=False)


def hub_clique_hub_index(k: int, n: int) -> int:
    """Return the index of the hub of block `K_{k,n}` in `chained_hub_cliques(k)`."""
    return (n - 1) + k * (n - 1) * n // 2


def chained_hub_cliques(k: int) -> GraphFamily:
    """
    Build the chain of blocks `K_{k,n}`, `n >= 1`, with hubs joined `x_n ∼ x_{n+1}`.

    Parameters
    ----------
    k : int
        Number of clique copies per block, `>= 1`.

    Returns
    -------
    GraphFamily
        Infinite family; equal to the surgery of the blocks with unit chain
        cross edges and row bound 2.
    """

    require_int("k", k, 1)
    layout = BlockLayout(first=1, offset=lambda n: hub_clique_hub_index(k, n))

    def local(n: int, position: int) -> list[int]:
        if position == 0:
            return list(range(1, k * n + 1))
        return [0] + [p for p in hub_clique_block(n, position) if p != position]

    return _block_family("chained-kkn", {"k": k}, layout, local, chained=True)
