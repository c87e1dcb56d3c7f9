"""
Purpose
-------
Generators for the finite families: complete graphs `K_n`, stars `S_n` and
hubs of cliques `K_{k,n}`.

Key behaviors
-------------
- Each generator validates its parameters and returns a finite
  `GraphFamily` whose neighbor function is closed-form.
- `hub_clique_block` exposes the copy layout of `K_{k,n}` for callers that
  need to address one clique copy.

Conventions
-----------
- All weights are 1.
- Canonical orders are hub first: the star hub and the `K_{k,n}` hub are
  vertex 0. In `K_{k,n}` copy `c` (0-based) occupies `1 + c*n .. (c+1)*n`.
- `K_{k,n}` has `k*n + 1` vertices (k disjoint copies of `K_n` plus the hub).

Downstream usage
----------------
Use these families directly, through `family_registry.family_from_name`, or
as surgery parts.
"""

from graphs.generators.param_checks import require_int
from graphs.graph_core.graph_core_types import NeighborList
from graphs.graph_core.graph_family import GraphFamily


def complete_graph(n: int) -> GraphFamily:
    """
    Build `K_n`: `n` vertices, every pair adjacent with weight 1.

    Parameters
    ----------
    n : int
        Number of vertices, `n >= 1`.

    Returns
    -------
    GraphFamily
        Finite family of size `n`.

    Raises
    ------
    GraphDomainError
        If `n < 1`.
    """

    require_int("n", n, 1)

    def neighbors(x: int) -> NeighborList:
        return [(y, 1.0) for y in range(n) if y != x]

    return GraphFamily(
        name="complete",
        params={"n": n},
        neighbor_fn=neighbors,
        size=n,
        degree_fn=lambda x: n - 1,
    )


def star_graph(n: int) -> GraphFamily:
    """
    Build the star of order `n`: hub 0 joined to leaves `1..n-1`.

    Parameters
    ----------
    n : int
        Total number of vertices, `n >= 2`.

    Returns
    -------
    GraphFamily
        Finite family of size `n`.

    Raises
    ------
    GraphDomainError
        If `n < 2`.
    """

    require_int("n", n, 2)

    def neighbors(x: int) -> NeighborList:
        if x == 0:
            return [(y, 1.0) for y in range(1, n)]
        return [(0, 1.0)]

    return GraphFamily(
        name="star",
        params={"n": n},
        neighbor_fn=neighbors,
        size=n,
        degree_fn=lambda x: n - 1 if x == 0 else 1,
    )


def hub_clique_block(n: int, x: int) -> range:
    """Return the vertex range of the `K_n` copy containing vertex `x >= 1`."""
    copy = (x - 1) // n
    return range(1 + copy * n, 1 + (copy + 1) * n)


def hub_of_cliques(k: int, n: int) -> GraphFamily:
    """
    Build `K_{k,n}`: `k` disjoint copies of `K_n` plus a hub adjacent to all.

    Parameters
    ----------
    k : int
        Number of clique copies, `k >= 1`.
    n : int
        Size of each clique, `n >= 1`.

    Returns
    -------
    GraphFamily
        Finite family of size `k*n + 1`; hub is vertex 0.

    Raises
    ------
    GraphDomainError
        If `k < 1` or `n < 1`.

    Notes
    -----
    - `hub_of_cliques(1, n - 1)` is isomorphic to `complete_graph(n)`.
    - Hub degree is `k*n`; every other vertex has degree `n`.
    """

    require_int("k", k, 1)
    require_int("n", n, 1)
    size = k * n + 1

    def neighbors(x: int) -> NeighborList:
        if x == 0:
            return [(y, 1.0) for y in range(1, size)]
        return [(0, 1.0)] + [(y, 1.0) for y in hub_clique_block(n, x) if y != x]

    return GraphFamily(
        name="kkn",
        params={"k": k, "n": n},
        neighbor_fn=neighbors,
        size=size,
        degree_fn=lambda x: k * n if x == 0 else n,
    )
