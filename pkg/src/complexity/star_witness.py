"""
Purpose
-------
Search for induced stars through high-degree vertices. A family whose induced
star orders grow without bound has sub-lower local complexity 0, since stars
have no triangles.

Key behaviors
-------------
- `star_order_at(g, x)`: maximum independent set among the neighbors of `x`;
  exact branch and bound up to `EXACT_INDEPENDENT_SET_CAP` neighbors, greedy
  minimum-degree selection plus (1,2)-swap local search above it.
- `sub_complexity_witness(family, windows)`: best star among the top-degree
  interior vertices of each window, and a verdict over the windows.

Conventions
-----------
- A witness with `k` leaves certifies an induced star of order `k + 1`.
- Verdicts: `zeroWitness` when the best orders contain a strictly growing
  run of at least `MIN_GROWTH_WINDOWS` windows (plateaus in between are
  skipped), `boundedStars` otherwise, `noWitnessFound`
  when no window has a non-isolated interior vertex. Only `zeroWitness` is
  conclusive.

Downstream usage
----------------
CLI `witness` / `complexity --witness` and criterion 10 of the verify suite.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence

import pandas as pd

from complexity.complexity_config import (
    EXACT_INDEPENDENT_SET_CAP,
    LOCAL_SEARCH_ROUNDS,
    MIN_GROWTH_WINDOWS,
    WITNESS_CANDIDATES_PER_WINDOW,
)
from graphs.graph_core.finite_graph import NeighborSource
from graphs.graph_core.graph_errors import GraphDomainError
from graphs.graph_core.graph_family import GraphFamily, truncate
from infra.logging.infra_logger import InfraLogger

WITNESS_COLUMNS: list[str] = ["window", "center", "star_order", "exact"]


@dataclass(frozen=True)
class StarWitness:
    """
    Purpose
    -------
    Induced star through `center`.

    Parameters
    ----------
    center : int
        Star hub.
    leaves : tuple[int, ...]
        Pairwise non-adjacent neighbors of `center`, ascending.
    exact : bool
        True when `leaves` is a maximum independent set of the neighborhood,
        False for a heuristic lower bound.
    """

    center: int
    leaves: tuple[int, ...]
    exact: bool

    @property
    def order(self) -> int:
        return len(self.leaves) + 1


def _bitmask_adjacency(g: NeighborSource, x: int) -> tuple[list[int], list[int]]:
    around = sorted({y for y, _ in g.neighbors(x) if y != x})
    position = {y: i for i, y in enumerate(around)}
    masks = [0] * len(around)
    for i, y in enumerate(around):
        for z, _ in g.neighbors(y):
            j = position.get(z)
            if j is not None and j != i:
                masks[i] |= 1 << j
    return around, masks


def exact_independent_set(masks: list[int]) -> int:
    """
    Return a maximum independent set of the graph given by neighbor bitmasks.

    Parameters
    ----------
    masks : list[int]
        `masks[i]` has bit `j` set iff `i` and `j` are adjacent.

    Returns
    -------
    int
        Bitmask of a maximum independent set.

    Notes
    -----
    - Branch on the lowest remaining vertex (take it, or drop it when it has
      a remaining neighbor); prune when the chosen set plus every remaining
      vertex cannot beat the incumbent.
    """

    best = 0
    best_size = 0

    def search(remaining: int, chosen: int, size: int) -> None:
        nonlocal best, best_size
        if size + remaining.bit_count() <= best_size:
            return
        if remaining == 0:
            best, best_size = chosen, size
            return
        v = (remaining & -remaining).bit_length() - 1
        bit = 1 << v
        search(remaining & ~bit & ~masks[v], chosen | bit, size + 1)
        if masks[v] & remaining:
            search(remaining & ~bit, chosen, size)

    search((1 << len(masks)) - 1, 0, 0)
    return best


def greedy_independent_set(masks: list[int], rounds: int = LOCAL_SEARCH_ROUNDS) -> int:
    """
    Return a large independent set: minimum-degree greedy, then (1,2)-swaps.

    Notes
    -----
    - A (1,2)-swap removes one chosen vertex `v` and inserts two non-adjacent
      vertices whose only chosen neighbor is `v`; each swap grows the set by one.
    """

    remaining = (1 << len(masks)) - 1
    chosen = 0
    while remaining:
        v = min(
            (i for i in range(len(masks)) if remaining >> i & 1),
            key=lambda i: ((masks[i] & remaining).bit_count(), i),
        )
        chosen |= 1 << v
        remaining &= ~(1 << v) & ~masks[v]

    for _ in range(rounds):
        swapped = False
        for v in range(len(masks)):
            if not chosen >> v & 1:
                continue
            tight = [
                u
                for u in range(len(masks))
                if not chosen >> u & 1 and masks[u] & chosen == 1 << v
            ]
            pairs = (
                (a, b)
                for i, a in enumerate(tight)
                for b in tight[i + 1 :]
                if not masks[a] >> b & 1
            )
            pair = next(pairs, None)
            if pair is not None:
                chosen = (chosen & ~(1 << v)) | (1 << pair[0]) | (1 << pair[1])
                swapped = True
                break
        if not swapped:
            break
    return chosen


def star_order_at(
    g: NeighborSource, x: int, exact_cap: int = EXACT_INDEPENDENT_SET_CAP
) -> StarWitness:
    """
    Find the largest induced star centered at `x`.

    Parameters
    ----------
    g : NeighborSource
        Finite graph or family.
    x : int
        Center with `d(x) >= 1`.
    exact_cap : int
        Largest neighborhood solved exactly.

    Returns
    -------
    StarWitness
        Exact when `d(x) <= exact_cap`, a flagged lower bound otherwise.

    Raises
    ------
    GraphDomainError
        If `x` is isolated.
    """

    around, masks = _bitmask_adjacency(g, x)
    if not around:
        raise GraphDomainError(f"vertex {x} is isolated; a star needs d(x) >= 1")
    exact = len(around) <= exact_cap
    chosen = exact_independent_set(masks) if exact else greedy_independent_set(masks)
    leaves = tuple(y for i, y in enumerate(around) if chosen >> i & 1)
    return StarWitness(center=x, leaves=leaves, exact=exact)


@dataclass(frozen=True)
class WindowWitness:
    """Best star found in one window."""

    window: int
    witness: StarWitness


@dataclass(frozen=True)
class SubComplexityVerdict:
    """
    Purpose
    -------
    Outcome of a sub-complexity witness search.

    Parameters
    ----------
    kind : str
        `"zeroWitness"`, `"boundedStars"` or `"noWitnessFound"`.
    witnesses : tuple[WindowWitness, ...]
        Best witness per window that had candidates.
    max_order : int
        Largest star order seen (0 when none).
    """

    kind: str
    witnesses: tuple[WindowWitness, ...]
    max_order: int


def growing_orders(orders: Sequence[int]) -> list[int]:
    """
    Return the longest strictly increasing subsequence of `orders`, in window order.

    Plateaus and dips between windows are skipped rather than breaking the run;
    ties keep the earliest windows.
    """

    if not orders:
        return []
    length = [1] * len(orders)
    previous = [-1] * len(orders)
    for j, order in enumerate(orders):
        for i in range(j):
            if orders[i] < order and length[i] + 1 > length[j]:
                length[j] = length[i] + 1
                previous[j] = i
    end = max(range(len(orders)), key=lambda j: (length[j], -j))
    run: list[int] = []
    while end != -1:
        run.append(orders[end])
        end = previous[end]
    return run[::-1]


def sub_complexity_witness(
    family: GraphFamily,
    window_sizes: Iterable[int],
    candidates: int = WITNESS_CANDIDATES_PER_WINDOW,
    exact_cap: int = EXACT_INDEPENDENT_SET_CAP,
    min_growth: int = MIN_GROWTH_WINDOWS,
    logger: InfraLogger | None = None,
) -> SubComplexityVerdict:
    """
    Scan windows for induced stars of growing order.

    Parameters
    ----------
    family : GraphFamily
        Family to scan.
    window_sizes : Iterable[int]
        Window sizes; finite families are clamped to their size.
    candidates : int
        Highest-degree interior vertices tried per window.
    exact_cap : int
        Passed to `star_order_at`.
    min_growth : int
        Length of the longest strictly growing run of orders (in window order,
        not necessarily consecutive) required for `zeroWitness`.
    logger : InfraLogger | None
        Receives one `witness_window` event per window.

    Returns
    -------
    SubComplexityVerdict
        Verdict plus the per-window witnesses.
    """

    found: list[WindowWitness] = []
    for size in window_sizes:
        if family.size is not None:
            size = min(size, family.size)
        window = truncate(family, size)
        interior = [x for x in window.interior_vertices() if window.graph.degree(x) > 0]
        ranked = sorted(interior, key=lambda x: (-window.graph.degree(x), x))[:candidates]
        if not ranked:
            continue
        best = max(
            (star_order_at(window.graph, x, exact_cap) for x in ranked),
            key=lambda w: (w.order, -w.center),
        )
        found.append(WindowWitness(window=size, witness=best))
        if logger is not None:
            logger.info(
                "witness_window",
                f"{family.name} window {size}",
                {"window": size, "center": best.center, "order": best.order, "exact": best.exact},
            )

    if not found:
        return SubComplexityVerdict(kind="noWitnessFound", witnesses=(), max_order=0)
    orders = [w.witness.order for w in found]
    run = growing_orders(orders)
    growing = len(run) >= max(min_growth, 2)
    return SubComplexityVerdict(
        kind="zeroWitness" if growing else "boundedStars",
        witnesses=tuple(found),
        max_order=max(orders),
    )


def witness_frame(verdict: SubComplexityVerdict) -> pd.DataFrame:
    """Return the CSV rows `window,center,star_order,exact`."""
    rows = [
        {
            "window": w.window,
            "center": w.witness.center,
            "star_order": w.witness.order,
            "exact": w.witness.exact,
        }
        for w in verdict.witnesses
    ]
    return pd.DataFrame(rows, columns=WITNESS_COLUMNS)
