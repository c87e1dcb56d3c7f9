"""
Purpose
-------
Numerical check of the two growth hypotheses that imply essential
self-adjointness: bounded neighbor degree gaps `|d(x) − d(y)|` and bounded
neighbor gaps of `E(x) := max_{y∼x} E(x,y)`.

Key behaviors
-------------
- `nelson_hypothesis_check(family, windows)`: exact maxima over the interior
  of each window, then a trend verdict across windows.
- `consecutive_gap_profile(family, vertices, exponent)`: per-vertex
  `n^(−exponent)·|d(n) − d(n+1)|` (or the weight analogue), for families
  whose gaps grow polynomially.

Conventions
-----------
- Degree gaps use the family degree of both endpoints (closed forms where the
  family has them), so boundary neighbors of interior vertices count.
- Weight gaps are taken over every edge `x ∼ y` with `x` interior; `E(y)`
  comes from the family neighborhood when `y` lies on the window boundary.
- A statistic is flagged bounded when its sup did not change over the last
  two windows; the growth rate is the log-log slope of the sup against the
  window size (`scipy.stats.linregress`), NaN with fewer than two positive
  points.

Downstream usage
----------------
CLI `deficiency --nelson` and criterion 13 of the verify suite.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
import pandas as pd
from scipy import stats

from graphs.graph_core.graph_core_types import Neighbor
from graphs.graph_core.graph_errors import GraphDomainError
from graphs.graph_core.graph_family import GraphFamily, truncate
from infra.logging.infra_logger import InfraLogger

NELSON_COLUMNS: list[str] = ["window", "sup_degree_gap", "sup_weight_gap"]
GAP_PROFILE_COLUMNS: list[str] = ["n", "gap", "scaled_gap"]


@dataclass(frozen=True)
class NelsonHypothesisReport:
    """
    Purpose
    -------
    Degree and weight gap maxima per window with a boundedness verdict.

    Parameters
    ----------
    family_name : str
        Name of the checked family.
    windows : tuple[int, ...]
        Window sizes, ascending.
    sup_degree_gaps : tuple[int, ...]
        Per window: `max |d(x) − d(y)|` over interior `x` and `y ∼ x`.
    sup_weight_gaps : tuple[float, ...]
        Per window: `max |E(x) − E(y)|` over interior `x` and `y ∼ x`.
    degree_bounded, weight_bounded : bool
        Sup unchanged over the last two windows.
    degree_growth_rate, weight_growth_rate : float
        Log-log slope of the sup against the window size.
    """

    family_name: str
    windows: tuple[int, ...]
    sup_degree_gaps: tuple[int, ...]
    sup_weight_gaps: tuple[float, ...]
    degree_bounded: bool
    weight_bounded: bool
    degree_growth_rate: float
    weight_growth_rate: float

    def frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "window": self.windows,
                "sup_degree_gap": self.sup_degree_gaps,
                "sup_weight_gap": self.sup_weight_gaps,
            },
            columns=NELSON_COLUMNS,
        )


def _growth_rate(windows: Sequence[int], sups: Sequence[float]) -> float:
    xs = np.array([w for w, s in zip(windows, sups) if s > 0], dtype=np.float64)
    ys = np.array([s for s in sups if s > 0], dtype=np.float64)
    if xs.size < 2 or np.ptp(xs) == 0:
        return float("nan")
    return float(stats.linregress(np.log(xs), np.log(ys)).slope)


def _stable(sups: Sequence[float]) -> bool:
    return len(sups) >= 2 and sups[-1] == sups[-2]


def _max_weight(neighbors: Iterable[Neighbor]) -> float:
    return max((w for _, w in neighbors), default=0.0)


def nelson_hypothesis_check(
    family: GraphFamily,
    windows: Iterable[int],
    logger: InfraLogger | None = None,
) -> NelsonHypothesisReport:
    """
    Compute the sup degree and weight gaps over the interior of each window.

    Parameters
    ----------
    family : GraphFamily
        Family to check.
    windows : Iterable[int]
        Window sizes; sorted and clamped to the size of finite families.
    logger : InfraLogger | None
        Receives one `nelson_window` event per window.

    Returns
    -------
    NelsonHypothesisReport
        Per-window maxima (nondecreasing in the window) and trend flags.

    Raises
    ------
    GraphDomainError
        If no window is given.
    """

    sizes = sorted({min(w, family.size) if family.size is not None else w for w in windows})
    if not sizes:
        raise GraphDomainError("nelson_hypothesis_check needs at least one window")

    degree_sups: list[int] = []
    weight_sups: list[float] = []
    for size in sizes:
        window = truncate(family, size)
        g = window.graph
        interior = window.interior_vertices()
        heaviest = {x: _max_weight(g.adjacency[x]) for x in interior}
        degree_gap = 0
        weight_gap = 0.0
        for x in interior:
            dx = family.degree(x)
            for y, _ in g.adjacency[x]:
                degree_gap = max(degree_gap, abs(dx - family.degree(y)))
                if y not in heaviest:
                    heaviest[y] = _max_weight(family.neighbors(y))
                weight_gap = max(weight_gap, abs(heaviest[x] - heaviest[y]))
        degree_sups.append(degree_gap)
        weight_sups.append(weight_gap)
        if logger is not None:
            logger.info(
                "nelson_window",
                f"{family.name} window {size}",
                {
                    "window": size,
                    "interior": len(interior),
                    "sup_degree_gap": degree_gap,
                    "sup_weight_gap": weight_gap,
                },
            )

    return NelsonHypothesisReport(
        family_name=family.name,
        windows=tuple(sizes),
        sup_degree_gaps=tuple(degree_sups),
        sup_weight_gaps=tuple(weight_sups),
        degree_bounded=_stable(degree_sups),
        weight_bounded=_stable(weight_sups),
        degree_growth_rate=_growth_rate(sizes, degree_sups),
        weight_growth_rate=_growth_rate(sizes, weight_sups),
    )


def consecutive_gap_profile(
    family: GraphFamily,
    vertices: Iterable[int],
    exponent: float,
    kind: str = "degree",
) -> pd.DataFrame:
    """
    Tabulate `n^(−exponent)·gap(n)` with `gap(n) = |d(n) − d(n+1)|` or `|E(n) − E(n+1)|`.

    Parameters
    ----------
    family : GraphFamily
        Family whose vertices `n` and `n+1` are adjacent or comparable.
    vertices : Iterable[int]
        Vertices `n >= 1`.
    exponent : float
        Normalising power.
    kind : str
        `"degree"` or `"weight"`; weights use full family neighborhoods, so
        `"weight"` suits families of small degree only.

    Returns
    -------
    pandas.DataFrame
        Columns `n, gap, scaled_gap`, ascending in `n`.

    Raises
    ------
    GraphDomainError
        On an unknown `kind` or a vertex below 1.
    """

    if kind not in ("degree", "weight"):
        raise GraphDomainError(f"kind must be 'degree' or 'weight', got {kind!r}")
    rows = []
    for n in sorted(set(vertices)):
        if n < 1:
            raise GraphDomainError(f"gap profile vertices must be >= 1, got {n}")
        if kind == "degree":
            gap = float(abs(family.degree(n) - family.degree(n + 1)))
        else:
            gap = abs(_max_weight(family.neighbors(n)) - _max_weight(family.neighbors(n + 1)))
        rows.append({"n": n, "gap": gap, "scaled_gap": gap * float(n) ** (-exponent)})
    return pd.DataFrame(rows, columns=GAP_PROFILE_COLUMNS)
