"""
Purpose
-------
Resolve a family name plus a parameter mapping into a `GraphFamily`.

Key behaviors
-------------
- Maps the CLI family names (`complete`, `star`, `kkn`, `skn`, `wordtree`,
  `ftree`, `jacobi`, `stars`, `chained-kkn`) to their generators.
- Rejects parameters a family does not take and fills window parameters of
  infinite families from `size` or from the configured defaults.
- `parse_params` turns the CLI string `k=2,n=3,alpha=1.5,M=3` into typed
  scalars.

Conventions
-----------
- Integers parse as `int`, other numbers as `float`; `true/false` parse as
  booleans (used by `connected`).
- Window parameters: `wordtree` takes `depth` (the longest word), `ftree`
  takes `size - 1` as `max_vertex`, `jacobi` takes `size` as `length`.
- `surgery` is not a registry family; plans are read by
  `graphs.generators.surgery.load_surgery_plan`.

Downstream usage
----------------
Used by the CLI and by surgery-plan loading.
"""

from typing import Any, Callable, Mapping

from graphs.generators.finite_families import complete_graph, hub_of_cliques, star_graph
from graphs.generators.generators_config import (
    DEFAULT_FTREE_WINDOW,
    DEFAULT_JACOBI_LENGTH,
    DEFAULT_WORD_TREE_DEPTH,
)
from graphs.generators.infinite_families import (
    chained_hub_cliques,
    chained_star_cliques,
    disjoint_stars,
)
from graphs.generators.jacobi_chain import jacobi_chain
from graphs.generators.trees import f_tree, word_tree
from graphs.graph_core.graph_errors import GraphDomainError
from graphs.graph_core.graph_family import GraphFamily

FAMILY_PARAMETERS: dict[str, frozenset[str]] = {
    "complete": frozenset({"n"}),
    "star": frozenset({"n"}),
    "kkn": frozenset({"k", "n"}),
    "skn": frozenset({"alpha"}),
    "wordtree": frozenset({"M", "depth"}),
    "ftree": frozenset({"alpha", "connected"}),
    "jacobi": frozenset({"alpha"}),
    "stars": frozenset({"start"}),
    "chained-kkn": frozenset({"k"}),
}


def parse_params(text: str | None) -> dict[str, int | float | bool]:
    """
    Parse `key=value` pairs separated by commas.

    Parameters
    ----------
    text : str | None
        E.g. `"k=2,n=3"`; None or empty yields `{}`.

    Returns
    -------
    dict[str, int | float | bool]
        Typed parameters.

    Raises
    ------
    GraphDomainError
        On a malformed pair, a repeated key or a non-numeric value.
    """

    params: dict[str, int | float | bool] = {}
    if not text:
        return params
    for pair in text.split(","):
        key, sep, raw = pair.partition("=")
        key, raw = key.strip(), raw.strip()
        if not sep or not key or not raw:
            raise GraphDomainError(f"malformed parameter {pair!r}; expected key=value")
        if key in params:
            raise GraphDomainError(f"parameter {key!r} given twice")
        params[key] = _parse_scalar(key, raw)
    return params


def _parse_scalar(key: str, raw: str) -> int | float | bool:
    lowered = raw.lower()
    if lowered in {"true", "false"}:
        return lowered == "true"
    try:
        return int(raw)
    except ValueError:
        pass
    try:
        return float(raw)
    except ValueError as exc:
        raise GraphDomainError(f"parameter {key!r} has non-numeric value {raw!r}") from exc


def family_from_name(name: str, params: Mapping[str, Any], size: int | None = None) -> GraphFamily:
    """
    Build the family registered under `name`.

    Parameters
    ----------
    name : str
        Registry name.
    params : Mapping[str, Any]
        Family parameters; unknown keys are rejected.
    size : int | None
        Window size used for the window parameter of `ftree` and `jacobi`.

    Returns
    -------
    GraphFamily
        The requested family.

    Raises
    ------
    GraphDomainError
        On an unknown name, an unknown or missing parameter, or invalid values.
    """

    if name not in FAMILY_PARAMETERS:
        raise GraphDomainError(
            f"unknown family {name!r}; expected one of {sorted(FAMILY_PARAMETERS)}"
        )
    unknown = set(params) - FAMILY_PARAMETERS[name]
    if unknown:
        raise GraphDomainError(f"family {name!r} does not take parameters {sorted(unknown)}")
    builders: dict[str, Callable[[], GraphFamily]] = {
        "complete": lambda: complete_graph(_need(params, "n", name)),
        "star": lambda: star_graph(_need(params, "n", name)),
        "kkn": lambda: hub_of_cliques(_need(params, "k", name), _need(params, "n", name)),
        "skn": lambda: chained_star_cliques(_need(params, "alpha", name)),
        "wordtree": lambda: word_tree(
            _need(params, "M", name), params.get("depth", DEFAULT_WORD_TREE_DEPTH)
        ),
        "ftree": lambda: f_tree(
            _need(params, "alpha", name),
            (size or DEFAULT_FTREE_WINDOW) - 1,
            bool(params.get("connected", False)),
        ),
        "jacobi": lambda: jacobi_chain(
            _need(params, "alpha", name), size or DEFAULT_JACOBI_LENGTH
        ),
        "stars": lambda: disjoint_stars(params.get("start", 2)),
        "chained-kkn": lambda: chained_hub_cliques(_need(params, "k", name)),
    }
    return builders[name]()


def _need(params: Mapping[str, Any], key: str, name: str) -> Any:
    if key not in params:
        raise GraphDomainError(f"family {name!r} requires parameter {key!r}")
    return params[key]
