"""
Purpose
-------
Parameter validation shared by the family generators.

Key behaviors
-------------
- `require_int` accepts true integers (not bools) above a minimum.
- `require_real` accepts finite reals strictly above a minimum.

Conventions
-----------
- Failures raise `GraphDomainError` naming the parameter and the value.

Downstream usage
----------------
Call at the top of every generator before building neighbor functions.
"""

import math

from graphs.graph_core.graph_errors import GraphDomainError


def require_int(name: str, value: int, minimum: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise GraphDomainError(f"{name} must be an integer >= {minimum}, got {value!r}")


def require_real(name: str, value: float, exclusive_minimum: float) -> None:
    if (
        isinstance(value, bool)
        or not isinstance(value, (int, float))
        or not math.isfinite(value)
        or value <= exclusive_minimum
    ):
        raise GraphDomainError(f"{name} must be a real > {exclusive_minimum}, got {value!r}")
