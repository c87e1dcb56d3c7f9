"""
Purpose
-------
Unit tests for `deficiency.gaussian_rationals`.

Key behaviors
-------------
- Arithmetic is exact on `Fraction` parts; multiplication by `i` rotates.
- `divide(0)` raises `GraphDomainError`.
- `from_complex` is exact for binary floats and `to_complex` inverts it.

Conventions
-----------
- Values are built from small fractions so every expectation is exact.

Downstream usage
----------------
Run via `pytest` as part of the CI suite.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from deficiency.gaussian_rationals import (
    ZERO,
    GaussianRational,
    exact_sum,
    from_complex,
)
from graphs.graph_core.graph_errors import GraphDomainError


def _g(re: str, im: str) -> GaussianRational:
    return GaussianRational(Fraction(re), Fraction(im))


def test_field_operations_are_exact() -> None:
    a = _g("1/3", "2")
    b = _g("1/6", "-1/2")

    assert a + b == _g("1/2", "3/2")
    assert a - b == _g("1/6", "5/2")
    assert -a == _g("-1/3", "-2")
    assert a.times_i() == _g("-2", "1/3")
    assert a.divide(3) == _g("1/9", "2/3")
    assert a.scale(Fraction(3)) == _g("1", "6")
    assert b.abs_sq() == Fraction(1, 36) + Fraction(1, 4)


def test_zero_and_sum() -> None:
    assert ZERO.is_zero()
    assert not _g("0", "1/7").is_zero()
    assert exact_sum([]) == ZERO
    assert exact_sum([_g("1/7", "0")] * 7) == _g("1", "0")


def test_divide_by_zero_raises() -> None:
    with pytest.raises(GraphDomainError, match="by zero"):
        _g("1", "1").divide(0)


def test_complex_conversions() -> None:
    value = from_complex(0.5 - 0.25j)

    assert value == _g("1/2", "-1/4")
    assert value.to_complex() == 0.5 - 0.25j
    assert from_complex(0.1 + 0j).to_complex() == 0.1 + 0j
