"""
Purpose
-------
Exact complex arithmetic over `ℚ[i]` for recursions that only add, multiply
by `i` and divide by integers.

Key behaviors
-------------
- `GaussianRational(re, im)` with `+`, `−`, `times_i`, rational scaling, division by a
  non-zero integer, `abs_sq` (exact) and `to_complex`.
- `from_complex` converts a float pair exactly (every float is a dyadic
  rational).

Conventions
-----------
- Values are immutable; operations return new instances.

Downstream usage
----------------
`deficiency.ftree_recursion` builds exact F-tree solutions;
`deficiency.residuals` evaluates their residuals exactly.
"""

from dataclasses import dataclass
from fractions import Fraction

from graphs.graph_core.graph_errors import GraphDomainError


@dataclass(frozen=True)
class GaussianRational:
    """Complex number `re + i·im` with `Fraction` parts."""

    re: Fraction
    im: Fraction

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def times_i(self) -> "GaussianRational":
        return GaussianRational(-self.im, self.re)

    def divide(self, k: int) -> "GaussianRational":
        if k == 0:
            raise GraphDomainError("division of a Gaussian rational by zero")
        return GaussianRational(self.re / k, self.im / k)

    def scale(self, factor: Fraction) -> "GaussianRational":
        return GaussianRational(self.re * factor, self.im * factor)

    def abs_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))


ZERO = GaussianRational(Fraction(0), Fraction(0))


def from_complex(value: complex) -> GaussianRational:
    """Return the exact Gaussian rational of a complex float."""
    return GaussianRational(Fraction(value.real), Fraction(value.imag))


def exact_sum(values: list[GaussianRational]) -> GaussianRational:
    total = ZERO
    for value in values:
        total = total + value
    return total
