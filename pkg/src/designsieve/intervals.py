"""Exact interval arithmetic over the rationals.

Endpoints are `fractions.Fraction`, so every enclosure is rigorous: no
rounding occurs anywhere.  Used to propagate certified root enclosures of
the inner-product quartic through the rational expressions for the distance
distribution and the multiplicity vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

__all__ = ["Interval"]

_Q = Fraction


def _as_fraction(x: Rational | int) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed interval [lo, hi] with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", _as_fraction(self.lo))
        object.__setattr__(self, "hi", _as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")

    @classmethod
    def point(cls, x: Rational | int) -> "Interval":
        x = _as_fraction(x)
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Rational | int) -> bool:
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def contains_integer(self) -> bool:
        """Whether some integer lies in the interval."""
        import math

        return math.ceil(self.lo) <= math.floor(self.hi)

    def unique_integer(self) -> int | None:
        """The single integer in the interval, or None if zero or several."""
        import math

        a, b = math.ceil(self.lo), math.floor(self.hi)
        return a if a == b else None

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __add__(self, other: "Interval | Rational | int") -> "Interval":
        if not isinstance(other, Interval):
            other = Interval.point(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other: "Interval | Rational | int") -> "Interval":
        if not isinstance(other, Interval):
            other = Interval.point(other)
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other: "Rational | int") -> "Interval":
        return Interval.point(other) - self

    def __mul__(self, other: "Interval | Rational | int") -> "Interval":
        if not isinstance(other, Interval):
            other = Interval.point(other)
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> "Interval":
        if self.contains_zero():
            raise ZeroDivisionError(f"interval {self} contains zero")
        return Interval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other: "Interval | Rational | int") -> "Interval":
        if not isinstance(other, Interval):
            other = Interval.point(other)
        return self * other.reciprocal()

    def square(self) -> "Interval":
        if self.lo >= 0:
            return Interval(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return Interval(self.hi * self.hi, self.lo * self.lo)
        return Interval(_Q(0), max(self.lo * self.lo, self.hi * self.hi))

    # -- certified comparisons (true only when provable) -------------------

    def certainly_lt(self, other: "Interval | Rational | int") -> bool:
        if not isinstance(other, Interval):
            other = Interval.point(other)
        return self.hi < other.lo

    def certainly_gt(self, other: "Interval | Rational | int") -> bool:
        if not isinstance(other, Interval):
            other = Interval.point(other)
        return self.lo > other.hi

    def abs(self) -> "Interval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(_Q(0), max(-self.lo, self.hi))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Interval({self.lo}, {self.hi})"
