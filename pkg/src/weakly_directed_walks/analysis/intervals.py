"""
Closed intervals with exact rational endpoints.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Any, Union

Scalar = Union[int, float, Fraction]


def _exact(value: Scalar) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class RationalInterval:
    """[lo, hi] with lo <= hi; arithmetic encloses every pointwise result."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        lo, hi = _exact(self.lo), _exact(self.hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, value: Scalar) -> "RationalInterval":
        exact = _exact(value)
        return cls(exact, exact)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, value: Scalar) -> bool:
        return self.lo <= _exact(value) <= self.hi

    def is_subset(self, other: "RationalInterval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def overlaps(self, other: "RationalInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def _coerce(self, other: Union["RationalInterval", Scalar]) -> "RationalInterval":
        return other if isinstance(other, RationalInterval) else RationalInterval.point(other)

    def __add__(self, other: Union["RationalInterval", Scalar]) -> "RationalInterval":
        rhs = self._coerce(other)
        return RationalInterval(self.lo + rhs.lo, self.hi + rhs.hi)

    __radd__ = __add__

    def __neg__(self) -> "RationalInterval":
        return RationalInterval(-self.hi, -self.lo)

    def __sub__(self, other: Union["RationalInterval", Scalar]) -> "RationalInterval":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "RationalInterval":
        return (-self) + other

    def __mul__(self, other: Union["RationalInterval", Scalar]) -> "RationalInterval":
        rhs = self._coerce(other)
        products = (self.lo * rhs.lo, self.lo * rhs.hi, self.hi * rhs.lo, self.hi * rhs.hi)
        return RationalInterval(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalInterval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError(f"interval {self} contains zero")
        return RationalInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other: Union["RationalInterval", Scalar]) -> "RationalInterval":
        return self * self._coerce(other).reciprocal()

    def __rtruediv__(self, other: Scalar) -> "RationalInterval":
        return RationalInterval.point(other) * self.reciprocal()

    def __pow__(self, exponent: int) -> "RationalInterval":
        if exponent < 0:
            return (self**-exponent).reciprocal()
        if exponent % 2 == 0 and self.lo < 0 < self.hi:
            return RationalInterval(Fraction(0), max(self.lo**exponent, self.hi**exponent))
        ends = (self.lo**exponent, self.hi**exponent)
        return RationalInterval(min(ends), max(ends))

    def rounded_outward(self, bits: int = 96) -> "RationalInterval":
        """Widen to dyadic endpoints with the given number of fractional bits."""
        scale = 1 << bits
        return RationalInterval(
            Fraction(floor(self.lo * scale), scale),
            Fraction(ceil(self.hi * scale), scale),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "lo": float(self.lo),
            "hi": float(self.hi),
            "lo_exact": str(self.lo),
            "hi_exact": str(self.hi),
            "width": float(self.width),
        }

    def __str__(self) -> str:
        return f"[{float(self.lo):.10f}, {float(self.hi):.10f}]"
