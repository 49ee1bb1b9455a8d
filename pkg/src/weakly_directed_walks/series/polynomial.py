"""
Polynomials and rational functions with integer coefficients.

Denominators of bridge generating functions live here; so do the closed
forms of the NES-walk generating function used for tail bounds.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from weakly_directed_walks.series.truncated import (
    Number,
    TruncatedSeries,
    ZeroConstantTerm,
    div,
    eval_real,
)


@dataclass(frozen=True)
class LatticePolynomial:
    """Polynomial in t with integer coefficients, lowest degree first."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        values = [int(c) for c in self.coefficients]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coefficients", tuple(values))

    @classmethod
    def of(cls, coefficients: Iterable[int]) -> "LatticePolynomial":
        return cls(tuple(coefficients))

    @classmethod
    def constant(cls, value: int) -> "LatticePolynomial":
        return cls((value,))

    @classmethod
    def t(cls, power: int = 1, coefficient: int = 1) -> "LatticePolynomial":
        """coefficient * t^power."""
        return cls(tuple([0] * power + [coefficient]))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __getitem__(self, index: int) -> int:
        return self.coefficients[index] if 0 <= index < len(self.coefficients) else 0

    def _coerce(self, other: Union["LatticePolynomial", int]) -> "LatticePolynomial":
        return other if isinstance(other, LatticePolynomial) else LatticePolynomial((other,))

    def __add__(self, other: Union["LatticePolynomial", int]) -> "LatticePolynomial":
        rhs = self._coerce(other)
        size = max(len(self.coefficients), len(rhs.coefficients))
        return LatticePolynomial(tuple(self[i] + rhs[i] for i in range(size)))

    __radd__ = __add__

    def __neg__(self) -> "LatticePolynomial":
        return LatticePolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Union["LatticePolynomial", int]) -> "LatticePolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "LatticePolynomial":
        return (-self) + other

    def __mul__(self, other: Union["LatticePolynomial", int]) -> "LatticePolynomial":
        rhs = self._coerce(other)
        if not self.coefficients or not rhs.coefficients:
            return LatticePolynomial(())
        result = [0] * (len(self.coefficients) + len(rhs.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(rhs.coefficients):
                    result[i + j] += a * b
        return LatticePolynomial(tuple(result))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LatticePolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = LatticePolynomial((1,))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __call__(self, x: Number) -> Fraction:
        return eval_real(self, x)

    def derivative(self) -> "LatticePolynomial":
        return LatticePolynomial(
            tuple(i * self.coefficients[i] for i in range(1, len(self.coefficients)))
        )

    def to_series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries.of(self.coefficients, order)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        return str(self.to_series(self.degree)).rsplit(" + O(", 1)[0]


@dataclass(frozen=True)
class RationalFunction:
    """numerator / denominator with a non-vanishing constant term below."""

    numerator: LatticePolynomial
    denominator: LatticePolynomial

    def __post_init__(self) -> None:
        if self.denominator[0] == 0:
            raise ZeroConstantTerm("rational function must be analytic at t = 0")

    def __call__(self, x: Number) -> Fraction:
        value = eval_real(self.denominator, x)
        if value == 0:
            raise ZeroDivisionError(f"pole at t = {x}")
        return eval_real(self.numerator, x) / value

    def derivative(self) -> "RationalFunction":
        """Quotient rule, without cancelling common factors."""
        num, den = self.numerator, self.denominator
        return RationalFunction(
            num.derivative() * den - num * den.derivative(),
            den * den,
        )

    def series(self, order: int) -> TruncatedSeries:
        return div(self.numerator.to_series(order), self.denominator.to_series(order))
