"""
Truncated power series with exact rational coefficients.

Provides:
- TruncatedSeries: immutable coefficients c_0..c_N of a series modulo t^(N+1)
- mul / div / sqrt / derivative on series of possibly different orders
- exact evaluation at rationals (integer Horner) and float64 evaluation
- expand_in_v: coefficients of a quotient in an auxiliary variable v
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Any, Iterable, Optional, Sequence, Union

import numpy as np

Number = Union[int, Fraction]


class SeriesError(ValueError):
    """Base class for invalid series operations."""


class ZeroConstantTerm(SeriesError):
    """Division by a series whose constant term vanishes."""


class BadConstantTerm(SeriesError):
    """Square root of a series whose constant term is not 1."""


class EmptySeries(SeriesError):
    """A series needs at least one coefficient."""


def _integers(coefficients: Sequence[Fraction]) -> Optional[list[int]]:
    """Return plain ints when every coefficient is integral, else None."""
    if all(c.denominator == 1 for c in coefficients):
        return [c.numerator for c in coefficients]
    return None


@dataclass(frozen=True)
class TruncatedSeries:
    """A power series in t known up to (and including) t^order."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise EmptySeries("a truncated series needs at least the constant term")
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def of(cls, coefficients: Iterable[Number], order: int) -> "TruncatedSeries":
        """Build a series of the given order, padding with zeros or truncating."""
        if order < 0:
            raise EmptySeries(f"order must be non-negative, got {order}")
        values = list(coefficients)[: order + 1]
        values.extend([0] * (order + 1 - len(values)))
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls.of([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.of([1], order)

    @classmethod
    def monomial(cls, power: int, order: int, coefficient: Number = 1) -> "TruncatedSeries":
        """coefficient * t^power, truncated at the given order."""
        values: list[Number] = [0] * (order + 1)
        if 0 <= power <= order:
            values[power] = coefficient
        return cls.of(values, order)

    # ------------------------------------------------------------------
    # Properties
    # ------------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, index: int) -> Fraction:
        return self.coefficients[index]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self) -> Any:
        return iter(self.coefficients)

    def valuation(self) -> Optional[int]:
        """Index of the first non-zero coefficient (None for the zero series)."""
        for index, c in enumerate(self.coefficients):
            if c:
                return index
        return None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def as_integers(self) -> list[int]:
        """Coefficients as ints; raises if some coefficient is not integral."""
        values = _integers(self.coefficients)
        if values is None:
            raise SeriesError("series has non-integral coefficients")
        return values

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesError(f"cannot raise order {self.order} to {order}")
        return TruncatedSeries(self.coefficients[: order + 1])

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by t^k (k >= 0) or divide by t^-k (k < 0).

        Multiplying keeps the order; dividing lowers it by -k and requires
        the first -k coefficients to vanish.
        """
        if k >= 0:
            return TruncatedSeries.of([0] * k + list(self.coefficients), self.order)
        drop = -k
        if drop > self.order:
            raise EmptySeries(f"dividing by t^{drop} leaves no coefficient")
        if any(self.coefficients[:drop]):
            raise SeriesError(f"series is not divisible by t^{drop}")
        return TruncatedSeries(self.coefficients[drop:])

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _coerce(self, other: Union["TruncatedSeries", Number]) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.of([other], self.order)

    def __add__(self, other: Union["TruncatedSeries", Number]) -> "TruncatedSeries":
        rhs = self._coerce(other)
        order = min(self.order, rhs.order)
        return TruncatedSeries(
            tuple(self.coefficients[i] + rhs.coefficients[i] for i in range(order + 1))
        )

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Union["TruncatedSeries", Number]) -> "TruncatedSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Number) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other: Union["TruncatedSeries", Number]) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        scalar = Fraction(other)
        return TruncatedSeries(tuple(c * scalar for c in self.coefficients))

    __rmul__ = __mul__

    def __truediv__(self, other: Union["TruncatedSeries", Number]) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return div(self, other)
        if other == 0:
            raise ZeroDivisionError("division of a series by zero")
        scalar = Fraction(other)
        return TruncatedSeries(tuple(c / scalar for c in self.coefficients))

    def __rtruediv__(self, other: Number) -> "TruncatedSeries":
        return div(TruncatedSeries.of([other], self.order), self)

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            return div(TruncatedSeries.one(self.order), self ** (-exponent))
        result = TruncatedSeries.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = mul(result, base)
            exponent >>= 1
            if exponent:
                base = mul(base, base)
        return result

    def derivative(self) -> "TruncatedSeries":
        return derivative(self)

    def evaluate(self, x: Number) -> Fraction:
        return eval_real(self, x)

    def __str__(self) -> str:
        terms = []
        for power, c in enumerate(self.coefficients):
            if not c:
                continue
            monomial = "" if power == 0 else ("t" if power == 1 else f"t^{power}")
            if monomial and c == 1:
                terms.append(monomial)
            elif monomial and c == -1:
                terms.append(f"-{monomial}")
            else:
                terms.append(f"{c}{'*' if monomial else ''}{monomial}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(t^{self.order + 1})"


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Product at order min(order(a), order(b))."""
    order = min(a.order, b.order)
    left: Sequence[Any] = _integers(a.coefficients[: order + 1]) or a.coefficients[: order + 1]
    right: Sequence[Any] = _integers(b.coefficients[: order + 1]) or b.coefficients[: order + 1]
    result: list[Any] = [0] * (order + 1)
    for i, ai in enumerate(left):
        if not ai:
            continue
        for j in range(order + 1 - i):
            bj = right[j]
            if bj:
                result[i + j] += ai * bj
    return TruncatedSeries(tuple(result))


def div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Quotient a/b at order min(order(a), order(b)).

    Raises:
        ZeroConstantTerm: if b has a vanishing constant term.
    """
    if b.coefficients[0] == 0:
        raise ZeroConstantTerm("cannot divide by a series with zero constant term")
    order = min(a.order, b.order)
    num_int = _integers(a.coefficients[: order + 1])
    den_int = _integers(b.coefficients[: order + 1])
    # Integral quotient whenever the divisor is a unit of Z[[t]]
    if num_int is not None and den_int is not None and den_int[0] in (1, -1):
        num: Sequence[Any] = num_int
        den: Sequence[Any] = den_int
        unit = den_int[0]
    else:
        num = a.coefficients[: order + 1]
        den = b.coefficients[: order + 1]
        unit = None
    support = [(j, den[j]) for j in range(1, order + 1) if den[j]]
    head = den[0]
    quotient: list[Any] = []
    for n in range(order + 1):
        acc = num[n]
        for j, dj in support:
            if j > n:
                break
            acc -= dj * quotient[n - j]
        quotient.append(acc * unit if unit is not None else acc / head)
    return TruncatedSeries(tuple(quotient))


def sqrt(a: TruncatedSeries) -> TruncatedSeries:
    """Square root with constant term 1, by Newton iteration on rationals.

    Raises:
        BadConstantTerm: if the constant term of a is not 1.
    """
    if a.coefficients[0] != 1:
        raise BadConstantTerm(f"sqrt needs constant term 1, got {a.coefficients[0]}")
    half = Fraction(1, 2)
    root = TruncatedSeries.one(0)
    precision = 0
    while precision < a.order:
        precision = min(2 * precision + 1, a.order)
        widened = TruncatedSeries.of(root.coefficients, precision)
        root = (widened + div(a.truncate(precision), widened)) * half
    return root


def derivative(a: TruncatedSeries) -> TruncatedSeries:
    """Term-wise derivative; the order drops by one.

    Raises:
        EmptySeries: for an order-0 series, which has no coefficient left.
    """
    if a.order == 0:
        raise EmptySeries("derivative of an order-0 series has no coefficient")
    return TruncatedSeries(tuple(i * a.coefficients[i] for i in range(1, a.order + 1)))


def _coefficients_of(source: Any) -> Sequence[Any]:
    return source.coefficients if hasattr(source, "coefficients") else source


def eval_real(series: Any, x: Number) -> Fraction:
    """Exact value of the truncated sum at a rational point.

    Works on a TruncatedSeries, a LatticePolynomial or a plain coefficient
    sequence. With x = p/q the numerator sum(c_i p^i q^(N-i)) is built with
    integer Horner steps, so no intermediate Fraction is normalised.
    """
    coefficients = [Fraction(c) for c in _coefficients_of(series)]
    if not coefficients:
        return Fraction(0)
    point = Fraction(x)
    p, q = point.numerator, point.denominator
    scale = lcm(*(c.denominator for c in coefficients))
    scaled = [c.numerator * (scale // c.denominator) for c in coefficients]
    acc = scaled[-1]
    q_power = 1
    for c in reversed(scaled[:-1]):
        q_power *= q
        acc = acc * p + c * q_power
    return Fraction(acc, q_power * scale)


def eval_float(series: Any, x: Any) -> Any:
    """float64 evaluation (scalar or numpy array argument)."""
    values = np.array([float(c) for c in _coefficients_of(series)], dtype=np.float64)
    return np.polynomial.polynomial.polyval(x, values)


def expand_in_v(
    numerator: Sequence[TruncatedSeries],
    denominator: Sequence[TruncatedSeries],
    count: int,
) -> list[TruncatedSeries]:
    """First `count` v-coefficients of numerator(v) / denominator(v).

    Both arguments are lists of t-series indexed by the power of v. The
    constant v-coefficient of the denominator must be invertible in Q[[t]].
    """
    if not denominator:
        raise EmptySeries("denominator needs a constant v-coefficient")
    head = denominator[0]
    order = min(s.order for s in (*numerator, *denominator))
    unit_head = head.truncate(order) == TruncatedSeries.one(order)
    zero = TruncatedSeries.zero(order)
    result: list[TruncatedSeries] = []
    for k in range(count):
        acc = numerator[k].truncate(order) if k < len(numerator) else zero
        for j in range(1, min(k, len(denominator) - 1) + 1):
            if denominator[j].valuation() is not None:
                acc = acc - mul(denominator[j], result[k - j])
        result.append(acc if unit_head else div(acc, head))
    return result
