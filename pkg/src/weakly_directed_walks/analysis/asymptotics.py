"""
Certified asymptotics of weakly directed bridges.

The series I of partially directed irreducible bridges is squeezed between
    I^-(t) = I_{<=n}(t)
    I^+(t) = I_{<=n}(t) + c T_{>n}(t)      (c = 2 horizontal, 4 diagonal)
where T counts NES walks. Both bounds are evaluated exactly at rationals, the
dominant pole rho of W = 1/(1 - I) is bracketed by bisection, and the
growth constant and the mean/variance of the number of irreducible factors
follow by interval arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from weakly_directed_walks.analysis.intervals import RationalInterval
from weakly_directed_walks.config.settings import settings
from weakly_directed_walks.enumeration.weakly import irreducible_gf, nes_walk_gfs
from weakly_directed_walks.lattice.models import Model
from weakly_directed_walks.series.polynomial import LatticePolynomial, RationalFunction
from weakly_directed_walks.series.truncated import eval_real


class ConvergenceError(RuntimeError):
    """A numeric procedure did not reach its target."""


class NoRootInRange(ConvergenceError):
    """The truncated series never reaches 1 below sqrt(2) - 1."""


TAIL_FACTOR = {Model.HORIZONTAL: 2, Model.DIAGONAL: 4}

# Rational just below sqrt(2) - 1, the radius of convergence of T
UPPER_LIMIT = Fraction(41421356, 10**8)

NES_WALKS = RationalFunction(LatticePolynomial.of([1, 1]), LatticePolynomial.of([1, -2, -1]))


def _derivatives(poly: LatticePolynomial, count: int) -> list[LatticePolynomial]:
    result = [poly]
    for _ in range(count):
        result.append(result[-1].derivative())
    return result


def _rational_derivatives(function: RationalFunction, count: int) -> list[RationalFunction]:
    result = [function]
    for _ in range(count):
        result.append(result[-1].derivative())
    return result


@dataclass(frozen=True)
class TruncationBounds:
    """Exactly evaluable lower/upper bounds on I and its first two derivatives."""

    model: Model
    n: int
    head: tuple[LatticePolynomial, ...]
    nes_head: tuple[LatticePolynomial, ...]
    nes_closed: tuple[RationalFunction, ...]

    @property
    def tail_factor(self) -> int:
        return TAIL_FACTOR[self.model]

    def minus(self, x: Fraction, derivative: int = 0) -> Fraction:
        """I_{<=n} (or its derivative) at x."""
        return eval_real(self.head[derivative], x)

    def tail(self, x: Fraction, derivative: int = 0) -> Fraction:
        """T_{>n} (or its derivative) at x, as closed form minus truncation."""
        return self.nes_closed[derivative](x) - eval_real(self.nes_head[derivative], x)

    def plus(self, x: Fraction, derivative: int = 0) -> Fraction:
        return self.minus(x, derivative) + self.tail_factor * self.tail(x, derivative)


def truncation_bounds(model: Model, n: int, order: Optional[int] = None) -> TruncationBounds:
    """Bounds I^- <= I <= I^+ valid on [0, sqrt(2) - 1).

    Raises:
        ValueError: if n exceeds the available order, or if a coefficient of
            I is negative (the monotonicity argument would not apply).
    """
    order = n if order is None else order
    if n < 1 or n > order:
        raise ValueError(f"truncation n must lie in [1, {order}], got {n}")
    coefficients = irreducible_gf(model, order).as_integers()[: n + 1]
    if any(c < 0 for c in coefficients):
        raise ValueError("irreducible bridge series has a negative coefficient")
    head = LatticePolynomial.of(coefficients)
    nes_head = LatticePolynomial.of(nes_walk_gfs(n).total.as_integers())
    return TruncationBounds(
        model=model,
        n=n,
        head=tuple(_derivatives(head, 2)),
        nes_head=tuple(_derivatives(nes_head, 2)),
        nes_closed=tuple(_rational_derivatives(NES_WALKS, 2)),
    )


def certify_rho(bounds: TruncationBounds, interval: RationalInterval) -> bool:
    """I^+(lo) <= 1 <= I^-(hi): then I(lo) <= 1 <= I(hi), so rho lies in the interval."""
    return bounds.plus(interval.lo) <= 1 <= bounds.minus(interval.hi)


class RhoBracket:
    """
    Bisection for the dominant pole.

    Two brackets run side by side: the root of I^+ = 1 (a lower bound for
    rho) and the root of I^- = 1 (an upper bound). Every iteration halves
    both, so the number of iterations only depends on the tolerance.
    """

    def __init__(
        self,
        bounds: TruncationBounds,
        tolerance: Optional[float] = None,
        max_iterations: Optional[int] = None,
        on_status: Optional[Callable[[str], None]] = None,
    ):
        self.bounds = bounds
        self.tolerance = Fraction(settings.BISECTION_TOLERANCE if tolerance is None else tolerance)
        self.max_iterations = (
            settings.BISECTION_MAX_ITERATIONS if max_iterations is None else max_iterations
        )
        self.on_status = on_status
        self.iterations = 0

    def _log(self, message: str) -> None:
        if self.on_status:
            self.on_status(message)

    def run(self) -> RationalInterval:
        bounds = self.bounds
        if bounds.minus(UPPER_LIMIT) < 1:
            raise NoRootInRange(
                f"I_<= {bounds.n} stays below 1 up to {float(UPPER_LIMIT)}; "
                "increase the truncation"
            )
        low_lo, low_hi = Fraction(0), UPPER_LIMIT  # plus(low_lo) <= 1
        high_lo, high_hi = Fraction(0), UPPER_LIMIT  # minus(high_hi) >= 1
        self.iterations = 0
        while low_hi - low_lo >= self.tolerance or high_hi - high_lo >= self.tolerance:
            if self.iterations == self.max_iterations:
                raise ConvergenceError(
                    f"bisection for rho stopped after {self.iterations} iterations "
                    f"with widths {float(low_hi - low_lo):.2e} and {float(high_hi - high_lo):.2e}"
                )
            self.iterations += 1
            middle = (low_lo + low_hi) / 2
            if bounds.plus(middle) <= 1:
                low_lo = middle
            else:
                low_hi = middle
            middle = (high_lo + high_hi) / 2
            if bounds.minus(middle) >= 1:
                high_hi = middle
            else:
                high_lo = middle
        interval = RationalInterval(low_lo, high_hi)
        self._log(
            f"{bounds.model.value} n={bounds.n}: rho in {interval} "
            f"after {self.iterations} iterations"
        )
        return interval


def bracket_rho(
    model: Model,
    n: int,
    order: Optional[int] = None,
    on_status: Optional[Callable[[str], None]] = None,
) -> RationalInterval:
    """Certified interval for the dominant pole of W = 1 / (1 - I)."""
    return RhoBracket(truncation_bounds(model, n, order), on_status=on_status).run()


def growth_constant(
    model: Model,
    n: int,
    order: Optional[int] = None,
    on_status: Optional[Callable[[str], None]] = None,
) -> RationalInterval:
    """mu = 1 / rho."""
    return bracket_rho(model, n, order, on_status).reciprocal()


@dataclass(frozen=True)
class FactorMoments:
    """Mean and variance constants of the number of irreducible factors."""

    rho: RationalInterval
    mean: RationalInterval
    variance: RationalInterval

    def to_dict(self) -> dict[str, dict[str, object]]:
        return {
            "rho": self.rho.to_dict(),
            "mean": self.mean.to_dict(),
            "variance": self.variance.to_dict(),
        }


def variance_constant(
    rho: RationalInterval, first: RationalInterval, second: RationalInterval
) -> RationalInterval:
    """Variance constant from enclosures of rho, I'(rho) and I''(rho).

    s^2 = (rho I'' - rho I'^2 + I') / (rho^2 I'^3), obtained by differentiating
    twice the root rho(u) of u I(rho(u)) = 1.
    Vanishes when every factor has the same length (I = c t).
    """
    return (rho * second - rho * first**2 + first) / (rho**2 * first**3)


def factor_moments(
    model: Model,
    n: int,
    order: Optional[int] = None,
    on_status: Optional[Callable[[str], None]] = None,
) -> FactorMoments:
    """
    Interval enclosures of m and s^2 for the number of irreducible factors.

    With I(rho) = 1:
        m   = 1 / (rho I')
        s^2 = (rho I'' - rho I'^2 + I') / (rho^2 I'^3)
    I' and I'' are increasing on [0, rho], so their values at rho lie
    between the lower bound at rho^- and the upper bound at rho^+.
    """
    bounds = truncation_bounds(model, n, order)
    rho = RhoBracket(bounds, on_status=on_status).run().rounded_outward()
    first = RationalInterval(bounds.minus(rho.lo, 1), bounds.plus(rho.hi, 1)).rounded_outward()
    second = RationalInterval(bounds.minus(rho.lo, 2), bounds.plus(rho.hi, 2)).rounded_outward()
    mean = (rho * first).reciprocal()
    variance = variance_constant(rho, first, second)
    return FactorMoments(rho=rho, mean=mean, variance=variance)
