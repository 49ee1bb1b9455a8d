"""
Pseudo-bridge generating functions of the partially directed families.

Implements:
- gk: the denominators G_k (horizontal NES, diagonal ESW/NES) and F_k
  (diagonal ES), built by their three-term recurrences and memoised
- pseudo_bridge_series: B^(k) = t^k / G_k and its diagonal variants
- bridge_sum: B = sum of B^(k) over all heights, exact at a given order
- closed forms through the kernel root U, used as float cross-checks
"""

import math
import threading
from dataclasses import dataclass
from functools import lru_cache

from weakly_directed_walks.lattice.models import (
    DIAGONAL_ES,
    DIAGONAL_NES,
    HORIZONTAL_NES,
    BridgeFamily,
    Model,
    StepSet,
    UnsupportedFamily,
)
from weakly_directed_walks.series.polynomial import LatticePolynomial
from weakly_directed_walks.series.truncated import TruncatedSeries, div, expand_in_v


class IdentityMismatch(RuntimeError):
    """Two independent routes to the same series disagree."""


T = LatticePolynomial.t()
ONE = LatticePolynomial.constant(1)


@dataclass(frozen=True)
class _Recurrence:
    """P_{k+1} = step * P_k - lag * P_{k-1}, seeded at first_index and first_index + 1."""

    first_index: int
    seeds: tuple[LatticePolynomial, LatticePolynomial]
    step: LatticePolynomial
    lag: LatticePolynomial


_HORIZONTAL = _Recurrence(
    first_index=-1,
    seeds=(ONE, ONE - T),
    step=LatticePolynomial.of([1, -1, 1, 1]),
    lag=T**2,
)
_DIAGONAL = _Recurrence(
    first_index=0,
    seeds=(ONE, ONE - T**2),
    step=ONE + T**2,
    lag=T**2 * (2 - T**2),
)
_DIAGONAL_ES = _Recurrence(
    first_index=-1,
    seeds=(ONE, ONE),
    step=ONE,
    lag=T**2,
)


def _recurrence_for(family: BridgeFamily) -> _Recurrence:
    if family.model is Model.HORIZONTAL:
        return _HORIZONTAL
    if family.stepset is StepSet.ES:
        return _DIAGONAL_ES
    return _DIAGONAL


class _DenominatorTable:
    """Lazily extended lists of denominators, one per recurrence."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._tables: dict[int, list[LatticePolynomial]] = {}

    def get(self, recurrence: _Recurrence, k: int) -> LatticePolynomial:
        index = k - recurrence.first_index
        with self._lock:
            table = self._tables.setdefault(id(recurrence), list(recurrence.seeds))
            while len(table) <= index:
                table.append(recurrence.step * table[-1] - recurrence.lag * table[-2])
            return table[index]


_TABLE = _DenominatorTable()


def gk(family: BridgeFamily, k: int) -> LatticePolynomial:
    """The k-th denominator polynomial of a family.

    Horizontal NES and diagonal ES start at k = -1, the diagonal ESW/NES
    recurrence at k = 0. Diagonal ESW and NES share their denominators.
    """
    recurrence = _recurrence_for(family)
    if k < recurrence.first_index:
        raise ValueError(
            f"{family.name} denominators start at k = {recurrence.first_index}, got {k}"
        )
    return _TABLE.get(recurrence, k)


def _numerator(family: BridgeFamily, k: int) -> LatticePolynomial:
    """Numerator divided by t^k (so 1, except (2 - t^2)^k for diagonal NES)."""
    if family == DIAGONAL_NES:
        return (2 - T**2) ** k
    return ONE


def pseudo_bridge_series(family: BridgeFamily, k: int, order: int) -> TruncatedSeries:
    """Length generating function of pseudo-bridges of height k, to order."""
    if k < 0:
        raise ValueError(f"height must be non-negative, got {k}")
    if k > order:
        return TruncatedSeries.zero(order)
    inner = order - k
    quotient = div(_numerator(family, k).to_series(inner), gk(family, k).to_series(inner))
    return TruncatedSeries.of([0] * k + list(quotient.coefficients), order)


@lru_cache(maxsize=64)
def bridge_sum(family: BridgeFamily, order: int) -> TruncatedSeries:
    """B = sum over k of B^(k); the k-th term has valuation k, so k <= order suffices."""
    total = TruncatedSeries.zero(order)
    for k in range(order + 1):
        total = total + pseudo_bridge_series(family, k, order)
    return total


def denominator_generating_function(family: BridgeFamily, count: int) -> list[LatticePolynomial]:
    """First `count` denominators read off the rational generating function sum v^k P_k.

    Horizontal:  (1 - t - t^2 v) / (1 - (1 - t + t^2 + t^3) v + t^2 v^2), from k = 0
    Diagonal:    (1 - 2 t^2 v) / (1 - (1 + t^2) v + t^2 (2 - t^2) v^2), from k = 0
    Diagonal ES: (1 - t^2 v) / (1 - v + t^2 v^2), from k = 0
    """
    order = 3 * count + 1
    if family.model is Model.HORIZONTAL:
        numerator = [ONE - T, -(T**2)]
        step, lag = _HORIZONTAL.step, _HORIZONTAL.lag
    elif family.stepset is StepSet.ES:
        numerator = [ONE, -(T**2)]
        step, lag = _DIAGONAL_ES.step, _DIAGONAL_ES.lag
    else:
        numerator = [ONE, LatticePolynomial.t(2, -2)]
        step, lag = _DIAGONAL.step, _DIAGONAL.lag
    denominator = [ONE, -step, lag]
    expanded = expand_in_v(
        [p.to_series(order) for p in numerator],
        [p.to_series(order) for p in denominator],
        count,
    )
    return [LatticePolynomial.of(s.as_integers()) for s in expanded]


def kernel_root(t: float, family: BridgeFamily = HORIZONTAL_NES) -> float:
    """The small root U of the kernel, real for t below the branch point."""
    if family.model is Model.HORIZONTAL:
        disc = (1 - t**4) * (1 - 2 * t - t**2)
        return (1 - t + t**2 + t**3 - math.sqrt(disc)) / (2 * t)
    if family == DIAGONAL_ES:
        return (1 - math.sqrt(1 - 4 * t**2)) / (2 * t)
    return (1 + t**2 - math.sqrt((1 - t**2) * (1 - 5 * t**2))) / (2 * t)


def pseudo_bridge_closed_form(t: float, k: int, family: BridgeFamily = HORIZONTAL_NES) -> float:
    """Float value of B^(k)(t) from the closed form in U and 1/U."""
    u = kernel_root(t, family)
    ubar = 1 / u
    if family.model is Model.HORIZONTAL:
        return (u - ubar) / (((1 - t) * u - t) * u**k - ((1 - t) * ubar - t) * ubar**k)
    if family == DIAGONAL_ES:
        return (u**2 - ubar**2) / (u ** (k + 2) - ubar ** (k + 2))
    shifted = (2 - t**2) * ubar
    value = (u - shifted) / ((u - 2 * t) * u**k - (shifted - 2 * t) * shifted**k)
    if family == DIAGONAL_NES:
        value *= (2 - t**2) ** k
    return value
