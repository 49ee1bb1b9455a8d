"""
Generating functions of weakly directed walks.

- irreducible_gf: partially directed irreducible bridges I (both models)
- weakly_bridge_gf: W = 1 / (1 - I)
- nes_walk_gfs / irreducible_walk_gfs: NES walks (all, positive, copositive)
  and their irreducible counterparts
- weakly_walk_gf: all weakly directed walks (horizontal model)
"""

from functools import lru_cache
from typing import NamedTuple

from weakly_directed_walks.enumeration.bridges import bridge_sum
from weakly_directed_walks.lattice.models import (
    DIAGONAL_ES,
    DIAGONAL_ESW,
    DIAGONAL_NES,
    HORIZONTAL_NES,
    Model,
)
from weakly_directed_walks.series.truncated import TruncatedSeries, div, mul, sqrt


class NesWalkSeries(NamedTuple):
    """Total, positive and copositive NES-walk series."""

    total: TruncatedSeries
    positive: TruncatedSeries
    copositive: TruncatedSeries


class DiagonalIrreducibleParts(NamedTuple):
    """Irreducible diagonal bridges over ESW, NES and ES."""

    esw: TruncatedSeries
    nes: TruncatedSeries
    es: TruncatedSeries


def _t(power: int, order: int, coefficient: int = 1) -> TruncatedSeries:
    return TruncatedSeries.monomial(power, order, coefficient)


def _irreducible_from_bridges(scaled: TruncatedSeries) -> TruncatedSeries:
    """X / (1 + X): irreducible bridges from non-empty bridges X = c t B."""
    return div(scaled, scaled + 1)


@lru_cache(maxsize=32)
def diagonal_irreducible_parts(order: int) -> DiagonalIrreducibleParts:
    return DiagonalIrreducibleParts(
        esw=_irreducible_from_bridges(bridge_sum(DIAGONAL_ESW, order).shift(1)),
        nes=_irreducible_from_bridges(bridge_sum(DIAGONAL_NES, order).shift(1) * 2),
        es=_irreducible_from_bridges(bridge_sum(DIAGONAL_ES, order).shift(1)),
    )


@lru_cache(maxsize=32)
def irreducible_gf(model: Model, order: int) -> TruncatedSeries:
    """Partially directed irreducible bridges.

    horizontal: I = 2 tB / (1 + tB) - t
    diagonal:   I = 2 I_ESW + 2 I_NES - 2 I_ES - 2t
    """
    t = _t(1, order)
    if model is Model.HORIZONTAL:
        nes = _irreducible_from_bridges(bridge_sum(HORIZONTAL_NES, order).shift(1))
        return nes * 2 - t
    parts = diagonal_irreducible_parts(order)
    return (parts.esw + parts.nes - parts.es - t) * 2


@lru_cache(maxsize=32)
def weakly_bridge_gf(model: Model, order: int) -> TruncatedSeries:
    """Bridges whose irreducible factors are partially directed: 1 / (1 - I)."""
    one = TruncatedSeries.one(order)
    return div(one, one - irreducible_gf(model, order))


@lru_cache(maxsize=32)
def nes_walk_gfs(order: int) -> NesWalkSeries:
    """T = (1 + t) / (1 - 2t - t^2), P from a square root, Q = 1 + tP."""
    one = TruncatedSeries.one(order)
    t = _t(1, order)
    quadratic = one - _t(1, order, 2) - _t(2, order)
    total = div(one + t, quadratic)
    # P needs two extra terms: it is read off after dividing by 2t^2
    wide = order + 2
    wide_quadratic = TruncatedSeries.of([1, -2, -1], wide)
    radicand = div(TruncatedSeries.of([1, 0, 0, 0, -1], wide), wide_quadratic)
    root = sqrt(radicand)
    positive = (root - TruncatedSeries.of([1, 1], wide)).shift(-2) / 2
    copositive = one + positive.shift(1)
    return NesWalkSeries(total, positive, copositive)


@lru_cache(maxsize=32)
def irreducible_walk_gfs(order: int) -> NesWalkSeries:
    """Irreducible NES walks: general T_i, positive P_i, copositive Q_i."""
    total, positive, copositive = nes_walk_gfs(order)
    bridges = bridge_sum(HORIZONTAL_NES, order).shift(1) + 1
    positive_i = div(positive - 1, bridges)
    copositive_i = div(copositive - 1, bridges)
    total_i = total - 1 - mul(mul(copositive_i, bridges), positive_i) * 2
    return NesWalkSeries(total_i, positive_i, copositive_i)


@lru_cache(maxsize=32)
def weakly_walk_gf(order: int) -> TruncatedSeries:
    """All weakly directed walks (horizontal lines):

    1 + (2 T_i - 2t) + 2 (2 Q_i - t) W (2 P_i - t)
    """
    total_i, positive_i, copositive_i = irreducible_walk_gfs(order)
    t = _t(1, order)
    weakly = weakly_bridge_gf(Model.HORIZONTAL, order)
    ends = mul(mul(copositive_i * 2 - t, weakly), positive_i * 2 - t)
    return (total_i - t) * 2 + ends * 2 + 1
