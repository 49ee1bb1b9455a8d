"""
Denominators of pseudo-bridges seen as paths with generalised steps.

A pseudo-bridge of height k with ascending steps of weight A and
descending steps of height h and weight D_h has generating function
A^k / H_k, where

    H_k = H_{k-1} - sum_{h=0}^{k} D_h A^h H_{k-h-1},   H_{-1} = 1,

equivalently sum_k H_k v^k = (1 - D(vA)) / (1 - v + v D(vA)).
"""

from dataclasses import dataclass, field

from weakly_directed_walks.series.truncated import TruncatedSeries, div, expand_in_v, mul


@dataclass(frozen=True)
class HeapSpec:
    """Ascending weight A and descent weights D_0, D_1, ... (by descent height)."""

    ascending: TruncatedSeries
    descents: tuple[TruncatedSeries, ...] = field(default_factory=tuple)

    @property
    def order(self) -> int:
        return min(s.order for s in (self.ascending, *self.descents))


def _ascending_powers(spec: HeapSpec, count: int, order: int) -> list[TruncatedSeries]:
    powers = [TruncatedSeries.one(order)]
    ascending = spec.ascending.truncate(order)
    for _ in range(1, count):
        powers.append(mul(powers[-1], ascending))
    return powers


def heap_denominators(spec: HeapSpec, kmax: int, order: int) -> list[TruncatedSeries]:
    """[H_0, ..., H_kmax] by the first-descent recurrence."""
    if kmax < 0:
        raise ValueError(f"kmax must be non-negative, got {kmax}")
    order = min(order, spec.order)
    powers = _ascending_powers(spec, kmax + 1, order)
    weighted = [
        mul(d.truncate(order), powers[h])
        for h, d in enumerate(spec.descents[: kmax + 1])
    ]
    denominators = [TruncatedSeries.one(order)]  # H_{-1}
    for k in range(kmax + 1):
        acc = denominators[-1]
        for h, term in enumerate(weighted[: k + 1]):
            if term.valuation() is not None:
                acc = acc - mul(term, denominators[k - h])
        denominators.append(acc)
    return denominators[1:]


def heap_series_denominators(spec: HeapSpec, kmax: int, order: int) -> list[TruncatedSeries]:
    """[H_0, ..., H_kmax] read off (1 - D(vA)) / (1 - v + v D(vA))."""
    order = min(order, spec.order)
    powers = _ascending_powers(spec, kmax + 2, order)
    weighted = [
        mul(d.truncate(order), powers[h])
        for h, d in enumerate(spec.descents[: kmax + 2])
    ]
    one = TruncatedSeries.one(order)
    zero = TruncatedSeries.zero(order)
    head = weighted[0] if weighted else zero
    numerator = [one - head] + [-w for w in weighted[1:]]
    denominator = [one, head - 1] + list(weighted[1:])
    return expand_in_v(numerator, denominator, kmax + 1)


def _t(power: int, order: int, coefficient: int = 1) -> TruncatedSeries:
    return TruncatedSeries.monomial(power, order, coefficient)


def horizontal_heap(heights: int, order: int) -> HeapSpec:
    """NES walks: A = t, D(v) = t / (1 - t^2 v / (1 - t v))."""
    one = TruncatedSeries.one(order)
    descents = expand_in_v(
        [_t(1, order), _t(2, order, -1)],
        [one, -(_t(1, order) + _t(2, order))],
        heights + 1,
    )
    return HeapSpec(_t(1, order), tuple(descents))


def diagonal_esw_heap(heights: int, order: int) -> HeapSpec:
    """ESW walks, diagonal heights: A = t, D(v) = t v / (1 - t^2 v^2 / (1 - t v))."""
    one = TruncatedSeries.one(order)
    descents = expand_in_v(
        [TruncatedSeries.zero(order), _t(1, order), _t(2, order, -1)],
        [one, -_t(1, order), -_t(2, order)],
        heights + 1,
    )
    return HeapSpec(_t(1, order), tuple(descents))


def diagonal_nes_heap(heights: int, order: int) -> HeapSpec:
    """NES walks, diagonal heights.

    A = t (2 - t^2) / (1 - t^2); the descent series carries a 1/v term, so
    v D(v) = t (1 - t v) / (1 - t^2 - t v) - t / (1 - t^2) is expanded and
    shifted down by one power of v.
    """
    one = TruncatedSeries.one(order)
    one_minus_t2 = one - _t(2, order)
    shifted = expand_in_v(
        [_t(1, order), _t(2, order, -1)],
        [one_minus_t2, -_t(1, order)],
        heights + 2,
    )
    ascending = div(_t(1, order, 2) - _t(3, order), one_minus_t2)
    return HeapSpec(ascending, tuple(shifted[1:]))


def diagonal_nes_via_heaps(k: int, order: int) -> TruncatedSeries:
    """B_2^(k) as A^k / H_{k-2} (k >= 2), with the first values 1 and A."""
    if k < 0:
        raise ValueError(f"height must be non-negative, got {k}")
    spec = diagonal_nes_heap(max(k - 2, 0), order)
    if k == 0:
        return TruncatedSeries.one(order)
    power = spec.ascending
    for _ in range(1, k):
        power = mul(power, spec.ascending)
    if k == 1:
        return power
    return div(power, heap_denominators(spec, k - 2, order)[k - 2])
