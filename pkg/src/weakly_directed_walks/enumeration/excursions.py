"""
Bounded-height excursions and the first-return recurrences.

Horizontal model, NES excursions of height at most k:
    E^(k) = 1 + t E^(k) + t^2 (E^(k-1) - 1) + t^3 (E^(k-1) - 1) E^(k),  E^(-1) = 1
    E^(k) = (G_{k-1} / G_k - 1) / t
Diagonal model, NSW excursions of height at most k:
    E_1^(k) = 1 + t^2 (E_1^(k-1) - 1) + t^2 E_1^(k-1) E_1^(k),  E_1^(0) = 1
    E_1^(k) = (2 - t^2) G_{k-1} / G_k - 1                        (k >= 1)
"""

from weakly_directed_walks.enumeration.bridges import IdentityMismatch, gk
from weakly_directed_walks.lattice.models import (
    DIAGONAL_ESW,
    BridgeFamily,
    Model,
    StepSet,
    UnsupportedFamily,
)
from weakly_directed_walks.series.polynomial import LatticePolynomial
from weakly_directed_walks.series.truncated import TruncatedSeries, div


def _t(power: int, order: int, coefficient: int = 1) -> TruncatedSeries:
    return TruncatedSeries.monomial(power, order, coefficient)


def _check_family(family: BridgeFamily, k: int) -> Model:
    if family.stepset is StepSet.ES:
        raise UnsupportedFamily("ES walks have no bounded-height excursion recurrence")
    lowest = -1 if family.model is Model.HORIZONTAL else 0
    if k < lowest:
        raise ValueError(f"{family.name} excursions start at k = {lowest}, got {k}")
    return family.model


def excursions_by_recurrence(family: BridgeFamily, k: int, order: int) -> TruncatedSeries:
    """E^(k) (horizontal) or E_1^(k) (diagonal) by the first-return recurrence."""
    model = _check_family(family, k)
    one = TruncatedSeries.one(order)
    current = one
    if model is Model.HORIZONTAL:
        for _ in range(-1, k):
            excess = current - 1
            current = div(one + _t(2, order) * excess, one - _t(1, order) - _t(3, order) * excess)
    else:
        for _ in range(0, k):
            current = div(one + _t(2, order) * (current - 1), one - _t(2, order) * current)
    return current


def excursion_closed_form(family: BridgeFamily, k: int, order: int) -> TruncatedSeries:
    """Bounded-height excursions from the ratio of consecutive denominators."""
    model = _check_family(family, k)
    if model is Model.HORIZONTAL:
        if k == -1:
            return TruncatedSeries.one(order)
        difference = gk(family, k - 1) - gk(family, k)
        numerator = LatticePolynomial.of(difference.coefficients[1:])
        return div(numerator.to_series(order), gk(family, k).to_series(order))
    if k == 0:
        return TruncatedSeries.one(order)
    numerator = (2 - LatticePolynomial.t(2)) * gk(family, k - 1) - gk(family, k)
    return div(numerator.to_series(order), gk(family, k).to_series(order))


def excursion_series(family: BridgeFamily, k: int, order: int) -> TruncatedSeries:
    """Bounded-height excursion series, computed twice and compared.

    Raises:
        IdentityMismatch: if the recurrence and the closed form differ.
        UnsupportedFamily: for the diagonal ES family.
    """
    by_recurrence = excursions_by_recurrence(family, k, order)
    closed = excursion_closed_form(family, k, order)
    if by_recurrence != closed:
        raise IdentityMismatch(f"{family.name} excursions of height {k} disagree")
    return by_recurrence


def d1_series(k: int, order: int) -> TruncatedSeries:
    """NSW excursions of height at most k that do not end with S (diagonal model).

    Height 0 only allows the empty excursion. For k >= 1 the series is read
    off 1 + E_1^(k) = (2 - t^2) D_1^(k).
    """
    if k < 0:
        raise ValueError(f"height must be non-negative, got {k}")
    if k == 0:
        return TruncatedSeries.one(order)
    excursions = excursion_series(DIAGONAL_ESW, k, order)
    return div(excursions + 1, TruncatedSeries.of([2, 0, -1], order))


def pseudo_bridge_by_excursions(family: BridgeFamily, k: int, order: int) -> TruncatedSeries:
    """Pseudo-bridges of height k by cutting at the last visit of each height.

    horizontal NES:  B^(k)   = (1 + t E^(k)) t B^(k-1),    B^(0) = 1 / (1 - t)
    diagonal NES:    B_2^(k) = (1 + E_1^(k)) t B_2^(k-1),  B_2^(0) = 1
    diagonal ESW:    B_1^(k) = D_1^(k) t B_1^(k-1),        B_1^(0) = 1
    """
    if k < 0:
        raise ValueError(f"height must be non-negative, got {k}")
    _check_family(family, 0)
    one = TruncatedSeries.one(order)
    if family.model is Model.HORIZONTAL:
        current = div(one, one - _t(1, order))
        for height in range(1, k + 1):
            excursions = excursions_by_recurrence(family, height, order)
            current = ((one + excursions.shift(1)) * current).shift(1)
        return current
    current = one
    for height in range(1, k + 1):
        if family.stepset is StepSet.NES:
            factor = one + excursions_by_recurrence(family, height, order)
        else:
            factor = d1_series(height, order)
        current = (factor * current).shift(1)
    return current


def proper_walk_series(order: int) -> TruncatedSeries:
    """Words of (N + E (S^+ E)^*)^*, i.e. NES walks not starting or ending with S."""
    one = TruncatedSeries.one(order)
    t = _t(1, order)
    one_minus_t = one - t
    letter_e = div(t * one_minus_t, one_minus_t - _t(2, order))
    return div(one, one - t - letter_e)
