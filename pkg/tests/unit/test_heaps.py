"""
Tests for the generalised-step (heap) denominators.
"""

import pytest

from weakly_directed_walks.enumeration.bridges import gk, pseudo_bridge_series
from weakly_directed_walks.enumeration.heaps import (
    HeapSpec,
    diagonal_esw_heap,
    diagonal_nes_via_heaps,
    heap_denominators,
    heap_series_denominators,
    horizontal_heap,
)
from weakly_directed_walks.lattice.models import DIAGONAL_ESW, DIAGONAL_NES, HORIZONTAL_NES
from weakly_directed_walks.series.truncated import TruncatedSeries

ORDER = 50
KMAX = 20


class TestHeapDenominators:
    """H_k from the first-descent recurrence."""

    def test_horizontal_reproduces_gk(self):
        """With A = t and the NES descent weights, H_k = G_k for k <= 20."""
        spec = horizontal_heap(KMAX, ORDER)
        for k, h in enumerate(heap_denominators(spec, KMAX, ORDER)):
            assert h == gk(HORIZONTAL_NES, k).to_series(ORDER), f"k={k}"

    def test_diagonal_esw_reproduces_gk(self):
        """ESW walks under diagonal heights give the diagonal G_k."""
        spec = diagonal_esw_heap(KMAX, ORDER)
        for k, h in enumerate(heap_denominators(spec, KMAX, ORDER)):
            assert h == gk(DIAGONAL_ESW, k).to_series(ORDER), f"k={k}"

    def test_two_routes_agree(self):
        """Recurrence and rational generating function give the same H_k."""
        spec = horizontal_heap(10, 30)
        assert heap_denominators(spec, 10, 30) == heap_series_denominators(spec, 10, 30)

    def test_no_descents(self):
        """Without descents every H_k is 1."""
        spec = HeapSpec(TruncatedSeries.monomial(1, 5))
        assert heap_denominators(spec, 3, 5) == [TruncatedSeries.one(5)] * 4

    def test_negative_kmax(self):
        """kmax must be non-negative."""
        with pytest.raises(ValueError):
            heap_denominators(horizontal_heap(2, 5), -1, 5)

    @pytest.mark.parametrize("k", range(0, 21))
    def test_diagonal_nes_via_heaps(self, k):
        """B_2^(k) from A^k / H_{k-2} equals t^k (2 - t^2)^k / G_k."""
        order = 40
        assert diagonal_nes_via_heaps(k, order) == pseudo_bridge_series(DIAGONAL_NES, k, order)
