"""
Tests for the weakly directed generating functions.
"""

import pytest

from weakly_directed_walks.enumeration.weakly import (
    diagonal_irreducible_parts,
    irreducible_gf,
    irreducible_walk_gfs,
    nes_walk_gfs,
    weakly_bridge_gf,
    weakly_walk_gf,
)
from weakly_directed_walks.lattice.models import Model
from weakly_directed_walks.series.truncated import TruncatedSeries, mul


class TestNesWalks:
    """T, P and Q."""

    def test_total(self):
        """T = (1 + t) / (1 - 2t - t^2)."""
        assert nes_walk_gfs(5).total.as_integers() == [1, 3, 7, 17, 41, 99]

    def test_positive_first_terms(self):
        """Positive NES walks: 1, 2, 4, ..."""
        assert nes_walk_gfs(2).positive.as_integers() == [1, 2, 4]

    def test_copositive_is_shifted_positive(self):
        """Q = 1 + tP."""
        series = nes_walk_gfs(10)
        assert series.copositive == series.positive.shift(1) + 1

    def test_positive_orders(self):
        """All three series come back at the requested order."""
        series = nes_walk_gfs(12)
        assert series.total.order == series.positive.order == series.copositive.order == 12


class TestIrreducibleWalks:
    """T_i, P_i and Q_i."""

    def test_positive_factorisation(self):
        """P = 1 + P_i (1 + tB) rebuilds the positive walks."""
        from weakly_directed_walks.enumeration.bridges import bridge_sum
        from weakly_directed_walks.lattice.models import HORIZONTAL_NES

        order = 15
        positive = nes_walk_gfs(order).positive
        bridges = bridge_sum(HORIZONTAL_NES, order).shift(1) + 1
        assert mul(irreducible_walk_gfs(order).positive, bridges) + 1 == positive

    def test_integral_nonnegative(self):
        """Irreducible walk series count walks."""
        for s in irreducible_walk_gfs(20):
            coefficients = s.as_integers()
            assert coefficients[0] == 0
            assert all(c >= 0 for c in coefficients)


class TestWeaklyDirectedBridges:
    """I and W = 1 / (1 - I)."""

    def test_horizontal_first_terms(self):
        """I = t + 2t^2 + ..., W = 1 + t + 3t^2 + ..."""
        assert irreducible_gf(Model.HORIZONTAL, 2).as_integers() == [0, 1, 2]
        assert weakly_bridge_gf(Model.HORIZONTAL, 2).as_integers() == [1, 1, 3]

    def test_w_times_one_minus_i(self):
        """W (1 - I) = 1."""
        order = 25
        for model in Model:
            w = weakly_bridge_gf(model, order)
            i = irreducible_gf(model, order)
            assert mul(w, 1 - i) == TruncatedSeries.one(order)

    def test_diagonal_parts_integral(self):
        """Each diagonal irreducible part counts bridges."""
        for part in diagonal_irreducible_parts(20):
            assert all(c >= 0 for c in part.as_integers())

    def test_diagonal_single_steps(self):
        """N and E are the two diagonal bridges of length 1."""
        assert weakly_bridge_gf(Model.DIAGONAL, 1).as_integers() == [1, 2]

    def test_coefficients_nonnegative(self):
        """Certified bounds rely on I having non-negative coefficients."""
        for model in Model:
            assert all(c >= 0 for c in irreducible_gf(model, 60).as_integers())

    def test_ratio_near_growth_constant(self):
        """w_{n+1} / w_n lies in (2.5, 2.6) for 40 <= n <= 80 (horizontal, mu = 2.5447)."""
        w = weakly_bridge_gf(Model.HORIZONTAL, 81).as_integers()
        for n in range(40, 81):
            assert 2.5 < w[n + 1] / w[n] < 2.6
        assert 2.52 < w[60] / w[59] < 2.56


class TestWeaklyDirectedWalks:
    """All weakly directed walks, horizontal model."""

    def test_first_terms(self):
        """Up to length 4 every self-avoiding walk is weakly directed."""
        assert weakly_walk_gf(4).as_integers() == [1, 4, 12, 36, 100]

    def test_dominates_bridges(self):
        """Every weakly directed bridge is a weakly directed walk."""
        walks = weakly_walk_gf(20).as_integers()
        bridges = weakly_bridge_gf(Model.HORIZONTAL, 20).as_integers()
        assert all(a >= b for a, b in zip(walks, bridges))

    @pytest.mark.parametrize("order", [1, 5])
    def test_small_orders(self, order):
        """Short truncations still produce integral series."""
        assert len(weakly_walk_gf(order).as_integers()) == order + 1
