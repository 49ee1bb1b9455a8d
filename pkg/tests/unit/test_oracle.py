"""
Tests for the walk predicates and the brute-force enumerator.
"""

import numpy as np
import pytest

from weakly_directed_walks.lattice.models import (
    STEP_VECTORS,
    Axis,
    Model,
    NotSelfAvoiding,
    Walk,
)
from weakly_directed_walks.oracle.enumerator import (
    LimitExceeded,
    WalkEnumerator,
    count_walks,
    find_diagonal_witness,
    positive_prefix,
    weakly_directed_prefix,
)
from weakly_directed_walks.oracle.predicates import (
    factor_irreducible,
    has_partially_directed_factors,
    is_bridge,
    is_copositive,
    is_excursion,
    is_irreducible,
    is_partially_directed,
    is_positive,
    is_pseudo_bridge,
    is_weakly_directed,
    reflect,
    separating_steps,
    uses_only,
)

SAW_COUNTS = [1, 4, 12, 36, 100, 284, 780, 2172]


class TestWalk:
    """Walk construction."""

    def test_rejects_self_intersection(self):
        """Returning to a visited vertex is rejected."""
        with pytest.raises(NotSelfAvoiding):
            Walk("ENWS")
        with pytest.raises(NotSelfAvoiding):
            Walk("NS")

    def test_rejects_unknown_letter(self):
        """Only N, E, S, W are steps."""
        with pytest.raises(NotSelfAvoiding):
            Walk("NX")

    def test_vertices_and_heights(self):
        """Vertices follow the steps; heights depend on the model."""
        w = Walk("NEE")
        assert w.vertices == ((0, 0), (0, 1), (1, 1), (2, 1))
        assert w.heights(Model.HORIZONTAL) == [0, 1, 1, 1]
        assert w.heights(Model.DIAGONAL) == [0, 1, 2, 3]

    def test_join(self):
        """Concatenation of step strings."""
        assert Walk.join([Walk("N"), Walk("EN")]).steps == "NEN"


class TestPredicates:
    """Definitional predicates."""

    def test_partially_directed(self):
        """At most three letters."""
        assert is_partially_directed(Walk("NEES"))
        assert not is_partially_directed(Walk("ENWWS"))

    def test_weakly_directed_horizontal(self):
        """ENWWS returns to height 0 after using all four letters."""
        assert not is_weakly_directed(Walk("ENWWS"), Model.HORIZONTAL)
        assert is_weakly_directed(Walk("ENWWN"), Model.HORIZONTAL)
        assert is_weakly_directed(Walk(""), Model.HORIZONTAL)

    def test_bridge(self):
        """Bridges stay at or above the start and strictly below the end."""
        assert is_bridge(Walk(""))
        assert is_bridge(Walk("N"))
        assert is_bridge(Walk("ENEN"))
        assert not is_bridge(Walk("E"))
        assert not is_bridge(Walk("NEN" + "ES"))
        assert is_bridge(Walk("E"), Model.DIAGONAL)

    def test_pseudo_bridge(self):
        """Pseudo-bridges may touch the final height before the end."""
        assert is_pseudo_bridge(Walk("NE"))
        assert not is_bridge(Walk("NE"))
        assert not is_pseudo_bridge(Walk("NES"))

    def test_positive_and_copositive(self):
        """Height bounds relative to start and end."""
        assert is_positive(Walk("ENES"))
        assert not is_positive(Walk("ES"))
        assert is_copositive(Walk("SEN" + "N"))
        assert not is_copositive(Walk("NE"))

    def test_excursion(self):
        """Positive walks ending at height 0, optionally bounded."""
        assert is_excursion(Walk("NES"))
        assert not is_excursion(Walk("NES"), max_height=0)
        assert not is_excursion(Walk("N"))

    def test_uses_only(self):
        """Alphabet restriction."""
        assert uses_only(Walk("NEES"), "NES")
        assert not uses_only(Walk("NW"), "NES")


class TestFactorisation:
    """Separating steps and irreducible factors."""

    def test_separating_steps(self):
        """Each N of a straight line separates."""
        assert separating_steps(Walk("NNN")) == [0, 1, 2]
        assert separating_steps(Walk("NEES")) == []

    def test_factor_bridge(self):
        """A bridge factors into irreducible bridges."""
        factors = factor_irreducible(Walk("NENWN"))
        assert [f.steps for f in factors] == ["N", "EN", "WN"]
        assert all(is_bridge(f) for f in factors)

    def test_empty_walk(self):
        """The empty walk has no factor and is not irreducible."""
        assert factor_irreducible(Walk("")) == []
        assert not is_irreducible(Walk(""))

    def test_irreducible(self):
        """Walks without an inner separating step are irreducible."""
        assert is_irreducible(Walk("N"))
        assert is_irreducible(Walk("EEN"))
        assert not is_irreducible(Walk("NN"))

    def test_partially_directed_factors(self):
        """The factor test inspects each irreducible factor."""
        assert has_partially_directed_factors(Walk("NENWN"))


def random_walk(rng: np.random.Generator, max_length: int) -> Walk:
    """Grow a self-avoiding walk one free neighbour at a time, up to a random length."""
    x, y = 0, 0
    visited = {(0, 0)}
    steps: list[str] = []
    target = int(rng.integers(0, max_length + 1))
    while len(steps) < target:
        options = [
            letter for letter, (dx, dy) in STEP_VECTORS.items() if (x + dx, y + dy) not in visited
        ]
        if not options:
            break
        letter = options[int(rng.integers(len(options)))]
        dx, dy = STEP_VECTORS[letter]
        x, y = x + dx, y + dy
        visited.add((x, y))
        steps.append(letter)
    return Walk("".join(steps))


class TestFactorisationSoundness:
    """Factors of random walks concatenate back and are irreducible."""

    def check(self, rng, count, model):
        for _ in range(count):
            w = random_walk(rng, 40)
            factors = factor_irreducible(w, model)
            assert "".join(f.steps for f in factors) == w.steps
            assert all(is_irreducible(f, model) for f in factors)
            inner = [i for i in separating_steps(w, model) if i < len(w) - 1]
            assert len(factors) == (len(inner) + 1 if w.steps else 0)

    @pytest.mark.parametrize("model", [Model.HORIZONTAL, Model.DIAGONAL])
    def test_random_walks(self, rng, model):
        """2000 random walks per model."""
        self.check(rng, 2000, model)

    @pytest.mark.slow
    def test_many_random_walks(self, rng):
        """10^5 random walks, both models."""
        self.check(rng, 50_000, Model.HORIZONTAL)
        self.check(rng, 50_000, Model.DIAGONAL)


class TestReflect:
    """Letterwise reflections."""

    @pytest.mark.parametrize("axis", list(Axis))
    def test_involution(self, axis):
        """Reflecting twice gives the walk back."""
        w = Walk("NEESEN")
        assert reflect(reflect(w, axis), axis) == w

    def test_y_axis(self):
        """E and W swap."""
        assert reflect(Walk("NEN"), Axis.Y_AXIS).steps == "NWN"

    def test_main_diagonal(self):
        """N and E swap, S and W swap."""
        assert reflect(Walk("NES"), Axis.MAIN_DIAGONAL).steps == "ENW"


class TestEnumerator:
    """Depth-first enumeration."""

    def test_saw_counts(self):
        """Number of self-avoiding walks of length 0..7."""
        assert WalkEnumerator().counts_by_length(7) == SAW_COUNTS

    def test_count_walks(self):
        """Module shortcut with a predicate."""
        assert count_walks(3) == 36
        assert count_walks(2, lambda w: is_bridge(w)) == 3

    def test_alphabet(self):
        """NES walks: 1, 3, 7, 17, 41."""
        assert WalkEnumerator().counts_by_length(4, alphabet="NES") == [1, 3, 7, 17, 41]

    def test_positive_prefix_preserves_counts(self):
        """Pruning by a prefix-closed property does not change counts."""
        enumerator = WalkEnumerator()
        pruned = enumerator.counts_by_length(
            7, lambda w: is_positive(w), prefix_filter=positive_prefix(Model.HORIZONTAL)
        )
        full = enumerator.counts_by_length(7, lambda w: is_positive(w))
        assert pruned == full

    def test_weakly_directed_prefix_preserves_counts(self):
        """The weakly directed pruning agrees with the full predicate."""
        enumerator = WalkEnumerator()
        for model in Model:
            predicate = lambda w, m=model: is_weakly_directed(w, m)  # noqa: E731
            pruned = enumerator.counts_by_length(
                7, predicate, prefix_filter=weakly_directed_prefix(model)
            )
            assert pruned == enumerator.counts_by_length(7, predicate)

    def test_limit(self):
        """Lengths above the configured maximum are refused."""
        enumerator = WalkEnumerator(max_length=5)
        with pytest.raises(LimitExceeded):
            enumerator.counts_by_length(6)
        with pytest.raises(ValueError):
            list(enumerator.walks(-1))

    def test_limit_from_environment(self, isolated_config, monkeypatch):
        """WDW_ORACLE_MAX sets the default maximum."""
        monkeypatch.setenv("WDW_ORACLE_MAX", "3")
        assert WalkEnumerator().max_length == 3

    def test_status_callback(self):
        """Progress is reported through on_status."""
        messages = []
        WalkEnumerator(on_status=messages.append).counts_by_length(3)
        assert messages and "up to length 3" in messages[-1]


class TestDiagonalWitness:
    """A weakly directed diagonal bridge need not have partially directed factors."""

    def test_known_witness(self):
        """NNNWSWNNNE is a weakly directed diagonal bridge and is irreducible."""
        w = Walk("NNNWSWNNNE")
        assert is_bridge(w, Model.DIAGONAL)
        assert is_weakly_directed(w, Model.DIAGONAL)
        assert not has_partially_directed_factors(w, Model.DIAGONAL)

    def test_search_finds_witness(self):
        """The search returns a witness of length at most 10."""
        witness = find_diagonal_witness(10)
        assert witness is not None
        assert len(witness) <= 10
        assert is_bridge(witness, Model.DIAGONAL)
        assert is_weakly_directed(witness, Model.DIAGONAL)
        assert not has_partially_directed_factors(witness, Model.DIAGONAL)
