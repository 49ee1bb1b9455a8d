"""
Definitional predicates on walks.

Every check follows the plain definition (no shortcut through the
factorisation theorems, which are what the tests exercise):
- partially directed: at most three distinct step letters
- weakly directed: partially directed between any two visits of a line
- bridge / pseudo-bridge / positive / copositive / excursion: height bounds
- separating step: the only step crossing some line h + 1/2
"""

from collections import Counter
from typing import Iterable, Optional

from weakly_directed_walks.lattice.models import Axis, Model, Walk


def uses_only(w: Walk, letters: Iterable[str]) -> bool:
    return w.letters <= frozenset(letters)


def is_partially_directed(w: Walk) -> bool:
    return len(w.letters) <= 3


def is_weakly_directed(w: Walk, model: Model = Model.HORIZONTAL) -> bool:
    """Every subwalk between two vertices of equal height (inclusive) uses <= 3 letters."""
    heights = w.heights(model)
    steps = w.steps
    for i in range(len(heights)):
        seen: set[str] = set()
        for j in range(i + 1, len(heights)):
            seen.add(steps[j - 1])
            if len(seen) == 4 and heights[j] == heights[i]:
                return False
    return True


def is_bridge(w: Walk, model: Model = Model.HORIZONTAL) -> bool:
    """h(v_0) <= h(v) < h(v_n) for every vertex but the last; the empty walk is a bridge."""
    heights = w.heights(model)
    final = heights[-1]
    return all(heights[0] <= h < final for h in heights[:-1])


def is_pseudo_bridge(w: Walk, model: Model = Model.HORIZONTAL) -> bool:
    """0 <= h(v) <= h(v_n) for every vertex."""
    heights = w.heights(model)
    return all(0 <= h <= heights[-1] for h in heights)


def is_positive(w: Walk, model: Model = Model.HORIZONTAL) -> bool:
    return all(h >= 0 for h in w.heights(model))


def is_copositive(w: Walk, model: Model = Model.HORIZONTAL) -> bool:
    """Every vertex but the last lies strictly below the endpoint."""
    heights = w.heights(model)
    return all(h < heights[-1] for h in heights[:-1])


def is_excursion(w: Walk, model: Model = Model.HORIZONTAL, max_height: Optional[int] = None) -> bool:
    """Positive walk returning to height 0, optionally bounded above."""
    heights = w.heights(model)
    if heights[-1] != 0 or min(heights) < 0:
        return False
    return max_height is None or max(heights) <= max_height


def separating_steps(w: Walk, model: Model = Model.HORIZONTAL) -> list[int]:
    """Indices of steps that are the unique crossing of their line h + 1/2."""
    heights = w.heights(model)
    crossings: list[tuple[int, int]] = []
    for index in range(len(w.steps)):
        low, high = heights[index], heights[index + 1]
        if low != high:
            crossings.append((index, min(low, high)))
    per_level = Counter(level for _, level in crossings)
    return [index for index, level in crossings if per_level[level] == 1]


def factor_irreducible(w: Walk, model: Model = Model.HORIZONTAL) -> list[Walk]:
    """Cut after every non-final separating step; the empty walk has no factor."""
    if not w.steps:
        return []
    cuts = [i + 1 for i in separating_steps(w, model) if i < len(w.steps) - 1]
    bounds = [0, *cuts, len(w.steps)]
    return [Walk(w.steps[a:b]) for a, b in zip(bounds, bounds[1:])]


def is_irreducible(w: Walk, model: Model = Model.HORIZONTAL) -> bool:
    return bool(w.steps) and len(factor_irreducible(w, model)) == 1


def has_partially_directed_factors(w: Walk, model: Model = Model.HORIZONTAL) -> bool:
    return all(is_partially_directed(f) for f in factor_irreducible(w, model))


def reflect(w: Walk, axis: Axis) -> Walk:
    """Letterwise relabelling; every axis is an involution."""
    return Walk(w.steps.translate(axis.table))


def factor_proper(w: Walk) -> Optional[list[str]]:
    """Greedy factorisation of a word of (N + E (S^+ E)^*)^*.

    Returns None when the word is not in the language (a W step, a leading
    or trailing S, or a run of S not followed by E).
    """
    steps = w.steps
    factors: list[str] = []
    i = 0
    while i < len(steps):
        if steps[i] == "N":
            factors.append("N")
            i += 1
            continue
        if steps[i] != "E":
            return None
        j = i + 1
        while j < len(steps) and steps[j] == "S":
            k = j
            while k < len(steps) and steps[k] == "S":
                k += 1
            if k == len(steps) or steps[k] != "E":
                return None
            j = k + 1
        factors.append(steps[i:j])
        i = j
    return factors
