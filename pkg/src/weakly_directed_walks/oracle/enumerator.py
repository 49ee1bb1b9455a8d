"""
Brute-force enumeration of self-avoiding walks.

Depth-first search over the non-reversing tree with a set of visited
vertices. Optional prefix filters prune subtrees; they must describe
prefix-closed properties (positivity, weak directedness) so pruning never
changes a count.
"""

from typing import Callable, Iterator, Optional

from weakly_directed_walks.config.settings import settings
from weakly_directed_walks.lattice.models import REVERSE_STEP, STEP_VECTORS, Model, Walk
from weakly_directed_walks.oracle.predicates import (
    factor_irreducible,
    is_bridge,
    is_partially_directed,
    is_weakly_directed,
)

Predicate = Callable[[Walk], bool]
Point = tuple[int, int]
PrefixFilter = Callable[[list[str], list[Point]], bool]


class LimitExceeded(ValueError):
    """Requested length above the configured oracle maximum."""


def positive_prefix(model: Model) -> PrefixFilter:
    """Keep prefixes whose newest vertex is at height >= 0."""

    def check(steps: list[str], points: list[Point]) -> bool:
        return model.height(*points[-1]) >= 0

    return check


def weakly_directed_prefix(model: Model) -> PrefixFilter:
    """Keep prefixes whose newest vertex closes no four-letter loop at its height."""

    def check(steps: list[str], points: list[Point]) -> bool:
        target = model.height(*points[-1])
        seen: set[str] = set()
        for i in range(len(points) - 2, -1, -1):
            seen.add(steps[i])
            if len(seen) == 4 and model.height(*points[i]) == target:
                return False
        return True

    return check


def combine_prefix_filters(*filters: Optional[PrefixFilter]) -> Optional[PrefixFilter]:
    active = [f for f in filters if f is not None]
    if not active:
        return None
    if len(active) == 1:
        return active[0]

    def check(steps: list[str], points: list[Point]) -> bool:
        return all(f(steps, points) for f in active)

    return check


class WalkEnumerator:
    """
    Enumerates self-avoiding walks from the origin.

    Progress is reported through the optional on_status callback.
    """

    def __init__(
        self,
        max_length: Optional[int] = None,
        on_status: Optional[Callable[[str], None]] = None,
    ):
        self.max_length = settings.ORACLE_MAX_LENGTH if max_length is None else max_length
        self.on_status = on_status
        self.nodes_visited = 0

    def _log(self, message: str) -> None:
        if self.on_status:
            self.on_status(message)

    def _check_length(self, n: int) -> None:
        if n < 0:
            raise ValueError(f"length must be non-negative, got {n}")
        if n > self.max_length:
            raise LimitExceeded(
                f"length {n} exceeds the oracle maximum of {self.max_length} "
                "(raise it with WDW_ORACLE_MAX)"
            )

    def _search(
        self,
        depth: int,
        alphabet: str,
        prefix_filter: Optional[PrefixFilter],
    ) -> Iterator[str]:
        """Yield every admissible step string of length 0..depth (pre-order)."""
        steps: list[str] = []
        points: list[Point] = [(0, 0)]
        visited = {(0, 0)}

        def visit() -> Iterator[str]:
            self.nodes_visited += 1
            yield "".join(steps)
            if len(steps) == depth:
                return
            x, y = points[-1]
            for letter in alphabet:
                if steps and letter == REVERSE_STEP[steps[-1]]:
                    continue
                dx, dy = STEP_VECTORS[letter]
                point = (x + dx, y + dy)
                if point in visited:
                    continue
                steps.append(letter)
                points.append(point)
                if prefix_filter is None or prefix_filter(steps, points):
                    visited.add(point)
                    yield from visit()
                    visited.discard(point)
                steps.pop()
                points.pop()

        yield from visit()

    def walks(
        self,
        n: int,
        alphabet: str = "NESW",
        prefix_filter: Optional[PrefixFilter] = None,
    ) -> Iterator[Walk]:
        """All n-step walks over the alphabet that survive the prefix filter."""
        self._check_length(n)
        for steps in self._search(n, alphabet, prefix_filter):
            if len(steps) == n:
                yield Walk(steps)

    def count(
        self,
        n: int,
        predicate: Optional[Predicate] = None,
        alphabet: str = "NESW",
        prefix_filter: Optional[PrefixFilter] = None,
    ) -> int:
        return sum(
            1
            for w in self.walks(n, alphabet, prefix_filter)
            if predicate is None or predicate(w)
        )

    def counts_by_length(
        self,
        max_n: int,
        predicate: Optional[Predicate] = None,
        alphabet: str = "NESW",
        prefix_filter: Optional[PrefixFilter] = None,
    ) -> list[int]:
        """Counts for every length 0..max_n in a single pass."""
        self._check_length(max_n)
        counts = [0] * (max_n + 1)
        for steps in self._search(max_n, alphabet, prefix_filter):
            if predicate is None or predicate(Walk(steps)):
                counts[len(steps)] += 1
        self._log(f"enumerated {self.nodes_visited} prefixes up to length {max_n}")
        return counts


def count_walks(n: int, predicate: Optional[Predicate] = None) -> int:
    """Number of n-step self-avoiding walks satisfying the predicate."""
    return WalkEnumerator().count(n, predicate)


def find_diagonal_witness(max_n: int = 12) -> Optional[Walk]:
    """Shortest weakly directed diagonal bridge with a non-partially-directed irreducible factor."""
    enumerator = WalkEnumerator(max_length=max(max_n, settings.ORACLE_MAX_LENGTH))
    prune = combine_prefix_filters(
        positive_prefix(Model.DIAGONAL), weakly_directed_prefix(Model.DIAGONAL)
    )
    for n in range(1, max_n + 1):
        for w in enumerator.walks(n, prefix_filter=prune):
            if not is_bridge(w, Model.DIAGONAL):
                continue
            factors = factor_irreducible(w, Model.DIAGONAL)
            if is_weakly_directed(w, Model.DIAGONAL) and not all(
                is_partially_directed(f) for f in factors
            ):
                return w
    return None
