"""
Series-versus-oracle cross-check.

Every registered class pairs a generating function with a brute-force
definition. The checker compares coefficients length by length and also
runs the executable theorems:
- horizontal bridges: weakly directed iff all irreducible bridges are
  partially directed
- general walks: weakly directed iff all irreducible factors are
  partially directed
- diagonal bridges: a weakly directed bridge with a non-partially-directed
  irreducible bridge exists
"""

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Optional

from weakly_directed_walks.enumeration.bridges import bridge_sum
from weakly_directed_walks.enumeration.weakly import (
    irreducible_gf,
    irreducible_walk_gfs,
    nes_walk_gfs,
    weakly_bridge_gf,
    weakly_walk_gf,
)
from weakly_directed_walks.lattice.models import (
    DIAGONAL_ES,
    DIAGONAL_ESW,
    DIAGONAL_NES,
    HORIZONTAL_NES,
    Model,
    Walk,
)
from weakly_directed_walks.oracle.enumerator import (
    PrefixFilter,
    WalkEnumerator,
    combine_prefix_filters,
    find_diagonal_witness,
    positive_prefix,
    weakly_directed_prefix,
)
from weakly_directed_walks.oracle.predicates import (
    has_partially_directed_factors,
    is_bridge,
    is_copositive,
    is_irreducible,
    is_partially_directed,
    is_positive,
    is_pseudo_bridge,
    is_weakly_directed,
)
from weakly_directed_walks.series.truncated import TruncatedSeries


class CheckSeverity(Enum):
    """Severity level for cross-check issues."""
    ERROR = "error"      # series and oracle disagree
    WARNING = "warning"
    INFO = "info"


@dataclass
class CheckIssue:
    """A single cross-check issue."""
    code: str
    message: str
    severity: CheckSeverity
    details: Optional[dict] = None


@dataclass
class CountRow:
    n: int
    name: str
    model: Model
    coefficient: int
    oracle: int

    @property
    def match(self) -> bool:
        return self.coefficient == self.oracle

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "class": self.name,
            "model": self.model.value,
            "coefficient": self.coefficient,
            "oracle": self.oracle,
            "match": self.match,
        }


@dataclass
class CheckResult:
    """Result of a cross-check run."""
    valid: bool  # True if no ERROR-level issues
    rows: list[CountRow] = field(default_factory=list)
    issues: list[CheckIssue] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    @property
    def errors(self) -> list[CheckIssue]:
        return [i for i in self.issues if i.severity == CheckSeverity.ERROR]

    @property
    def mismatches(self) -> list[CountRow]:
        return [r for r in self.rows if not r.match]

    def add_issue(self, issue: CheckIssue) -> None:
        """Add an issue and update validity."""
        self.issues.append(issue)
        if issue.severity == CheckSeverity.ERROR:
            self.valid = False


@dataclass(frozen=True)
class CountClass:
    """A generating function and the brute-force definition it must match."""

    name: str
    model: Model
    description: str
    series: Callable[[int], TruncatedSeries]
    alphabet: str = "NESW"
    predicate: Optional[Callable[[Walk], bool]] = None
    prefix: Optional[Callable[[], Optional[PrefixFilter]]] = None

    def coefficients(self, max_n: int) -> list[int]:
        return self.series(max_n).as_integers()[: max_n + 1]

    def oracle_counts(self, enumerator: WalkEnumerator, max_n: int) -> list[int]:
        prefix_filter = self.prefix() if self.prefix else None
        return enumerator.counts_by_length(max_n, self.predicate, self.alphabet, prefix_filter)


def _pd_irreducible_bridge(model: Model) -> Callable[[Walk], bool]:
    def check(w: Walk) -> bool:
        return is_bridge(w, model) and is_irreducible(w, model) and is_partially_directed(w)

    return check


def _horizontal_bridge(w: Walk) -> bool:
    return is_bridge(w, Model.HORIZONTAL)


def _diagonal_pd_bridge(w: Walk) -> bool:
    return is_bridge(w, Model.DIAGONAL) and has_partially_directed_factors(w, Model.DIAGONAL)


def _irreducible(test: Optional[Callable[[Walk], bool]] = None) -> Callable[[Walk], bool]:
    def check(w: Walk) -> bool:
        return is_irreducible(w) and (test is None or test(w))

    return check


def _pseudo(model: Model) -> Callable[[Walk], bool]:
    def check(w: Walk) -> bool:
        return is_pseudo_bridge(w, model)

    return check


def _positive(model: Model) -> Callable[[], Optional[PrefixFilter]]:
    return lambda: positive_prefix(model)


COUNT_CLASSES: dict[str, CountClass] = {
    c.name: c
    for c in (
        CountClass(
            "W", Model.HORIZONTAL, "weakly directed bridges",
            lambda order: weakly_bridge_gf(Model.HORIZONTAL, order),
            predicate=_horizontal_bridge,
            prefix=lambda: combine_prefix_filters(
                positive_prefix(Model.HORIZONTAL), weakly_directed_prefix(Model.HORIZONTAL)
            ),
        ),
        CountClass(
            "Wbar", Model.HORIZONTAL, "weakly directed walks",
            weakly_walk_gf,
            predicate=lambda w: is_weakly_directed(w, Model.HORIZONTAL),
            prefix=lambda: weakly_directed_prefix(Model.HORIZONTAL),
        ),
        CountClass(
            "W_diag", Model.DIAGONAL, "bridges with partially directed irreducible bridges",
            lambda order: weakly_bridge_gf(Model.DIAGONAL, order),
            predicate=_diagonal_pd_bridge,
            prefix=_positive(Model.DIAGONAL),
        ),
        CountClass(
            "B", Model.HORIZONTAL, "NES pseudo-bridges",
            lambda order: bridge_sum(HORIZONTAL_NES, order),
            alphabet="NES", predicate=_pseudo(Model.HORIZONTAL),
            prefix=_positive(Model.HORIZONTAL),
        ),
        CountClass(
            "B0", Model.DIAGONAL, "ES pseudo-bridges",
            lambda order: bridge_sum(DIAGONAL_ES, order),
            alphabet="ES", predicate=_pseudo(Model.DIAGONAL),
            prefix=_positive(Model.DIAGONAL),
        ),
        CountClass(
            "B1", Model.DIAGONAL, "ESW pseudo-bridges",
            lambda order: bridge_sum(DIAGONAL_ESW, order),
            alphabet="ESW", predicate=_pseudo(Model.DIAGONAL),
            prefix=_positive(Model.DIAGONAL),
        ),
        CountClass(
            "B2", Model.DIAGONAL, "NES pseudo-bridges",
            lambda order: bridge_sum(DIAGONAL_NES, order),
            alphabet="NES", predicate=_pseudo(Model.DIAGONAL),
            prefix=_positive(Model.DIAGONAL),
        ),
        CountClass(
            "T", Model.HORIZONTAL, "NES walks",
            lambda order: nes_walk_gfs(order).total,
            alphabet="NES",
        ),
        CountClass(
            "P", Model.HORIZONTAL, "positive NES walks",
            lambda order: nes_walk_gfs(order).positive,
            alphabet="NES", predicate=lambda w: is_positive(w),
            prefix=_positive(Model.HORIZONTAL),
        ),
        CountClass(
            "Q", Model.HORIZONTAL, "copositive NES walks",
            lambda order: nes_walk_gfs(order).copositive,
            alphabet="NES", predicate=lambda w: is_copositive(w),
        ),
        CountClass(
            "Ti", Model.HORIZONTAL, "irreducible NES walks",
            lambda order: irreducible_walk_gfs(order).total,
            alphabet="NES", predicate=_irreducible(),
        ),
        CountClass(
            "Pi", Model.HORIZONTAL, "irreducible positive NES walks",
            lambda order: irreducible_walk_gfs(order).positive,
            alphabet="NES", predicate=_irreducible(is_positive),
            prefix=_positive(Model.HORIZONTAL),
        ),
        CountClass(
            "Qi", Model.HORIZONTAL, "irreducible copositive NES walks",
            lambda order: irreducible_walk_gfs(order).copositive,
            alphabet="NES", predicate=_irreducible(is_copositive),
        ),
        CountClass(
            "I", Model.HORIZONTAL, "partially directed irreducible bridges",
            lambda order: irreducible_gf(Model.HORIZONTAL, order),
            predicate=_pd_irreducible_bridge(Model.HORIZONTAL),
            prefix=_positive(Model.HORIZONTAL),
        ),
        CountClass(
            "I_diag", Model.DIAGONAL, "partially directed irreducible bridges",
            lambda order: irreducible_gf(Model.DIAGONAL, order),
            predicate=_pd_irreducible_bridge(Model.DIAGONAL),
            prefix=_positive(Model.DIAGONAL),
        ),
    )
}


def get_count_class(name: str) -> CountClass:
    try:
        return COUNT_CLASSES[name]
    except KeyError:
        known = ", ".join(COUNT_CLASSES)
        raise ValueError(f"unknown class {name!r} (known: {known})") from None


class CrossChecker:
    """
    Compares series coefficients with oracle counts.

    Theorem checks enumerate at most `theorem_max_n` steps for general walks
    (the four-letter tree grows fastest).
    """

    def __init__(
        self,
        theorem_max_n: int = 10,
        on_status: Optional[Callable[[str], None]] = None,
    ):
        self.theorem_max_n = theorem_max_n
        self.on_status = on_status

    def _log(self, message: str) -> None:
        if self.on_status:
            self.on_status(message)

    def run(
        self,
        max_n: int,
        names: Optional[list[str]] = None,
        theorems: bool = True,
    ) -> CheckResult:
        """
        Run the cross-check.

        Args:
            max_n: Largest length compared.
            names: Classes to compare (all registered classes if omitted).
            theorems: Also run the executable theorems.

        Returns:
            CheckResult with one row per (class, length).
        """
        result = CheckResult(valid=True)
        started = time.monotonic()
        enumerator = WalkEnumerator(max_length=max_n, on_status=self.on_status)
        for name in names or list(COUNT_CLASSES):
            self._check_class(result, get_count_class(name), enumerator, max_n)
        if theorems:
            self._check_bridge_equivalence(result, max_n)
            self._check_walk_equivalence(result, min(max_n, self.theorem_max_n))
            self._check_diagonal_witness(result, max(max_n, 10))
        result.metadata = {
            "max_n": max_n,
            "classes": len(names or COUNT_CLASSES),
            "rows": len(result.rows),
            "elapsed_seconds": round(time.monotonic() - started, 2),
        }
        return result

    def _check_class(
        self,
        result: CheckResult,
        count_class: CountClass,
        enumerator: WalkEnumerator,
        max_n: int,
    ) -> None:
        self._log(f"checking {count_class.name} ({count_class.description}) up to n={max_n}")
        series = count_class.coefficients(max_n)
        oracle = count_class.oracle_counts(enumerator, max_n)
        for n, (coefficient, count) in enumerate(zip(series, oracle)):
            row = CountRow(n, count_class.name, count_class.model, coefficient, count)
            result.rows.append(row)
            if not row.match:
                result.add_issue(CheckIssue(
                    code="COUNT_MISMATCH",
                    message=f"{count_class.name} at n={n}: series {coefficient}, oracle {count}",
                    severity=CheckSeverity.ERROR,
                    details=row.to_dict(),
                ))

    def _check_bridge_equivalence(self, result: CheckResult, max_n: int) -> None:
        """Horizontal bridges: weakly directed iff partially directed irreducible bridges."""
        enumerator = WalkEnumerator(max_length=max_n)
        checked = 0
        for n in range(max_n + 1):
            for w in enumerator.walks(n, prefix_filter=positive_prefix(Model.HORIZONTAL)):
                if not is_bridge(w, Model.HORIZONTAL):
                    continue
                checked += 1
                weakly = is_weakly_directed(w, Model.HORIZONTAL)
                if weakly != has_partially_directed_factors(w, Model.HORIZONTAL):
                    result.add_issue(CheckIssue(
                        code="BRIDGE_EQUIVALENCE",
                        message=f"bridge {w} breaks the factor characterisation",
                        severity=CheckSeverity.ERROR,
                        details={"walk": str(w), "weakly_directed": weakly},
                    ))
                    return
        self._log(f"bridge characterisation holds on {checked} bridges")

    def _check_walk_equivalence(self, result: CheckResult, max_n: int) -> None:
        """General walks: weakly directed iff partially directed irreducible factors."""
        enumerator = WalkEnumerator(max_length=max_n)
        checked = 0
        for n in range(max_n + 1):
            for w in enumerator.walks(n):
                checked += 1
                weakly = is_weakly_directed(w, Model.HORIZONTAL)
                if weakly != has_partially_directed_factors(w, Model.HORIZONTAL):
                    result.add_issue(CheckIssue(
                        code="WALK_EQUIVALENCE",
                        message=f"walk {w} breaks the factor characterisation",
                        severity=CheckSeverity.ERROR,
                        details={"walk": str(w), "weakly_directed": weakly},
                    ))
                    return
        self._log(f"walk characterisation holds on {checked} walks")

    def _check_diagonal_witness(self, result: CheckResult, max_n: int) -> None:
        witness = find_diagonal_witness(max_n)
        if witness is None:
            result.add_issue(CheckIssue(
                code="NO_DIAGONAL_WITNESS",
                message=f"no weakly directed diagonal bridge with a non-partially-directed "
                f"irreducible bridge up to n={max_n}",
                severity=CheckSeverity.ERROR,
            ))
            return
        result.add_issue(CheckIssue(
            code="DIAGONAL_WITNESS",
            message=f"diagonal witness {witness} (n={len(witness)})",
            severity=CheckSeverity.INFO,
            details={"walk": str(witness)},
        ))
