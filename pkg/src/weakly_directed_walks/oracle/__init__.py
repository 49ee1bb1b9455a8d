"""Brute-force walk enumeration and definitional predicates."""

from weakly_directed_walks.oracle.cross_check import (
    COUNT_CLASSES,
    CheckIssue,
    CheckResult,
    CheckSeverity,
    CountClass,
    CountRow,
    CrossChecker,
    get_count_class,
)
from weakly_directed_walks.oracle.enumerator import (
    LimitExceeded,
    PrefixFilter,
    WalkEnumerator,
    combine_prefix_filters,
    count_walks,
    find_diagonal_witness,
    positive_prefix,
    weakly_directed_prefix,
)
from weakly_directed_walks.oracle.predicates import (
    factor_irreducible,
    factor_proper,
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

__all__ = [
    "COUNT_CLASSES",
    "CheckIssue",
    "CheckResult",
    "CheckSeverity",
    "CountClass",
    "CountRow",
    "CrossChecker",
    "LimitExceeded",
    "PrefixFilter",
    "WalkEnumerator",
    "combine_prefix_filters",
    "count_walks",
    "factor_irreducible",
    "factor_proper",
    "find_diagonal_witness",
    "get_count_class",
    "has_partially_directed_factors",
    "is_bridge",
    "is_copositive",
    "is_excursion",
    "is_irreducible",
    "is_partially_directed",
    "is_positive",
    "is_pseudo_bridge",
    "is_weakly_directed",
    "positive_prefix",
    "reflect",
    "separating_steps",
    "uses_only",
    "weakly_directed_prefix",
]
