"""Certified asymptotics, interval arithmetic and the zero portrait."""

from weakly_directed_walks.analysis.asymptotics import (
    ConvergenceError,
    FactorMoments,
    NoRootInRange,
    RhoBracket,
    TruncationBounds,
    bracket_rho,
    certify_rho,
    factor_moments,
    growth_constant,
    truncation_bounds,
    variance_constant,
)
from weakly_directed_walks.analysis.intervals import RationalInterval
from weakly_directed_walks.analysis.zeros import (
    AberthSolver,
    ComplexRootSet,
    NonConvergence,
    RootDistanceReport,
    boundary_curve,
    critical_abscissa,
    distance_to_boundary,
    gk_roots,
    root_distance_report,
)

__all__ = [
    "AberthSolver",
    "ComplexRootSet",
    "ConvergenceError",
    "FactorMoments",
    "NoRootInRange",
    "NonConvergence",
    "RationalInterval",
    "RhoBracket",
    "RootDistanceReport",
    "TruncationBounds",
    "boundary_curve",
    "bracket_rho",
    "certify_rho",
    "critical_abscissa",
    "distance_to_boundary",
    "factor_moments",
    "gk_roots",
    "growth_constant",
    "root_distance_report",
    "truncation_bounds",
    "variance_constant",
]
