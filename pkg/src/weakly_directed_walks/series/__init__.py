"""Exact truncated power series and integer polynomials."""

from weakly_directed_walks.series.polynomial import LatticePolynomial, RationalFunction
from weakly_directed_walks.series.truncated import (
    BadConstantTerm,
    EmptySeries,
    SeriesError,
    TruncatedSeries,
    ZeroConstantTerm,
    derivative,
    div,
    eval_float,
    eval_real,
    expand_in_v,
    mul,
    sqrt,
)

__all__ = [
    "BadConstantTerm",
    "EmptySeries",
    "LatticePolynomial",
    "RationalFunction",
    "SeriesError",
    "TruncatedSeries",
    "ZeroConstantTerm",
    "derivative",
    "div",
    "eval_float",
    "eval_real",
    "expand_in_v",
    "mul",
    "sqrt",
]
