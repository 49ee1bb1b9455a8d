"""Lattice models, step sets and walks."""

from weakly_directed_walks.lattice.models import (
    DIAGONAL_ES,
    DIAGONAL_ESW,
    DIAGONAL_NES,
    FAMILIES,
    HORIZONTAL_NES,
    Axis,
    BridgeFamily,
    Model,
    NotSelfAvoiding,
    StepSet,
    UnsupportedFamily,
    Walk,
)

__all__ = [
    "DIAGONAL_ES",
    "DIAGONAL_ESW",
    "DIAGONAL_NES",
    "FAMILIES",
    "HORIZONTAL_NES",
    "Axis",
    "BridgeFamily",
    "Model",
    "NotSelfAvoiding",
    "StepSet",
    "UnsupportedFamily",
    "Walk",
]
