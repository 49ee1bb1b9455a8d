"""Exact generating functions: bridges, heaps, excursions, weakly directed walks."""

from weakly_directed_walks.enumeration.bridges import (
    IdentityMismatch,
    bridge_sum,
    denominator_generating_function,
    gk,
    kernel_root,
    pseudo_bridge_closed_form,
    pseudo_bridge_series,
)
from weakly_directed_walks.enumeration.excursions import (
    d1_series,
    excursion_closed_form,
    excursion_series,
    excursions_by_recurrence,
    proper_walk_series,
    pseudo_bridge_by_excursions,
)
from weakly_directed_walks.enumeration.heaps import (
    HeapSpec,
    diagonal_esw_heap,
    diagonal_nes_heap,
    diagonal_nes_via_heaps,
    heap_denominators,
    heap_series_denominators,
    horizontal_heap,
)
from weakly_directed_walks.enumeration.weakly import (
    DiagonalIrreducibleParts,
    NesWalkSeries,
    diagonal_irreducible_parts,
    irreducible_gf,
    irreducible_walk_gfs,
    nes_walk_gfs,
    weakly_bridge_gf,
    weakly_walk_gf,
)

__all__ = [
    "DiagonalIrreducibleParts",
    "HeapSpec",
    "IdentityMismatch",
    "NesWalkSeries",
    "bridge_sum",
    "d1_series",
    "denominator_generating_function",
    "diagonal_esw_heap",
    "diagonal_irreducible_parts",
    "diagonal_nes_heap",
    "diagonal_nes_via_heaps",
    "excursion_closed_form",
    "excursion_series",
    "excursions_by_recurrence",
    "gk",
    "heap_denominators",
    "heap_series_denominators",
    "horizontal_heap",
    "irreducible_gf",
    "irreducible_walk_gfs",
    "kernel_root",
    "nes_walk_gfs",
    "proper_walk_series",
    "pseudo_bridge_by_excursions",
    "pseudo_bridge_closed_form",
    "pseudo_bridge_series",
    "weakly_bridge_gf",
    "weakly_walk_gf",
]
