"""Boltzmann sampling of weakly directed bridges."""

from weakly_directed_walks.sampler.boltzmann import (
    RNG_ALGORITHM,
    BoltzmannSampler,
    GfTable,
    SampleRecord,
    SamplerConfig,
    SamplerCounters,
    TargetUnreachable,
    WindowedSample,
    gf_table,
    mean_length_bound_positive,
    sample_excursion,
    sample_in_window,
    sample_irreducible_bridge,
    sample_positive,
    sample_weakly_bridge,
    theoretical_length_distribution,
    tune,
)

__all__ = [
    "RNG_ALGORITHM",
    "BoltzmannSampler",
    "GfTable",
    "SampleRecord",
    "SamplerConfig",
    "SamplerCounters",
    "TargetUnreachable",
    "WindowedSample",
    "gf_table",
    "mean_length_bound_positive",
    "sample_excursion",
    "sample_in_window",
    "sample_irreducible_bridge",
    "sample_positive",
    "sample_weakly_bridge",
    "theoretical_length_distribution",
    "tune",
]
