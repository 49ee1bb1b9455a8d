"""
Boltzmann sampler for weakly directed bridges (horizontal model).

A walk w of a class C is produced with probability x^|w| / C(x), so walks of
equal length are equally likely. Four stages, each built on the previous:
1. NES excursions from E = E(1 + E) + N E S + N E S E(1 + E)
2. positive NES walks ending with N from P_N = (N + EN + E EN)(1 + P_N)
3. irreducible NES bridges I_E by rejection: the first irreducible factor
   of a P_N sample, kept when it is a bridge
4. weakly directed bridges W = 1 + I_E W + (I_W minus N) W
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

import numpy as np
from pydantic import BaseModel, Field, model_validator

from weakly_directed_walks.analysis.asymptotics import (
    ConvergenceError,
    RhoBracket,
    truncation_bounds,
)
from weakly_directed_walks.config.settings import settings
from weakly_directed_walks.enumeration.weakly import weakly_bridge_gf
from weakly_directed_walks.lattice.models import Axis, Model, Walk
from weakly_directed_walks.oracle.predicates import factor_irreducible, is_bridge, reflect

RNG_ALGORITHM = "PCG64"

# Relative gap allowed between the mean lengths seen through I^- and I^+
TUNING_SLACK = 0.01
TUNING_TOLERANCE = 1e-6

SERIES_CUTOFF = 1e-17
MAX_BRIDGE_TERMS = 1_000_000


class TargetUnreachable(ConvergenceError):
    """The truncation cannot resolve the requested mean length."""


class SamplerConfig(BaseModel):
    """Boltzmann parameter and length window."""

    x: float = Field(gt=0)
    target_n: int = Field(ge=1)
    epsilon: float = Field(default=0.1, gt=0, lt=1)
    seed: int = 0
    rho_lower: float = Field(default=math.sqrt(2) - 1, gt=0)

    @model_validator(mode="after")
    def _below_pole(self) -> "SamplerConfig":
        if self.x >= self.rho_lower:
            raise ValueError(f"x = {self.x} is not below the pole bound {self.rho_lower}")
        return self

    @property
    def window(self) -> tuple[float, float]:
        return (1 - self.epsilon) * self.target_n, (1 + self.epsilon) * self.target_n


class SampleRecord(BaseModel):
    """Serialised form of one sampled walk."""

    model: str = Model.HORIZONTAL.value
    steps: str
    length: int
    seed: int
    x: float
    trials: int
    rng: str = RNG_ALGORITHM


@dataclass(frozen=True)
class GfTable:
    """Generating-function values and branch probabilities at x."""

    x: float
    excursions: float  # E(x), non-empty excursions
    positive: float  # P_N(x) from its closed form
    bridges: float  # B(x) = sum x^k / G_k(x)
    irreducible_east: float  # I_E(x)
    irreducible: float  # I(x) = 2 I_E(x) - x
    weakly: float  # W(x) = 1 / (1 - I(x))
    continue_positive: float  # x + x^2 + x^2 E(x)

    @property
    def excursion_branches(self) -> tuple[float, float, float]:
        """Probabilities of E(1+E), N E S and N E S E(1+E)."""
        x, e = self.x, self.excursions
        return x * (1 + e) / e, x**2, x**3 * (1 + e)

    @property
    def positive_from_grammar(self) -> float:
        a = self.continue_positive
        return a / (1 - a)


def excursion_gf(x: float) -> float:
    disc = (1 - x**4) * (1 - 2 * x - x**2)
    return (1 - x - x**2 - x**3 - math.sqrt(disc)) / (2 * x**3)


def _positive_radicand(x: float) -> float:
    return (1 + x + x**2 + x**3) / ((1 - x) * (1 - 2 * x - x**2))


def positive_gf(x: float) -> float:
    return (math.sqrt(_positive_radicand(x)) - 1) / 2


def positive_gf_derivative(x: float) -> float:
    log_slope = (
        (1 + 2 * x + 3 * x**2) / (1 + x + x**2 + x**3)
        + 1 / (1 - x)
        + (2 + 2 * x) / (1 - 2 * x - x**2)
    )
    return math.sqrt(_positive_radicand(x)) * log_slope / 4


def bridge_gf(x: float) -> float:
    """B(x) summed until the terms drop below the cutoff.

    With g_k = G_k / x^k the recurrence reads g_{k+1} = p g_k / x - g_{k-1},
    p = 1 - x + x^2 + x^3, g_{-1} = x, g_0 = 1 - x.
    """
    p = 1 - x + x**2 + x**3
    previous, current = x, 1 - x
    total = 1 / current
    for _ in range(MAX_BRIDGE_TERMS):
        previous, current = current, p * current / x - previous
        term = 1 / current
        total += term
        if 0 < term < SERIES_CUTOFF * total:
            return total
    raise ConvergenceError(f"bridge series did not converge at x = {x}")


@lru_cache(maxsize=64)
def gf_table(x: float) -> GfTable:
    """Values at x; x must lie below the dominant pole."""
    if not 0 < x < math.sqrt(2) - 1:
        raise ValueError(f"x must lie in (0, sqrt(2) - 1), got {x}")
    e = excursion_gf(x)
    b = bridge_gf(x)
    east = x * b / (1 + x * b)
    irreducible = 2 * east - x
    if irreducible >= 1:
        raise ValueError(f"x = {x} is beyond the dominant pole (I(x) = {irreducible})")
    return GfTable(
        x=x,
        excursions=e,
        positive=positive_gf(x),
        bridges=b,
        irreducible_east=east,
        irreducible=irreducible,
        weakly=1 / (1 - irreducible),
        continue_positive=x + x**2 + x**2 * e,
    )


def mean_length_bound_positive(rho: float) -> float:
    """rho P_N'(rho) / P_N(rho), an upper bound on the mean length of stage 2."""
    return rho * positive_gf_derivative(rho) / positive_gf(rho)


def theoretical_length_distribution(x: float, max_n: int) -> list[float]:
    """x^n w_n / W(x) for n = 0..max_n."""
    weakly = gf_table(x).weakly
    counts = weakly_bridge_gf(Model.HORIZONTAL, max_n).as_integers()
    return [c * x**n / weakly for n, c in enumerate(counts)]


def tune(
    target_n: int,
    epsilon: Optional[float] = None,
    seed: int = 0,
    order: Optional[int] = None,
    on_status: Optional[Callable[[str], None]] = None,
) -> SamplerConfig:
    """
    Solve x W'(x) / W(x) = x I'(x) / (1 - I(x)) = target_n by bisection.

    Raises:
        ValueError: if target_n < 1.
        TargetUnreachable: if the truncated series cannot reach or resolve
            the target.
    """
    if target_n < 1:
        raise ValueError(f"target length must be >= 1, got {target_n}")
    order = settings.TRUNCATION_ORDER if order is None else order
    bounds = truncation_bounds(Model.HORIZONTAL, order)
    rho = RhoBracket(bounds, on_status=on_status).run()

    def mean_length(x: Fraction, upper: bool = False) -> float:
        value = bounds.plus(x) if upper else bounds.minus(x)
        if value >= 1:
            return math.inf
        slope = bounds.plus(x, 1) if upper else bounds.minus(x, 1)
        return float(x * slope / (1 - value))

    low, high = Fraction(0), rho.lo
    if mean_length(high) < target_n:
        raise TargetUnreachable(
            f"mean length {target_n} is out of reach at truncation {order}; "
            "raise the truncation"
        )
    middle = high
    for _ in range(settings.BISECTION_MAX_ITERATIONS):
        middle = (low + high) / 2
        reached = mean_length(middle)
        if abs(reached / target_n - 1) < TUNING_TOLERANCE:
            break
        if reached < target_n:
            low = middle
        else:
            high = middle
    upper = mean_length(middle, upper=True)
    if upper / mean_length(middle) - 1 > TUNING_SLACK:
        raise TargetUnreachable(
            f"truncation {order} leaves the mean length at x = {float(middle):.8f} "
            f"uncertain beyond {TUNING_SLACK:.0%}"
        )
    if on_status:
        on_status(f"tuned x = {float(middle):.10f} for mean length {target_n}")
    return SamplerConfig(
        x=float(middle),
        target_n=target_n,
        epsilon=settings.SAMPLER_EPSILON if epsilon is None else epsilon,
        seed=seed,
        rho_lower=float(rho.lo),
    )


class _StackOverflow(Exception):
    """Internal: a draw outgrew the stack guard."""


@dataclass
class WindowedSample:
    walk: Walk
    trials: int


@dataclass
class SamplerCounters:
    draws: int = 0
    rejections: int = 0
    redraws: int = 0
    steps: int = 0


class BoltzmannSampler:
    """
    Stateful sampler owning its random generator.

    Probabilities come from gf_table(config.x). Draws that push the explicit
    stack or the walk past the configured guard are discarded and redrawn;
    `counters.redraws` counts them.
    """

    # Stack tokens
    _EXCURSION = "X"
    _OPTIONAL = "O"

    def __init__(
        self,
        config: SamplerConfig,
        rng: Optional[np.random.Generator] = None,
        max_stack: Optional[int] = None,
        on_status: Optional[Callable[[str], None]] = None,
    ):
        self.config = config
        self.table = gf_table(config.x)
        self.rng = rng if rng is not None else np.random.Generator(np.random.PCG64(config.seed))
        self.max_stack = settings.SAMPLER_MAX_STACK if max_stack is None else max_stack
        self.on_status = on_status
        self.counters = SamplerCounters()

    def _log(self, message: str) -> None:
        if self.on_status:
            self.on_status(message)

    def _excursion_letters(self, out: list[str]) -> None:
        p_first, p_second, _ = self.table.excursion_branches
        keep = self.table.excursions / (1 + self.table.excursions)
        stack = [self._EXCURSION]
        while stack:
            if len(stack) > self.max_stack or len(out) > self.max_stack:
                raise _StackOverflow
            token = stack.pop()
            if token == self._OPTIONAL:
                if self.rng.random() < keep:
                    stack.append(self._EXCURSION)
            elif token == self._EXCURSION:
                u = self.rng.random()
                if u < p_first:
                    out.append("E")
                    stack.append(self._OPTIONAL)
                elif u < p_first + p_second:
                    out.append("N")
                    stack.extend(("S", self._EXCURSION))
                else:
                    out.append("N")
                    stack.extend((self._OPTIONAL, "E", "S", self._EXCURSION))
            else:
                out.append(token)

    def _positive_letters(self, out: list[str]) -> None:
        x = self.table.x
        a = self.table.continue_positive
        while True:
            u = self.rng.random() * a
            if u < x:
                out.append("N")
            elif u < x + x**2:
                out.extend("EN")
            else:
                self._excursion_letters(out)
                out.extend("EN")
            if len(out) > self.max_stack:
                raise _StackOverflow
            if self.rng.random() >= a:
                return

    def _guarded(self, build: Callable[[list[str]], None]) -> str:
        while True:
            out: list[str] = []
            try:
                build(out)
            except _StackOverflow:
                self.counters.redraws += 1
                self.counters.steps += len(out)
                self._log(f"draw exceeded the guard of {self.max_stack}; redrawing")
                continue
            self.counters.steps += len(out)
            return "".join(out)

    def sample_excursion(self) -> Walk:
        self.counters.draws += 1
        return Walk(self._guarded(self._excursion_letters))

    def sample_positive(self) -> Walk:
        self.counters.draws += 1
        return Walk(self._guarded(self._positive_letters))

    def sample_irreducible_bridge(self, side: str = "E", exclude_north: bool = False) -> Walk:
        """Irreducible NES bridge (side E) or its mirror image NSW bridge (side W)."""
        if side not in ("E", "W"):
            raise ValueError(f"side must be 'E' or 'W', got {side!r}")
        while True:
            candidate = self.sample_positive()
            first = factor_irreducible(candidate)[0]
            if not is_bridge(first) or (exclude_north and first.steps == "N"):
                self.counters.rejections += 1
                continue
            return first if side == "E" else reflect(first, Axis.Y_AXIS)

    def sample_weakly_bridge(self) -> Walk:
        table = self.table
        while True:
            parts: list[str] = []
            length = 0
            while self.rng.random() < table.irreducible:
                if self.rng.random() * table.irreducible < table.irreducible_east:
                    part = self.sample_irreducible_bridge("E")
                else:
                    part = self.sample_irreducible_bridge("W", exclude_north=True)
                parts.append(part.steps)
                length += len(part)
                if length > self.max_stack:
                    break
            if length > self.max_stack:
                self.counters.redraws += 1
                continue
            return Walk("".join(parts))

    def sample_in_window(self, max_trials: int = 1_000_000) -> WindowedSample:
        low, high = self.config.window
        for trials in range(1, max_trials + 1):
            walk = self.sample_weakly_bridge()
            if low <= len(walk) <= high:
                return WindowedSample(walk=walk, trials=trials)
        raise ConvergenceError(f"no walk in [{low:.0f}, {high:.0f}] after {max_trials} trials")

    def record(self, sample: WindowedSample) -> SampleRecord:
        return SampleRecord(
            steps=sample.walk.steps,
            length=len(sample.walk),
            seed=self.config.seed,
            x=self.config.x,
            trials=sample.trials,
        )


def sample_excursion(cfg: SamplerConfig, rng: Optional[np.random.Generator] = None) -> Walk:
    return BoltzmannSampler(cfg, rng).sample_excursion()


def sample_positive(cfg: SamplerConfig, rng: Optional[np.random.Generator] = None) -> Walk:
    return BoltzmannSampler(cfg, rng).sample_positive()


def sample_irreducible_bridge(
    cfg: SamplerConfig,
    rng: Optional[np.random.Generator] = None,
    side: str = "E",
    exclude_north: bool = False,
) -> Walk:
    return BoltzmannSampler(cfg, rng).sample_irreducible_bridge(side, exclude_north)


def sample_weakly_bridge(cfg: SamplerConfig, rng: Optional[np.random.Generator] = None) -> Walk:
    return BoltzmannSampler(cfg, rng).sample_weakly_bridge()


def sample_in_window(
    cfg: SamplerConfig, rng: Optional[np.random.Generator] = None
) -> WindowedSample:
    return BoltzmannSampler(cfg, rng).sample_in_window()
