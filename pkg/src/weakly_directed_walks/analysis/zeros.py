"""
Zeros of the bridge denominators G_k and the curve they accumulate on.

Initial guesses come from numpy's companion-matrix eigenvalues; they are
refined all at once by Aberth iterations in mpmath at a fixed working
precision. The residual |G_k(r)| is measured at the refined roots.
"""

import math
from dataclasses import dataclass
from typing import Any, Callable, Optional, Sequence

import mpmath
import numpy as np

from weakly_directed_walks.analysis.asymptotics import ConvergenceError
from weakly_directed_walks.config.settings import settings
from weakly_directed_walks.enumeration.bridges import gk
from weakly_directed_walks.lattice.models import HORIZONTAL_NES, BridgeFamily

SQRT2 = math.sqrt(2.0)

# Real parts of the accumulation set
REAL_SEGMENTS = ((-SQRT2 - 1.0, -1.0), (SQRT2 - 1.0, 1.0))

IMAGINARY_CUTOFF = 1e-9


class NonConvergence(ConvergenceError):
    """Root refinement stopped with a residual above tolerance."""

    def __init__(self, message: str, worst_residual: float):
        super().__init__(message)
        self.worst_residual = worst_residual


@dataclass(frozen=True)
class ComplexRootSet:
    """All roots of G_k, rounded to double precision.

    `residuals` are |G_k| at the multi-precision roots before rounding; at
    the rounded roots the residual of a large k can be many orders larger.
    """

    k: int
    family: BridgeFamily
    roots: tuple[complex, ...]
    residuals: tuple[float, ...]

    @property
    def residual(self) -> float:
        return max(self.residuals, default=0.0)

    @property
    def degree(self) -> int:
        return len(self.roots)

    def non_real(self) -> list[complex]:
        return [r for r in self.roots if abs(r.imag) > IMAGINARY_CUTOFF]

    def rows(self) -> list[dict[str, Any]]:
        return [
            {"k": self.k, "re": r.real, "im": r.imag, "residual": e}
            for r, e in zip(self.roots, self.residuals)
        ]


class AberthSolver:
    """
    Simultaneous root refinement.

    Stagnation (no gain in the worst residual for `patience` sweeps) triggers
    a small random perturbation of every iterate.
    """

    def __init__(
        self,
        tolerance: Optional[float] = None,
        digits: Optional[int] = None,
        max_iterations: Optional[int] = None,
        patience: int = 25,
        seed: int = 0,
        on_status: Optional[Callable[[str], None]] = None,
    ):
        self.tolerance = settings.ROOT_TOLERANCE if tolerance is None else tolerance
        self.digits = settings.ROOT_WORKING_DIGITS if digits is None else digits
        self.max_iterations = (
            settings.ROOT_MAX_ITERATIONS if max_iterations is None else max_iterations
        )
        self.patience = patience
        self.rng = np.random.default_rng(seed)
        self.on_status = on_status
        self.iterations = 0
        self.restarts = 0

    def _log(self, message: str) -> None:
        if self.on_status:
            self.on_status(message)

    @staticmethod
    def _horner(coefficients: Sequence[Any], z: Any) -> tuple[Any, Any]:
        """Value and derivative of the polynomial (highest degree first)."""
        value = coefficients[0]
        slope = 0
        for c in coefficients[1:]:
            slope = slope * z + value
            value = value * z + c
        return value, slope

    def _perturb(self, roots: list[Any]) -> list[Any]:
        self.restarts += 1
        scale = 10.0 ** (-self.digits // 4)
        noise = self.rng.normal(size=(len(roots), 2)) * scale
        return [z * (1 + mpmath.mpc(a, b)) + mpmath.mpc(a, b) for z, (a, b) in zip(roots, noise)]

    def solve(self, coefficients: Sequence[int]) -> tuple[list[complex], list[float]]:
        """Roots and per-root residuals of sum c_i t^i (lowest degree first)."""
        descending = [int(c) for c in reversed(coefficients)]
        while descending and descending[0] == 0:
            descending.pop(0)
        degree = len(descending) - 1
        if degree < 1:
            return [], []
        guesses = np.roots(np.array(descending, dtype=float))
        with mpmath.workdps(self.digits):
            poly = [mpmath.mpf(c) for c in descending]
            roots = [mpmath.mpc(complex(g)) for g in guesses]
            step_floor = mpmath.mpf(10) ** (-(self.digits // 2))
            best = mpmath.inf
            stalled = 0
            residuals: list[Any] = []
            for self.iterations in range(1, self.max_iterations + 1):
                largest_step = mpmath.mpf(0)
                for i, z in enumerate(roots):
                    value, slope = self._horner(poly, z)
                    if value == 0:
                        continue
                    ratio = value / slope if slope != 0 else mpmath.mpc(1)
                    repulsion = mpmath.fsum(
                        1 / (z - w) for j, w in enumerate(roots) if j != i and z != w
                    )
                    step = ratio / (1 - ratio * repulsion)
                    roots[i] = z - step
                    largest_step = max(largest_step, abs(step) / (1 + abs(z)))
                residuals = [abs(self._horner(poly, z)[0]) for z in roots]
                worst = max(residuals)
                if worst < self.tolerance and largest_step < step_floor:
                    break
                if worst < best:
                    best, stalled = worst, 0
                else:
                    stalled += 1
                if stalled >= self.patience:
                    roots = self._perturb(roots)
                    best, stalled = mpmath.inf, 0
            worst = max(residuals)
            self._log(
                f"degree {degree}: {self.iterations} sweeps, {self.restarts} restarts, "
                f"worst residual {mpmath.nstr(worst, 3)}"
            )
            if worst >= self.tolerance:
                raise NonConvergence(
                    f"Aberth refinement stopped at residual {mpmath.nstr(worst, 3)} "
                    f"(tolerance {self.tolerance})",
                    float(worst),
                )
            return [complex(z) for z in roots], [float(e) for e in residuals]


def gk_roots(
    k: int,
    family: BridgeFamily = HORIZONTAL_NES,
    solver: Optional[AberthSolver] = None,
) -> ComplexRootSet:
    """All complex roots of G_k, with multiplicity."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    solver = solver or AberthSolver()
    roots, residuals = solver.solve(gk(family, k).coefficients)
    order = sorted(range(len(roots)), key=lambda i: (roots[i].real, roots[i].imag))
    return ComplexRootSet(
        k=k,
        family=family,
        roots=tuple(roots[i] for i in order),
        residuals=tuple(residuals[i] for i in order),
    )


def critical_abscissa() -> float:
    """Positive root x_c of 1 - x^2 - 2x^3, where the curve meets the real axis."""
    candidates = np.roots([-2.0, -1.0, 0.0, 1.0])
    return float(max(r.real for r in candidates if abs(r.imag) < 1e-12))


def boundary_curve(npoints: Optional[int] = None) -> list[complex]:
    """Samples of y^2 = (1 - x^2 - 2x^3) / (1 + 2x), 0 <= x <= x_c, both branches."""
    npoints = settings.CURVE_POINTS if npoints is None else npoints
    if npoints < 2:
        raise ValueError(f"need at least 2 curve points, got {npoints}")
    xs = np.linspace(0.0, critical_abscissa(), npoints)
    ys = np.sqrt(np.clip((1 - xs**2 - 2 * xs**3) / (1 + 2 * xs), 0.0, None))
    upper = [complex(x, y) for x, y in zip(xs, ys)]
    lower = [complex(x, -y) for x, y in zip(xs, ys)]
    return upper + lower


def _segment_distance(z: complex, segment: tuple[float, float]) -> float:
    a, b = segment
    dx = max(a - z.real, 0.0, z.real - b)
    return math.hypot(dx, z.imag)


def distance_to_boundary(z: complex, curve: Sequence[complex]) -> float:
    """Distance to the sampled curve or the real segments, whichever is nearer."""
    to_curve = float(np.min(np.abs(np.asarray(curve) - z))) if len(curve) else math.inf
    return min(to_curve, *(_segment_distance(z, s) for s in REAL_SEGMENTS))


@dataclass(frozen=True)
class RootDistanceReport:
    """Distances from the non-real zeros of G_k to the accumulation set."""

    k: int
    degree: int
    non_real: int
    residual: float
    min_distance: float
    max_distance: float
    mean_distance: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "degree": self.degree,
            "non_real": self.non_real,
            "residual": self.residual,
            "min_distance": self.min_distance,
            "max_distance": self.max_distance,
            "mean_distance": self.mean_distance,
        }


def root_distance_report(
    k: int,
    npoints: Optional[int] = None,
    solver: Optional[AberthSolver] = None,
    roots: Optional[ComplexRootSet] = None,
) -> RootDistanceReport:
    """Distance summary for the horizontal G_k; reuses `roots` when already computed."""
    if k < 5:
        raise ValueError(f"distance reports need k >= 5, got {k}")
    if roots is None:
        roots = gk_roots(k, HORIZONTAL_NES, solver)
    elif roots.k != k or roots.family != HORIZONTAL_NES:
        raise ValueError(
            f"expected roots of G_{k} (horizontal-NES), got G_{roots.k} ({roots.family.name})"
        )
    curve = boundary_curve(npoints)
    distances = [distance_to_boundary(r, curve) for r in roots.non_real()]
    return RootDistanceReport(
        k=k,
        degree=roots.degree,
        non_real=len(distances),
        residual=roots.residual,
        min_distance=min(distances, default=0.0),
        max_distance=max(distances, default=0.0),
        mean_distance=float(np.mean(distances)) if distances else 0.0,
    )
