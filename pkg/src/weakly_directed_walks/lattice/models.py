"""
Lattice data models: models (height functions), step sets, walks.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable


STEP_VECTORS: dict[str, tuple[int, int]] = {
    "N": (0, 1),
    "E": (1, 0),
    "S": (0, -1),
    "W": (-1, 0),
}

REVERSE_STEP = {"N": "S", "S": "N", "E": "W", "W": "E"}


class NotSelfAvoiding(ValueError):
    """A step string that revisits a vertex or uses an unknown letter."""


class UnsupportedFamily(ValueError):
    """A (model, step set) pair outside the four solvable bridge families."""


class Model(Enum):
    """How the height of a vertex is measured."""

    HORIZONTAL = "horizontal"  # h(x, y) = y
    DIAGONAL = "diagonal"  # h(x, y) = x + y

    def height(self, x: int, y: int) -> int:
        return y if self is Model.HORIZONTAL else x + y

    def step_rise(self, letter: str) -> int:
        dx, dy = STEP_VECTORS[letter]
        return self.height(dx, dy)


class StepSet(Enum):
    """Allowed step letters of a partially directed family."""

    NES = "NES"
    ESW = "ESW"
    ES = "ES"

    @property
    def letters(self) -> frozenset[str]:
        return frozenset(self.value)


class Axis(Enum):
    """Reflection axes acting letterwise on step strings."""

    X_AXIS = "x-axis"  # N <-> S
    Y_AXIS = "y-axis"  # E <-> W
    MAIN_DIAGONAL = "main-diagonal"  # N <-> E, S <-> W

    @property
    def table(self) -> dict[int, int]:
        swaps = {
            Axis.X_AXIS: ("NS", "SN"),
            Axis.Y_AXIS: ("EW", "WE"),
            Axis.MAIN_DIAGONAL: ("NESW", "ENWS"),
        }[self]
        return str.maketrans(*swaps)


@dataclass(frozen=True)
class BridgeFamily:
    """One of the four families whose pseudo-bridges are solved exactly."""

    model: Model
    stepset: StepSet

    SUPPORTED = frozenset(
        {
            (Model.HORIZONTAL, StepSet.NES),
            (Model.DIAGONAL, StepSet.ESW),
            (Model.DIAGONAL, StepSet.NES),
            (Model.DIAGONAL, StepSet.ES),
        }
    )

    def __post_init__(self) -> None:
        if (self.model, self.stepset) not in self.SUPPORTED:
            raise UnsupportedFamily(
                f"no exact solution for {self.model.value} {self.stepset.value} bridges"
            )

    @property
    def name(self) -> str:
        return f"{self.model.value}-{self.stepset.value}"

    @classmethod
    def parse(cls, text: str) -> "BridgeFamily":
        """Parse 'horizontal-NES', 'diagonal-ES', ..."""
        try:
            model_name, step_name = text.rsplit("-", 1)
            return cls(Model(model_name.lower()), StepSet(step_name.upper()))
        except ValueError as e:
            if isinstance(e, UnsupportedFamily):
                raise
            raise UnsupportedFamily(f"unknown bridge family '{text}'") from e


HORIZONTAL_NES = BridgeFamily(Model.HORIZONTAL, StepSet.NES)
DIAGONAL_ESW = BridgeFamily(Model.DIAGONAL, StepSet.ESW)
DIAGONAL_NES = BridgeFamily(Model.DIAGONAL, StepSet.NES)
DIAGONAL_ES = BridgeFamily(Model.DIAGONAL, StepSet.ES)
FAMILIES = (HORIZONTAL_NES, DIAGONAL_ESW, DIAGONAL_NES, DIAGONAL_ES)


@dataclass(frozen=True)
class Walk:
    """
    A self-avoiding walk from the origin, stored as a step string.

    The constructor rejects unknown letters and self-intersections.
    """

    steps: str = ""

    def __post_init__(self) -> None:
        x = y = 0
        seen = {(0, 0)}
        for letter in self.steps:
            if letter not in STEP_VECTORS:
                raise NotSelfAvoiding(f"unknown step letter '{letter}'")
            dx, dy = STEP_VECTORS[letter]
            x, y = x + dx, y + dy
            if (x, y) in seen:
                raise NotSelfAvoiding(f"walk '{self.steps}' revisits ({x}, {y})")
            seen.add((x, y))

    @classmethod
    def join(cls, parts: Iterable["Walk"]) -> "Walk":
        return cls("".join(p.steps for p in parts))

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps

    @cached_property
    def vertices(self) -> tuple[tuple[int, int], ...]:
        x = y = 0
        points = [(0, 0)]
        for letter in self.steps:
            dx, dy = STEP_VECTORS[letter]
            x, y = x + dx, y + dy
            points.append((x, y))
        return tuple(points)

    @property
    def endpoint(self) -> tuple[int, int]:
        return self.vertices[-1]

    @property
    def letters(self) -> frozenset[str]:
        return frozenset(self.steps)

    def heights(self, model: Model) -> list[int]:
        return [model.height(x, y) for x, y in self.vertices]
