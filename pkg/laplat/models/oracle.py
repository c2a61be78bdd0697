from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple

from laplat.models.graph import Multigraph
from laplat.models.point import RationalPoint


class PerturbationMode(str, Enum):
    STANDARD = "standard"  # epsilon added to every off-diagonal pair
    ZEROS = "zeros"  # epsilon added only to non-adjacent pairs


@dataclass(frozen=True)
class AcyclicOrientationPoint:
    permutation: Tuple[int, ...]
    indegrees: Tuple[int, ...]
    projection: RationalPoint
    value: Fraction


@dataclass(frozen=True)
class PerturbedLattice:
    """Perturbed Laplacian rows and the integral multigraph obtained after scaling"""

    epsilon: Fraction
    rows: Tuple[Tuple[Fraction, ...], ...]
    scale: int
    scaled_graph: Multigraph
    mode: PerturbationMode = PerturbationMode.STANDARD


@dataclass(frozen=True)
class LimitStep:
    epsilon: Fraction
    scale: int
    nu: Fraction
    pac: Fraction
    nu_gap: Fraction
    pac_gap: Fraction


@dataclass(frozen=True)
class LimitReport:
    """nu and Pac of perturbed lattices, rescaled, against the unperturbed values"""

    mode: PerturbationMode
    nu: Fraction
    pac: Fraction
    steps: Tuple[LimitStep, ...]

    @property
    def final_gap(self) -> Fraction:
        if not self.steps:
            return Fraction(0)
        last = self.steps[-1]
        return max(last.nu_gap, last.pac_gap)
