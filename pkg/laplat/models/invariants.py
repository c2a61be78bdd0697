from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from laplat.models.graph import Cut
from laplat.models.point import LatticePoint


class RamanujanVerdict(str, Enum):
    RAMANUJAN = "ramanujan"
    NOT_RAMANUJAN = "not_ramanujan"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class RamanujanEvidence:
    verdict: RamanujanVerdict
    degrees: Tuple[int, ...]
    degree: Optional[int] = None
    adjacency_spectrum: Tuple[float, ...] = ()
    lambda_a: Optional[float] = None
    threshold: Optional[float] = None
    laplacian_interval: Optional[Tuple[float, float]] = None
    laplacian_in_interval: Optional[bool] = None

    @property
    def is_ramanujan(self) -> bool:
        return self.verdict == RamanujanVerdict.RAMANUJAN


@dataclass(frozen=True)
class RamanujanBounds:
    status: str  # "checked" or "bounds_not_claimed"
    evidence: RamanujanEvidence
    theta: Optional[float] = None
    theta_upper: Optional[float] = None
    gamma: Optional[float] = None
    gamma_lower: Optional[float] = None
    geometric_mean: Optional[float] = None
    spectral_interval: Optional[Tuple[float, float]] = None

    @property
    def theta_margin(self) -> Optional[float]:
        if self.theta is None:
            return None
        return self.theta_upper - self.theta

    @property
    def gamma_margin(self) -> Optional[float]:
        if self.gamma is None:
            return None
        return self.gamma - self.gamma_lower


@dataclass(frozen=True)
class InvariantReport:
    n: int
    trees: int
    genus: int
    nu: Fraction
    shortest_witness: LatticePoint
    shortest_side: Tuple[int, ...]
    pac: Fraction
    pac_witness: Cut
    cov: Fraction
    gamma: float
    theta: float
    ramanujan: RamanujanEvidence
    spectrum: List[float] = field(default_factory=list)
