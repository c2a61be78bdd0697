from typing import List, Optional, Tuple, Union

from pydantic import BaseModel

from laplat.models.graph import Cut
from laplat.models.invariants import InvariantReport, RamanujanBounds, RamanujanEvidence
from laplat.schemas.common import rational, real

Real = Union[float, str]


class CutResponse(BaseModel):
    side: List[int]
    l1_weight: int
    linf_weight: int

    @classmethod
    def from_cut(cls, cut: Cut) -> "CutResponse":
        return cls(side=list(cut.side), l1_weight=cut.l1_weight, linf_weight=cut.linf_weight)


class RamanujanResponse(BaseModel):
    verdict: str
    degrees: List[int]
    degree: Optional[int] = None
    lambda_a: Optional[Real] = None
    threshold: Optional[Real] = None
    laplacian_interval: Optional[Tuple[Real, Real]] = None
    laplacian_in_interval: Optional[bool] = None

    @classmethod
    def from_evidence(cls, evidence: RamanujanEvidence) -> "RamanujanResponse":
        interval = evidence.laplacian_interval
        return cls(
            verdict=evidence.verdict.value,
            degrees=list(evidence.degrees),
            degree=evidence.degree,
            lambda_a=real(evidence.lambda_a),
            threshold=real(evidence.threshold),
            laplacian_interval=(real(interval[0]), real(interval[1])) if interval else None,
            laplacian_in_interval=evidence.laplacian_in_interval,
        )


class RamanujanBoundsResponse(BaseModel):
    status: str
    theta: Optional[Real] = None
    theta_upper: Optional[Real] = None
    theta_margin: Optional[Real] = None
    gamma: Optional[Real] = None
    gamma_lower: Optional[Real] = None
    gamma_margin: Optional[Real] = None
    geometric_mean: Optional[Real] = None

    @classmethod
    def from_bounds(cls, bounds: RamanujanBounds) -> "RamanujanBoundsResponse":
        return cls(
            status=bounds.status,
            theta=real(bounds.theta),
            theta_upper=real(bounds.theta_upper),
            theta_margin=real(bounds.theta_margin),
            gamma=real(bounds.gamma),
            gamma_lower=real(bounds.gamma_lower),
            gamma_margin=real(bounds.gamma_margin),
            geometric_mean=real(bounds.geometric_mean),
        )


class InvariantReportResponse(BaseModel):
    n: int
    trees: int
    genus: int
    nu: str
    shortest_witness: List[int]
    shortest_side: List[int]
    pac: str
    pac_witness: CutResponse
    cov: str
    gamma: Real
    theta: Real
    ramanujan: RamanujanResponse
    ramanujan_bounds: Optional[RamanujanBoundsResponse] = None
    spectrum: List[Real]

    @classmethod
    def from_report(
        cls, report: InvariantReport, bounds: Optional[RamanujanBounds] = None
    ) -> "InvariantReportResponse":
        return cls(
            n=report.n,
            trees=report.trees,
            genus=report.genus,
            nu=rational(report.nu),
            shortest_witness=list(report.shortest_witness),
            shortest_side=list(report.shortest_side),
            pac=rational(report.pac),
            pac_witness=CutResponse.from_cut(report.pac_witness),
            cov=rational(report.cov),
            gamma=real(report.gamma),
            theta=real(report.theta),
            ramanujan=RamanujanResponse.from_evidence(report.ramanujan),
            ramanujan_bounds=RamanujanBoundsResponse.from_bounds(bounds) if bounds else None,
            spectrum=[real(v) for v in report.spectrum],
        )


class SpectrumResponse(BaseModel):
    spectrum: List[Real]
