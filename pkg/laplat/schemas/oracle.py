from typing import List

from pydantic import BaseModel

from laplat.models.oracle import AcyclicOrientationPoint, LimitReport
from laplat.schemas.common import rational


class CriticalPointResponse(BaseModel):
    permutation: List[int]
    indegrees: List[int]
    projection: List[str]
    value: str

    @classmethod
    def from_point(cls, point: AcyclicOrientationPoint) -> "CriticalPointResponse":
        return cls(
            permutation=list(point.permutation),
            indegrees=list(point.indegrees),
            projection=[rational(c) for c in point.projection],
            value=rational(point.value),
        )


class CriticalPointsResponse(BaseModel):
    cov: str
    all_equal_cov: bool
    points: List[CriticalPointResponse]


class VoronoiResponse(BaseModel):
    resolution: int
    neighbours: List[List[int]]


class LimitStepResponse(BaseModel):
    epsilon: str
    scale: int
    nu: str
    pac: str
    nu_gap: str
    pac_gap: str


class LimitResponse(BaseModel):
    mode: str
    nu: str
    pac: str
    final_gap: str
    steps: List[LimitStepResponse]

    @classmethod
    def from_report(cls, report: LimitReport) -> "LimitResponse":
        return cls(
            mode=report.mode.value,
            nu=rational(report.nu),
            pac=rational(report.pac),
            final_gap=rational(report.final_gap),
            steps=[
                LimitStepResponse(
                    epsilon=rational(s.epsilon),
                    scale=s.scale,
                    nu=rational(s.nu),
                    pac=rational(s.pac),
                    nu_gap=rational(s.nu_gap),
                    pac_gap=rational(s.pac_gap),
                )
                for s in report.steps
            ],
        )
