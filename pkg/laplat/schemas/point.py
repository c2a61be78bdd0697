from fractions import Fraction
from typing import List, Union

from pydantic import BaseModel, RootModel, StrictInt, StrictStr, field_validator

from laplat.models.chipfire import Configuration
from laplat.models.point import RationalPoint, as_lattice_point, as_rational_point


class PointInput(RootModel[List[Union[StrictInt, StrictStr]]]):
    """A point of H_0: integers or "num/den" strings summing to zero"""

    def to_point(self) -> RationalPoint:
        return as_rational_point(self.root)


class VertexSetInput(BaseModel):
    vertices: List[List[StrictInt]]

    @field_validator("vertices")
    def validate_vertices(cls, v):
        if not v:
            raise ValueError("vertex set is empty")
        if len({len(p) for p in v}) != 1:
            raise ValueError("vertices have different lengths")
        return v

    def to_points(self) -> List[tuple]:
        return [as_lattice_point(p) for p in self.vertices]


class ConfigurationInput(RootModel[List[StrictInt]]):
    """Chip counts as a JSON integer array"""

    def to_configuration(self) -> Configuration:
        return Configuration(tuple(self.root))


def point_strings(point) -> List[str]:
    return [str(Fraction(c)) for c in point]
