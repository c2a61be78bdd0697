from typing import List, Optional

from pydantic import BaseModel

from laplat.models.census import CensusClass
from laplat.schemas.graph import GraphResponse


class ReconstructResponse(BaseModel):
    laplacian: List[List[int]]
    graph: GraphResponse


class IsomorphicResponse(BaseModel):
    isomorphic: bool
    perm: Optional[List[int]] = None


class CensusClassResponse(BaseModel):
    hnf: List[List[int]]
    trees: int
    size: int
    distinct_polytopes: int
    graphs: List[GraphResponse]

    @classmethod
    def from_class(cls, entry: CensusClass) -> "CensusClassResponse":
        return cls(
            hnf=[list(row) for row in entry.hnf],
            trees=entry.trees,
            size=entry.size,
            distinct_polytopes=entry.distinct_polytopes,
            graphs=[GraphResponse.from_graph(g) for g in entry.graphs],
        )


class CensusResponse(BaseModel):
    vertices: int
    max_mult: int
    lattices: int
    graphs: int
    classes: List[CensusClassResponse]
