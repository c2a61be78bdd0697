from typing import List, Tuple

from pydantic import BaseModel, Field, StrictInt, field_validator, model_validator

from laplat.models.graph import Multigraph


class GraphInput(BaseModel):
    """{"vertices": n+1, "edges": [[i, j, multiplicity], ...]} with i < j"""

    vertices: StrictInt = Field(..., ge=1)
    edges: List[Tuple[StrictInt, StrictInt, StrictInt]] = Field(default_factory=list)

    @field_validator("edges")
    def validate_edges(cls, v):
        seen = set()
        for i, j, mult in v:
            if i >= j:
                raise ValueError(f"edge [{i}, {j}] must be listed with i < j")
            if mult < 1:
                raise ValueError(f"edge [{i}, {j}] needs a positive multiplicity")
            if (i, j) in seen:
                raise ValueError(f"edge [{i}, {j}] is listed twice")
            seen.add((i, j))
        return v

    @model_validator(mode="after")
    def validate_endpoints(self):
        for i, j, _ in self.edges:
            if i < 0 or j >= self.vertices:
                raise ValueError(f"edge [{i}, {j}] has an endpoint outside 0..{self.vertices - 1}")
        return self

    def to_multigraph(self) -> Multigraph:
        return Multigraph(self.vertices, tuple(tuple(edge) for edge in self.edges))


class GraphResponse(BaseModel):
    vertices: int
    edges: List[List[int]]

    @classmethod
    def from_graph(cls, graph: Multigraph) -> "GraphResponse":
        return cls(**graph.to_json())
