from typing import List, Optional

from pydantic import BaseModel

from laplat.models.delaunay import DelaunayPolytope


class PolytopeVertex(BaseModel):
    subset: List[int]
    point: List[int]


class PolytopeFacet(BaseModel):
    i: int
    j: int
    vertices: List[List[int]]
    size: int


class HullCheckResponse(BaseModel):
    hull: List[int]
    formula: List[int]
    vertices_match: bool
    facets_match: bool
    edges_match: bool


class DelaunayResponse(BaseModel):
    dimension: int
    f_vector: List[int]
    vertices: List[PolytopeVertex]
    facets: List[PolytopeFacet]
    edges: List[List[List[int]]]
    hull_check: Optional[HullCheckResponse] = None

    @classmethod
    def from_polytope(cls, P: DelaunayPolytope, hull_check: Optional[dict] = None) -> "DelaunayResponse":
        # facet entries list the points of its vertices
        return cls(
            dimension=P.dimension,
            f_vector=list(P.f_vector()),
            vertices=[PolytopeVertex(subset=list(S), point=list(u)) for S, u in P.vertices.items()],
            facets=[
                PolytopeFacet(i=i, j=j, vertices=[list(P.vertices[S]) for S in members], size=len(members))
                for i, j, members in P.facets
            ],
            edges=[[list(P.vertices[a]), list(P.vertices[b])] for a, b in P.edges],
            hull_check=HullCheckResponse(**hull_check) if hull_check else None,
        )


class LocateResponse(BaseModel):
    sigma: List[int]
    translate: List[int]
    lambdas: List[str]
