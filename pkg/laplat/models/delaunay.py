from dataclasses import dataclass
from typing import Dict, List, Tuple

from laplat.models.point import LatticePoint

Subset = Tuple[int, ...]


@dataclass(frozen=True)
class DelaunayPolytope:
    """
    Delaunay polytope of the origin: vertices u_S for nonempty proper S,
    facets F_{i,j} (subsets containing i but not j) and subset-chain edges.
    """

    dimension: int
    vertices: Dict[Subset, LatticePoint]
    facets: List[Tuple[int, int, Tuple[Subset, ...]]]
    edges: List[Tuple[Subset, Subset]]

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices.values())

    def subset_of(self, point: LatticePoint) -> Subset:
        for subset, vertex in self.vertices.items():
            if vertex == point:
                return subset
        raise KeyError(point)

    def f_vector(self) -> Tuple[int, int, int]:
        return len(self.vertices), len(self.edges), len(self.facets)


@dataclass(frozen=True)
class DelaunaySimplex:
    """Simplex with vertices u^sigma_0, ..., u^sigma_{n-1} and the origin"""

    sigma: Tuple[int, ...]
    vertices: Tuple[LatticePoint, ...]
