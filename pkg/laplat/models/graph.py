from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple

import networkx as nx

from laplat.core.errors import InvalidGraphError

LaplacianMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class Multigraph:
    """
    Labelled undirected multigraph without self-loops.

    Vertices are 0..vertex_count-1. Edges are stored canonically as
    (i, j, multiplicity) with i < j and multiplicity > 0, sorted.
    """

    vertex_count: int
    edges: Tuple[Tuple[int, int, int], ...] = field(default=())

    def __post_init__(self):
        if self.vertex_count < 1:
            raise InvalidGraphError(
                "graph needs at least one vertex", detail={"vertices": self.vertex_count}
            )
        seen = set()
        canonical = []
        for i, j, mult in self.edges:
            if i == j:
                raise InvalidGraphError("self-loops are not allowed", detail={"edge": [i, j, mult]})
            if not (0 <= i < self.vertex_count and 0 <= j < self.vertex_count):
                raise InvalidGraphError("edge endpoint out of range", detail={"edge": [i, j, mult]})
            if isinstance(mult, bool) or not isinstance(mult, int) or mult < 0:
                raise InvalidGraphError(
                    "multiplicities must be nonnegative integers", detail={"edge": [i, j, mult]}
                )
            key = (min(i, j), max(i, j))
            if key in seen:
                raise InvalidGraphError("duplicate vertex pair", detail={"edge": list(key)})
            seen.add(key)
            if mult > 0:
                canonical.append((key[0], key[1], mult))
        object.__setattr__(self, "edges", tuple(sorted(canonical)))

    @classmethod
    def from_multiplicities(cls, vertex_count: int, multiplicities: Dict[Tuple[int, int], int]) -> "Multigraph":
        return cls(vertex_count, tuple((i, j, m) for (i, j), m in multiplicities.items()))

    @classmethod
    def from_adjacency(cls, matrix: Sequence[Sequence[int]]) -> "Multigraph":
        """Build from a symmetric multiplicity matrix with zero diagonal"""
        size = len(matrix)
        for i in range(size):
            if len(matrix[i]) != size:
                raise InvalidGraphError("adjacency matrix must be square", detail={"row": i})
            if matrix[i][i] != 0:
                raise InvalidGraphError("self-loops are not allowed", detail={"vertex": i})
            for j in range(i + 1, size):
                if matrix[i][j] != matrix[j][i]:
                    raise InvalidGraphError(
                        "multiplicity input is not symmetric",
                        detail={"pair": [i, j], "values": [matrix[i][j], matrix[j][i]]},
                    )
        return cls(size, tuple((i, j, int(matrix[i][j])) for i in range(size) for j in range(i + 1, size)))

    @classmethod
    def from_laplacian(cls, rows: Sequence[Sequence[int]]) -> "Multigraph":
        size = len(rows)
        return cls.from_adjacency(
            [[0 if i == j else -int(rows[i][j]) for j in range(size)] for i in range(size)]
        )

    @cached_property
    def _matrix(self) -> Tuple[Tuple[int, ...], ...]:
        grid = [[0] * self.vertex_count for _ in range(self.vertex_count)]
        for i, j, mult in self.edges:
            grid[i][j] = mult
            grid[j][i] = mult
        return tuple(tuple(row) for row in grid)

    def multiplicity(self, i: int, j: int) -> int:
        return self._matrix[i][j]

    def adjacency(self) -> LaplacianMatrix:
        return self._matrix

    def degree(self, v: int) -> int:
        return sum(self._matrix[v])

    def degrees(self) -> List[int]:
        return [self.degree(v) for v in range(self.vertex_count)]

    @property
    def edge_count(self) -> int:
        return sum(mult for _, _, mult in self.edges)

    @property
    def dimension(self) -> int:
        """n, where the graph has n+1 vertices"""
        return self.vertex_count - 1

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        for i, j, mult in self.edges:
            graph.add_edge(i, j, weight=mult)
        return graph

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    def is_complete_skeleton(self) -> bool:
        """Every pair of distinct vertices is adjacent"""
        return len(self.edges) == self.vertex_count * (self.vertex_count - 1) // 2

    def cut_degree(self, side: Iterable[int], v: int) -> int:
        """Number of edges between v and the given side"""
        return sum(self._matrix[v][u] for u in side if u != v)

    def relabel(self, perm: Sequence[int]) -> "Multigraph":
        """Vertex i becomes perm[i]"""
        return Multigraph(self.vertex_count, tuple((perm[i], perm[j], m) for i, j, m in self.edges))

    def to_json(self) -> dict:
        return {"vertices": self.vertex_count, "edges": [list(edge) for edge in self.edges]}


@dataclass(frozen=True)
class Cut:
    """A nontrivial vertex cut with its l1 and l-infinity weights"""

    side: Tuple[int, ...]
    l1_weight: int
    linf_weight: int

    def complement(self, vertex_count: int) -> Tuple[int, ...]:
        return tuple(v for v in range(vertex_count) if v not in self.side)
