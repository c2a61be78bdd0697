from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

from sympy import Matrix
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import hermite_normal_form

from laplat.core.errors import DisconnectedGraphError, InvalidGraphError
from laplat.models.graph import LaplacianMatrix, Multigraph


@dataclass(frozen=True)
class LaplacianLattice:
    """
    Row lattice of the Laplacian of a connected multigraph, a sublattice of A_n.

    The rows b_0..b_n are dependent (they sum to zero); b_0..b_{n-1} form the
    working basis. Coefficient vectors use the gauge x_n = 0.
    """

    graph: Multigraph

    def __post_init__(self):
        if self.graph.vertex_count < 2:
            raise InvalidGraphError(
                "a Laplacian lattice needs at least two vertices",
                detail={"vertices": self.graph.vertex_count},
            )
        if not self.graph.is_connected():
            raise DisconnectedGraphError(
                "the Laplacian lattice of a disconnected graph is not full rank",
                detail={"graph": self.graph.to_json()},
            )

    @property
    def n(self) -> int:
        return self.graph.vertex_count - 1

    @cached_property
    def rows(self) -> LaplacianMatrix:
        size = self.graph.vertex_count
        adjacency = self.graph.adjacency()
        return tuple(
            tuple(self.graph.degree(i) if i == j else -adjacency[i][j] for j in range(size))
            for i in range(size)
        )

    @property
    def working_basis(self) -> LaplacianMatrix:
        return self.rows[: self.n]

    @cached_property
    def _minor(self) -> Matrix:
        # principal minor on the first n coordinates; nonsingular for connected graphs
        return Matrix([list(row[: self.n]) for row in self.working_basis])

    @cached_property
    def determinant(self) -> int:
        return int(self._minor.det(method="bareiss"))

    @cached_property
    def adjugate(self) -> Tuple[Tuple[int, ...], ...]:
        adj = self._minor.adjugate(method="bareiss")
        return tuple(tuple(int(adj[i, j]) for j in range(self.n)) for i in range(self.n))

    @cached_property
    def hnf(self) -> Tuple[Tuple[int, ...], ...]:
        """Hermite normal form of the working basis over the A_n basis e_i - e_{i+1}"""
        # coordinates over e_i - e_{i+1} are prefix sums; columns are basis vectors
        columns = []
        for row in self.working_basis:
            prefix, coords = 0, []
            for k in range(self.n):
                prefix += row[k]
                coords.append(prefix)
            columns.append(coords)
        matrix = [[columns[i][k] for i in range(self.n)] for k in range(self.n)]
        form = hermite_normal_form(DM(matrix, ZZ)).to_Matrix()
        return tuple(tuple(int(form[i, j]) for j in range(form.cols)) for i in range(form.rows))

    def same_lattice(self, other: "LaplacianLattice") -> bool:
        return self.n == other.n and self.hnf == other.hnf
