"""
Graph-level quantities: Laplacian matrix, spanning-tree count, the l1 and
l-infinity minimum cuts, genus and the Laplacian spectrum.
"""

import logging
import math
from itertools import combinations
from typing import Iterator, List, Sequence, Tuple

import networkx as nx
import numpy as np
from sympy import Matrix

from laplat.core.config import check_guard, settings
from laplat.core.errors import (
    DisconnectedGraphError,
    InternalConsistencyError,
    InvalidGraphError,
    InvalidInputError,
    NumericError,
)
from laplat.models.graph import Cut, LaplacianMatrix, Multigraph

logger = logging.getLogger(__name__)


def laplacian(graph: Multigraph) -> LaplacianMatrix:
    """Q(G) = D(G) - A(G)"""
    if graph.vertex_count < 2:
        raise InvalidGraphError(
            "the Laplacian needs at least two vertices", detail={"vertices": graph.vertex_count}
        )
    adjacency = graph.adjacency()
    size = graph.vertex_count
    return tuple(
        tuple(graph.degree(i) if i == j else -adjacency[i][j] for j in range(size)) for i in range(size)
    )


def spanning_tree_count(Q: Sequence[Sequence[int]]) -> int:
    """
    Number of spanning trees by the Matrix-Tree theorem.

    Uses an exact fraction-free (Bareiss) determinant of the principal minor
    obtained by deleting the last row and column. Returns 0 for a
    disconnected graph.
    """
    size = len(Q)
    if size <= 1:
        return 1
    minor = Matrix([list(row[: size - 1]) for row in Q[: size - 1]])
    count = abs(int(minor.det(method="bareiss")))
    if count == 0:
        logger.warning(f"Spanning tree count is 0: graph on {size} vertices is disconnected")
    return count


def iter_cut_sides(vertex_count: int) -> Iterator[Tuple[int, ...]]:
    """Nonempty proper vertex subsets in shortlex order (size, then lexicographic)"""
    for size in range(1, vertex_count):
        yield from combinations(range(vertex_count), size)


def cut_weights(graph: Multigraph, side: Sequence[int]) -> Cut:
    inside = set(side)
    outside = [v for v in range(graph.vertex_count) if v not in inside]
    l1 = sum(graph.cut_degree(outside, v) for v in inside)
    linf = max((graph.cut_degree(inside, v) for v in outside), default=0)
    return Cut(side=tuple(sorted(inside)), l1_weight=l1, linf_weight=linf)


def _enumerated_min_cut_l1(graph: Multigraph) -> Cut:
    best = None
    for side in iter_cut_sides(graph.vertex_count):
        cut = cut_weights(graph, side)
        if best is None or cut.l1_weight < best.l1_weight:
            best = cut
    return best


def min_cut_l1(graph: Multigraph) -> Tuple[Cut, int]:
    """
    l1 minimum cut MC_1 by multiplicity-weighted Stoer-Wagner.

    For graphs up to MINCUT_CROSSCHECK_LIMIT vertices the value is cross-checked
    by subset enumeration and the witness is the shortlex-smallest minimizing side.
    A disconnected graph yields MC_1 = 0 with one of its components as witness.
    """
    if graph.vertex_count < 2:
        raise InvalidGraphError("a cut needs at least two vertices", detail={"vertices": graph.vertex_count})

    if not graph.is_connected():
        component = min(nx.connected_components(graph.to_networkx()), key=lambda c: (len(c), sorted(c)))
        logger.warning(f"Graph is disconnected; MC_1 = 0 witnessed by {sorted(component)}")
        cut = cut_weights(graph, sorted(component))
        return cut, 0

    value, (left, right) = nx.stoer_wagner(graph.to_networkx(), weight="weight")
    value = int(value)

    if graph.vertex_count <= settings.MINCUT_CROSSCHECK_LIMIT:
        cut = _enumerated_min_cut_l1(graph)
        if cut.l1_weight != value:
            raise InternalConsistencyError(
                "Stoer-Wagner disagrees with subset enumeration",
                detail={"stoer_wagner": value, "enumeration": cut.l1_weight},
            )
        return cut, value

    side = min((sorted(left), sorted(right)), key=lambda s: (len(s), s))
    return cut_weights(graph, side), value


def min_cut_linf(graph: Multigraph, guard_override: bool = False) -> Tuple[Cut, int]:
    """
    l-infinity minimum cut MC_inf: min over nonempty proper S of the largest
    number of edges any vertex outside S sends into S. Subset enumeration only;
    the witness is the lexicographically smallest minimizing S, as in
    invariant_service.shortest_vector.
    """
    check_guard("min_cut_linf vertices", graph.vertex_count, settings.ENUMERATION_GUARD, guard_override)
    if graph.vertex_count < 2:
        raise InvalidGraphError("a cut needs at least two vertices", detail={"vertices": graph.vertex_count})

    best = None
    for side in iter_cut_sides(graph.vertex_count):
        cut = cut_weights(graph, side)
        if best is None or (cut.linf_weight, cut.side) < (best.linf_weight, best.side):
            best = cut
    logger.debug(f"MC_inf = {best.linf_weight} witnessed by S = {best.side}")
    return best, best.linf_weight


def genus(graph: Multigraph) -> int:
    """Cycle rank m - n of a connected multigraph on n+1 vertices"""
    if not graph.is_connected():
        raise DisconnectedGraphError("genus needs a connected graph", detail={"graph": graph.to_json()})
    return graph.edge_count - graph.dimension


def _jacobi_eigenvalues(matrix: np.ndarray, tolerance: float, max_sweeps: int) -> np.ndarray:
    a = matrix.astype(float).copy()
    size = a.shape[0]
    norm = np.linalg.norm(a)
    if norm == 0.0:
        return np.zeros(size)

    for sweep in range(max_sweeps):
        off = math.sqrt(max(np.sum(a * a) - np.sum(np.diag(a) ** 2), 0.0))
        if off <= tolerance * norm:
            logger.debug(f"Jacobi converged after {sweep} sweeps (off-diagonal norm {off:.3e})")
            return np.diag(a).copy()
        for p in range(size - 1):
            for q in range(p + 1, size):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q

    raise NumericError(
        "Jacobi iteration did not converge",
        detail={"max_sweeps": max_sweeps, "tolerance": tolerance},
    )


def laplacian_spectrum(Q: Sequence[Sequence[float]]) -> List[float]:
    """
    Eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi rotations.

    Iteration stops once the off-diagonal Frobenius norm is at most
    JACOBI_TOLERANCE times the Frobenius norm of Q; values within
    ZERO_TOLERANCE of zero are reported as 0.0.
    """
    matrix = np.array(Q, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise InvalidInputError("spectrum needs a square matrix", detail={"shape": list(matrix.shape)})
    if not np.array_equal(matrix, matrix.T):
        raise InvalidInputError("spectrum needs a symmetric matrix")

    values = _jacobi_eigenvalues(matrix, settings.JACOBI_TOLERANCE, settings.JACOBI_MAX_SWEEPS)
    values = sorted(0.0 if abs(v) <= settings.ZERO_TOLERANCE else float(v) for v in values)
    return values
