"""
Recover a Laplacian from the vertex set of its Delaunay polytope, decide
graph isomorphism, and count the graphs sharing a Laplacian lattice.
"""

import logging
from collections import defaultdict
from itertools import combinations, product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from laplat.core.config import check_guard, settings
from laplat.core.errors import (
    DisconnectedGraphError,
    InternalConsistencyError,
    InvalidGraphError,
    ReconstructionError,
)
from laplat.models.census import CensusClass
from laplat.models.graph import LaplacianMatrix, Multigraph
from laplat.models.lattice import LaplacianLattice
from laplat.models.point import LatticePoint, as_lattice_point
from laplat.services import delaunay_service, lattice_service

logger = logging.getLogger(__name__)


def _normalize_vertex_set(vertex_set: Iterable[Sequence[int]]) -> frozenset:
    points = [as_lattice_point(p) for p in vertex_set]
    if not points:
        raise ReconstructionError("empty vertex set")
    lengths = {len(p) for p in points}
    if len(lengths) != 1:
        raise ReconstructionError("vertices have different lengths", detail={"lengths": sorted(lengths)})
    return frozenset(points)


def reconstruct_laplacian(vertex_set: Iterable[Sequence[int]]) -> LaplacianMatrix:
    """
    Row b_i is the vertex of the cone {p_i >= 0, p_j <= 0 for j != i} with the
    largest i-th coordinate. The result is validated by regenerating the polytope.
    """
    points = _normalize_vertex_set(vertex_set)
    size = len(next(iter(points)))
    if size < 2:
        raise ReconstructionError("vertices need at least two coordinates", detail={"length": size})

    rows = []
    for i in range(size):
        cone = [p for p in points if p[i] >= 0 and all(p[j] <= 0 for j in range(size) if j != i)]
        if not cone:
            raise ReconstructionError("cone contains no vertex", detail={"cone": i})
        top = max(p[i] for p in cone)
        best = sorted(p for p in cone if p[i] == top)
        if len(best) > 1:
            raise ReconstructionError(
                "cone maximizer is not unique", detail={"cone": i, "candidates": [list(p) for p in best]}
            )
        rows.append(best[0])

    for i in range(size):
        for j in range(i + 1, size):
            if rows[i][j] != rows[j][i]:
                raise ReconstructionError(
                    "recovered rows are not symmetric", detail={"pair": [i, j], "rows": [list(r) for r in rows]}
                )
    try:
        graph = Multigraph.from_laplacian(rows)
        L = LaplacianLattice(graph)
    except (InvalidGraphError, DisconnectedGraphError) as e:
        raise ReconstructionError(
            "recovered rows are not the Laplacian of a connected multigraph",
            detail={"rows": [list(r) for r in rows], "reason": e.message},
        ) from e

    regenerated = delaunay_service.polytope(L, guard_override=True).vertex_set
    if regenerated != points:
        raise ReconstructionError(
            "recovered Laplacian does not regenerate the vertex set",
            detail={
                "missing": sorted(list(p) for p in regenerated - points),
                "unexpected": sorted(list(p) for p in points - regenerated),
            },
        )
    return tuple(tuple(r) for r in rows)


def _signature(graph: Multigraph, v: int) -> Tuple[int, Tuple[int, ...]]:
    return graph.degree(v), tuple(sorted(graph.adjacency()[v]))


def graphs_isomorphic(
    first: Multigraph, second: Multigraph, guard_override: bool = False
) -> Optional[Tuple[int, ...]]:
    """
    A permutation sigma with Q2[sigma[i]][sigma[j]] = Q1[i][j], or None.

    Backtracking over vertex assignments, pruned by degree and by the
    multiset of incident multiplicities, checking adjacency with every
    vertex already placed.
    """
    if first.vertex_count != second.vertex_count:
        return None
    size = first.vertex_count
    check_guard("isomorphism vertices", size, settings.ISOMORPHISM_GUARD, guard_override)
    if first.edge_count != second.edge_count or sorted(first.degrees()) != sorted(second.degrees()):
        return None

    left = [_signature(first, v) for v in range(size)]
    right = [_signature(second, v) for v in range(size)]
    if sorted(left) != sorted(right):
        return None

    A, B = first.adjacency(), second.adjacency()
    assignment: List[int] = []
    used = [False] * size

    def extend() -> bool:
        i = len(assignment)
        if i == size:
            return True
        for target in range(size):
            if used[target] or left[i] != right[target]:
                continue
            if any(A[i][k] != B[target][assignment[k]] for k in range(i)):
                continue
            assignment.append(target)
            used[target] = True
            if extend():
                return True
            assignment.pop()
            used[target] = False
        return False

    if not extend():
        return None
    sigma = tuple(assignment)
    if first.relabel(sigma) != second:
        raise InternalConsistencyError("isomorphism does not conjugate the Laplacians", detail={"sigma": list(sigma)})
    return sigma


def polytopes_identical(first: Iterable[Sequence[int]], second: Iterable[Sequence[int]]) -> bool:
    """
    Set equality of two vertex sets. When both sets are Delaunay polytopes,
    equality must coincide with equality of the reconstructed Laplacians.
    """
    first = frozenset(tuple(p) for p in first)
    second = frozenset(tuple(p) for p in second)
    identical = first == second
    try:
        same_laplacian = reconstruct_laplacian(first) == reconstruct_laplacian(second)
    except ReconstructionError:
        return identical
    if same_laplacian != identical:
        raise InternalConsistencyError(
            "vertex set equality disagrees with Laplacian equality",
            detail={"identical": identical, "same_laplacian": same_laplacian},
        )
    return identical


def polytopes_congruent(
    first: Iterable[Sequence[int]], second: Iterable[Sequence[int]], guard_override: bool = False
) -> Optional[Tuple[int, ...]]:
    """Congruent exactly when the reconstructed graphs are isomorphic; returns the vertex relabelling"""
    g1 = Multigraph.from_laplacian(reconstruct_laplacian(first))
    g2 = Multigraph.from_laplacian(reconstruct_laplacian(second))
    return graphs_isomorphic(g1, g2, guard_override=guard_override)


def iter_connected_multigraphs(vertex_count: int, max_mult: int) -> Iterator[Multigraph]:
    """Connected multigraphs on labelled vertices with every multiplicity at most max_mult"""
    pairs = list(combinations(range(vertex_count), 2))
    for mults in product(range(max_mult + 1), repeat=len(pairs)):
        graph = Multigraph(vertex_count, tuple((i, j, m) for (i, j), m in zip(pairs, mults)))
        if graph.is_connected():
            yield graph


def _check_census_guards(vertex_count: int, max_mult: int, guard_override: bool) -> None:
    check_guard("census vertices", vertex_count, settings.CENSUS_GUARD, guard_override)
    check_guard("census multiplicity", max_mult, settings.CENSUS_MAX_MULT, guard_override)


def _distinct_polytopes(graphs: Sequence[Multigraph]) -> int:
    return len({delaunay_service.polytope(LaplacianLattice(g), guard_override=True).vertex_set for g in graphs})


def enumerate_graphs_with_lattice(
    L: LaplacianLattice, max_mult: int, guard_override: bool = False
) -> List[Multigraph]:
    """
    Every connected multigraph on the same vertex count (multiplicities at
    most max_mult) whose Laplacian lattice equals L. Distinct graphs in the
    result have distinct Delaunay polytopes.
    """
    _check_census_guards(L.n + 1, max_mult, guard_override)
    trees = abs(L.determinant)
    found = []
    for graph in iter_connected_multigraphs(L.n + 1, max_mult):
        candidate = LaplacianLattice(graph)
        if abs(candidate.determinant) == trees and candidate.same_lattice(L):
            found.append(graph)
    found.sort(key=lambda g: g.edges)

    distinct = _distinct_polytopes(found)
    if distinct < len(found):
        raise InternalConsistencyError(
            "graphs with the same lattice share a Delaunay polytope",
            detail={"graphs": len(found), "polytopes": distinct},
        )
    logger.debug(f"{len(found)} graphs share the lattice of index {trees}")
    return found


def census(vertex_count: int, max_mult: int, guard_override: bool = False) -> List[CensusClass]:
    """
    Group every connected multigraph of the family by its Laplacian lattice.

    Each class satisfies N_Gr <= N_Del, and a class containing a graph whose
    skeleton is complete holds that graph alone.
    """
    _check_census_guards(vertex_count, max_mult, guard_override)
    if vertex_count < 2:
        raise InvalidGraphError("census needs at least two vertices", detail={"vertices": vertex_count})

    groups: Dict[Tuple, List[Multigraph]] = defaultdict(list)
    trees: Dict[Tuple, int] = {}
    for graph in iter_connected_multigraphs(vertex_count, max_mult):
        L = LaplacianLattice(graph)
        groups[L.hnf].append(graph)
        trees[L.hnf] = lattice_service.lattice_index(L)

    classes = []
    for key in sorted(groups, key=lambda k: (trees[k], k)):
        members = tuple(sorted(groups[key], key=lambda g: g.edges))
        entry = CensusClass(hnf=key, trees=trees[key], graphs=members, distinct_polytopes=_distinct_polytopes(members))
        if entry.distinct_polytopes < entry.size:
            raise InternalConsistencyError(
                "more graphs than Delaunay polytopes for one lattice",
                detail={"hnf": [list(r) for r in key], "graphs": entry.size, "polytopes": entry.distinct_polytopes},
            )
        if entry.has_complete_skeleton and entry.size != 1:
            raise InternalConsistencyError(
                "complete-skeleton graph shares its lattice",
                detail={"hnf": [list(r) for r in key], "graphs": [g.to_json() for g in members]},
            )
        classes.append(entry)

    logger.info(f"Census on {vertex_count} vertices (multiplicity <= {max_mult}): {len(classes)} lattices")
    return classes
