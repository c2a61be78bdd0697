"""
The Delaunay polytope of the origin, its facets and edges, and the Delaunay
triangulation by the simplices of vertex orderings.
"""

import logging
from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, FrozenSet, List, Sequence, Tuple

from sympy import Matrix

from laplat.core.config import check_guard, settings
from laplat.core.errors import InternalConsistencyError, InvalidInputError
from laplat.models.delaunay import DelaunayPolytope, DelaunaySimplex, Subset
from laplat.models.lattice import LaplacianLattice
from laplat.models.point import LatticePoint, Number, RationalPoint, SimplexOrientation, as_rational_point
from laplat.services import lattice_service
from laplat.services.graph_service import iter_cut_sides

logger = logging.getLogger(__name__)


def subset_sum(L: LaplacianLattice, subset: Sequence[int]) -> LatticePoint:
    """u_S = sum of the Laplacian rows indexed by S"""
    size = L.n + 1
    return tuple(sum(L.rows[i][k] for i in subset) for k in range(size))


def polytope(L: LaplacianLattice, guard_override: bool = False) -> DelaunayPolytope:
    check_guard("polytope vertices", L.n + 1, settings.POLYTOPE_GUARD, guard_override)
    size = L.n + 1
    vertices: Dict[Subset, LatticePoint] = {S: subset_sum(L, S) for S in iter_cut_sides(size)}

    facets = []
    for i in range(size):
        for j in range(size):
            if i == j:
                continue
            members = tuple(S for S in vertices if i in S and j not in S)
            facets.append((i, j, members))

    edges = []
    for S in vertices:
        if len(S) >= L.n:
            continue
        for j in range(size):
            if j not in S:
                edges.append((S, tuple(sorted(S + (j,)))))

    logger.debug(f"Delaunay polytope: {len(vertices)} vertices, {len(edges)} edges, {len(facets)} facets")
    return DelaunayPolytope(dimension=L.n, vertices=vertices, facets=facets, edges=edges)


def vertex_facet_degree(P: DelaunayPolytope, v: Sequence[int]) -> int:
    """Number of facets containing the vertex; equals k(n+1-k) for |S| = k"""
    try:
        subset = P.subset_of(tuple(v))
    except KeyError:
        raise InvalidInputError("not a vertex of the polytope", detail={"point": list(v)})
    return sum(1 for _, _, members in P.facets if subset in members)


def _functional(L: LaplacianLattice, target: Sequence[Number]) -> RationalPoint:
    # Q w = target; Q is symmetric so w holds the row coefficients of target
    return lattice_service.working_coefficients(L, target)


def _evaluate(w: Sequence[Fraction], point: Sequence[int]) -> Fraction:
    return sum(a * b for a, b in zip(w, point))


def facet_support(L: LaplacianLattice, i: int, j: int) -> RationalPoint:
    """
    Functional w with Q w = e_i - e_j. It takes the value 1 exactly on the
    vertices of F_{i,j} and at most 0 on every other vertex.
    """
    size = L.n + 1
    if i == j or not (0 <= i < size and 0 <= j < size):
        raise InvalidInputError("facet indices must be distinct vertices", detail={"i": i, "j": j})
    target = [0] * size
    target[i], target[j] = 1, -1
    return _functional(L, target)


def vertex_certificate(L: LaplacianLattice, subset: Sequence[int]) -> Tuple[RationalPoint, Fraction]:
    """
    Functional strictly maximized at u_S over all other subset sums, and the
    gap to the runner-up. Built from Q w = y with y = n+1-|S| on S and -|S| off S.
    """
    size = L.n + 1
    subset = tuple(sorted(set(subset)))
    if not 0 < len(subset) < size:
        raise InvalidInputError("subset must be nonempty and proper", detail={"subset": list(subset)})
    k = len(subset)
    target = [size - k if v in subset else -k for v in range(size)]
    w = _functional(L, target)
    best = _evaluate(w, subset_sum(L, subset))
    runner_up = max(_evaluate(w, subset_sum(L, S)) for S in iter_cut_sides(size) if S != subset)
    if runner_up >= best:
        raise InternalConsistencyError(
            "vertex certificate is not strict", detail={"subset": list(subset), "gap": str(best - runner_up)}
        )
    return w, best - runner_up


def simplices(L: LaplacianLattice, guard_override: bool = False) -> List[DelaunaySimplex]:
    check_guard("simplex permutations", L.n + 1, settings.LOCATE_GUARD, guard_override)
    return [
        DelaunaySimplex(sigma=sigma, vertices=lattice_service.simplex_vertices(L, sigma))
        for sigma in permutations(range(L.n + 1))
    ]


def simplex_contains(
    L: LaplacianLattice, sigma: Sequence[int], p: Sequence[Number]
) -> Tuple[bool, Tuple[Fraction, ...]]:
    """
    Decide p in the simplex of sigma. Writes p = sum lambda_k b_{sigma(k)} with
    lambda_0 = 1 (legal because the rows sum to zero) and checks
    1 = lambda_0 >= lambda_1 >= ... >= lambda_n >= 0. The lambdas are returned
    in sigma order as the certificate.
    """
    p = as_rational_point(p)
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(L.n + 1)):
        raise InvalidInputError("sigma must be a permutation of the vertices", detail={"sigma": list(sigma)})
    coeffs = lattice_service.working_coefficients(L, p)
    shift = 1 - coeffs[sigma[0]]
    lambdas = tuple(coeffs[i] + shift for i in sigma)
    descending = all(a >= b for a, b in zip(lambdas, lambdas[1:]))
    return descending and lambdas[-1] >= 0, lambdas


def locate(
    L: LaplacianLattice, p: Sequence[Number], guard_override: bool = False
) -> Tuple[Tuple[int, ...], LatticePoint]:
    """
    A verified Delaunay cell containing p: (sigma, q) with p in simplex(sigma) + q.

    Floors the coefficients of p to choose q and orders the residual
    coefficients (descending, ties by index) to choose sigma. If that
    proposal fails verification the cells around p are searched exhaustively.
    """
    p = as_rational_point(p)
    sigma, translate, _ = lattice_service.floor_cell(L, p)
    shifted = tuple(a - b for a, b in zip(p, translate))
    if simplex_contains(L, sigma, shifted)[0]:
        return sigma, translate

    logger.warning(f"Heuristic cell rejected for {[str(c) for c in p]}; falling back to exhaustive search")
    check_guard("locate permutations", L.n + 1, settings.LOCATE_GUARD, guard_override)
    origin = (0,) * (L.n + 1)
    reach = max(
        lattice_service.simplicial_distance(origin, v)
        for v in polytope(L, guard_override=True).vertices.values()
    )
    for q in lattice_service.lattice_points_within(L, p, SimplexOrientation.TRI_BAR, reach):
        shifted = tuple(a - b for a, b in zip(p, q))
        for candidate in permutations(range(L.n + 1)):
            if simplex_contains(L, candidate, shifted)[0]:
                return tuple(candidate), q
    raise InternalConsistencyError(
        "no Delaunay cell contains the point", detail={"point": [str(c) for c in p]}
    )


def cells_containing(L: LaplacianLattice, p: Sequence[Number]) -> List[FrozenSet[LatticePoint]]:
    """Distinct vertex sets of all Delaunay cells containing p (as geometric simplices)"""
    p = as_rational_point(p)
    origin = (0,) * (L.n + 1)
    reach = max(
        lattice_service.simplicial_distance(origin, v)
        for v in polytope(L, guard_override=True).vertices.values()
    )
    found = set()
    for q in lattice_service.lattice_points_within(L, p, SimplexOrientation.TRI_BAR, reach):
        shifted = tuple(a - b for a, b in zip(p, q))
        for sigma in permutations(range(L.n + 1)):
            if simplex_contains(L, sigma, shifted)[0]:
                cell = frozenset(
                    tuple(a + b for a, b in zip(v, q)) for v in lattice_service.simplex_vertices(L, sigma)
                )
                found.add(cell)
    return sorted(found, key=sorted)


def triangle_classes(L: LaplacianLattice) -> List[Tuple[LatticePoint, ...]]:
    """
    Translation classes of the Delaunay triangles (two dimensions only). Each
    triangle is moved so its vertex with the smallest last coordinate (ties
    lexicographic) sits at the origin.
    """
    if L.n != 2:
        raise InvalidInputError("triangle classes are defined for three-vertex graphs", detail={"n": L.n})
    classes = set()
    for simplex in simplices(L):
        anchor = min(simplex.vertices, key=lambda v: (v[-1], v))
        classes.add(tuple(sorted(tuple(a - b for a, b in zip(v, anchor)) for v in simplex.vertices)))
    return sorted(classes)


def _exact_hull(points: List[Tuple[int, ...]], dimension: int):
    """Facets of the convex hull by brute force over affinely spanning n-subsets"""
    facets: Dict[FrozenSet[int], Tuple[Fraction, ...]] = {}
    for chosen in combinations(range(len(points)), dimension):
        system = Matrix([list(points[i]) + [1] for i in chosen])
        kernel = system.nullspace()
        if len(kernel) != 1:
            continue
        normal = list(kernel[0])
        values = [sum(normal[k] * pt[k] for k in range(dimension)) + normal[dimension] for pt in points]
        if all(v <= 0 for v in values):
            pass
        elif all(v >= 0 for v in values):
            normal = [-c for c in normal]
        else:
            continue
        support = frozenset(i for i, v in enumerate(values) if v == 0)
        facets.setdefault(support, tuple(normal[:dimension]))
    return facets


def _normal_rank(normals: List[Tuple]) -> int:
    if not normals:
        return 0
    return Matrix([list(n) for n in normals]).rank()


def hull_f_vector_check(P: DelaunayPolytope, guard_override: bool = False) -> dict:
    """
    Compute the convex hull of the vertex set exactly and compare vertices,
    edges and facets with the closed-form description.
    """
    check_guard("hull dimension", P.dimension, settings.HULL_MAX_DIM, guard_override)
    n = P.dimension
    subsets = list(P.vertices)
    # drop the last coordinate: a linear bijection from H_0 onto R^n
    points = [P.vertices[S][:n] for S in subsets]
    facets = _exact_hull(points, n)

    incident = {i: [normal for support, normal in facets.items() if i in support] for i in range(len(points))}
    hull_vertices = {i for i in range(len(points)) if _normal_rank(incident[i]) == n}

    hull_edges = set()
    if n >= 2:
        for a, b in combinations(sorted(hull_vertices), 2):
            shared = [normal for support, normal in facets.items() if a in support and b in support]
            if _normal_rank(shared) == n - 1:
                hull_edges.add(frozenset((subsets[a], subsets[b])))

    formula_facets = {frozenset(members) for _, _, members in P.facets}
    hull_facets = {frozenset(subsets[i] for i in support) for support in facets}
    formula_edges = {frozenset(edge) for edge in P.edges}

    hull_f = (len(hull_vertices), len(hull_edges), len(facets))
    formula_f = (2 ** (n + 1) - 2, len(P.edges), n * (n + 1))
    return {
        "hull": hull_f,
        "formula": formula_f,
        "vertices_match": len(hull_vertices) == len(points),
        "facets_match": hull_facets == formula_facets,
        "edges_match": hull_edges == formula_edges,
    }
