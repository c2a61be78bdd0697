"""
Exact geometry of the hyperplane H_0 and of Laplacian lattices inside it:
simplicial distances, projections, max-sums, membership, index and the
distance-to-lattice function h.
"""

import logging
import math
from fractions import Fraction
from functools import reduce
from itertools import combinations
from operator import mul
from typing import Iterable, List, Optional, Sequence, Tuple

from laplat.core.errors import InternalConsistencyError, InvalidInputError
from laplat.models.graph import Multigraph
from laplat.models.lattice import LaplacianLattice
from laplat.models.point import (
    LatticePoint,
    Number,
    RationalPoint,
    SimplexOrientation,
    as_lattice_point,
    as_rational_point,
)

logger = logging.getLogger(__name__)


def lattice_from_graph(graph: Multigraph) -> LaplacianLattice:
    return LaplacianLattice(graph)


def project_H0(v: Iterable[Number]) -> RationalPoint:
    """Orthogonal projection along (1, ..., 1)"""
    coords = [Fraction(c) for c in v]
    if not coords:
        return ()
    mean = sum(coords) / len(coords)
    return tuple(c - mean for c in coords)


def _distance(p: Sequence[Fraction], q: Sequence[Fraction], orientation: SimplexOrientation) -> Fraction:
    if orientation == SimplexOrientation.TRI:
        return abs(min(qi - pi for pi, qi in zip(p, q)))
    return abs(min(pi - qi for pi, qi in zip(p, q)))


def simplicial_distance(
    p: Iterable[Number],
    q: Iterable[Number],
    orientation: SimplexOrientation = SimplexOrientation.TRI,
) -> Fraction:
    """
    d(p, q) = |min_i (q_i - p_i)| for the standard simplex and
    |min_i (p_i - q_i)| for its negative. Not symmetric.
    """
    p, q = as_rational_point(p), as_rational_point(q)
    if len(p) != len(q):
        raise InvalidInputError("points have different lengths", detail={"lengths": [len(p), len(q)]})
    return _distance(p, q, orientation)


def max_sum(p: Sequence[Number], q: Sequence[Number]) -> Tuple[Fraction, ...]:
    if len(p) != len(q):
        raise InvalidInputError("points have different lengths", detail={"lengths": [len(p), len(q)]})
    return tuple(max(Fraction(a), Fraction(b)) for a, b in zip(p, q))


def triangle_midpoint(p: Iterable[Number]) -> Tuple[RationalPoint, Fraction]:
    """
    Midpoint m of the origin and p with d(O, m) = d(p, m) = r, where m is the
    projection of p (+) O onto H_0 and r = ||p (+) O||_1 / (n+1).
    """
    p = as_rational_point(p)
    origin = tuple(Fraction(0) for _ in p)
    top = max_sum(p, origin)
    midpoint = project_H0(top)
    radius = sum(abs(c) for c in top) / len(p)

    to_origin = _distance(origin, midpoint, SimplexOrientation.TRI)
    to_point = _distance(p, midpoint, SimplexOrientation.TRI)
    if not (to_origin == to_point == radius):
        raise InternalConsistencyError(
            "max-sum midpoint is not equidistant",
            detail={"point": [str(c) for c in p], "radius": str(radius), "to_origin": str(to_origin), "to_point": str(to_point)},
        )
    return midpoint, radius


def working_coefficients(L: LaplacianLattice, p: Iterable[Number]) -> RationalPoint:
    """Rational x with p = sum_i x_i b_i in the gauge x_n = 0"""
    p = as_rational_point(p)
    _check_length(L, p)
    det = L.determinant
    coeffs = [sum(a * c for a, c in zip(row, p[: L.n])) / det for row in L.adjugate]
    return tuple(Fraction(c) for c in coeffs) + (Fraction(0),)


def _numerators(L: LaplacianLattice, d: Sequence[int]) -> List[int]:
    return [sum(a * c for a, c in zip(row, d[: L.n])) for row in L.adjugate]


def _is_member(L: LaplacianLattice, d: Sequence[int]) -> bool:
    det = L.determinant
    return all(num % det == 0 for num in _numerators(L, d))


def lattice_contains(L: LaplacianLattice, d: Iterable[Number]) -> Optional[Tuple[int, ...]]:
    """
    Integer x with d = sum_i x_i b_i and x_n = 0, or None when d is not in L.
    Any other witness differs by a multiple of the all-ones vector.
    """
    d = as_lattice_point(d)
    _check_length(L, d)
    det = L.determinant
    numerators = _numerators(L, d)
    if any(num % det for num in numerators):
        return None
    return tuple(num // det for num in numerators) + (0,)


def combine(L: LaplacianLattice, coefficients: Sequence[Number]) -> Tuple[Fraction, ...]:
    """sum_i x_i b_i over all n+1 rows"""
    size = L.n + 1
    return tuple(sum(Fraction(coefficients[i]) * L.rows[i][k] for i in range(size)) for k in range(size))


def hnf(L: LaplacianLattice) -> Tuple[Tuple[int, ...], ...]:
    return L.hnf


def lattices_equal(first: LaplacianLattice, second: LaplacianLattice) -> bool:
    return first.same_lattice(second)


def lattice_index(L: LaplacianLattice) -> int:
    """Index of L in A_n, the absolute determinant of its HNF"""
    form = L.hnf
    index = abs(reduce(mul, (form[i][i] for i in range(len(form))), 1))
    if index != abs(L.determinant):
        raise InternalConsistencyError(
            "HNF determinant disagrees with the principal minor",
            detail={"hnf": index, "minor": L.determinant},
        )
    return index


picard_group_order = lattice_index


def floor_cell(L: LaplacianLattice, p: RationalPoint) -> Tuple[Tuple[int, ...], LatticePoint, Tuple[Fraction, ...]]:
    """
    Pick the translate q = sum floor(x_i) b_i and the ordering sigma of the
    residual coefficients (descending, ties by vertex index).
    Returns (sigma, q, residuals).
    """
    coeffs = working_coefficients(L, p)
    floors = [math.floor(c) for c in coeffs]
    residuals = tuple(c - f for c, f in zip(coeffs, floors))
    translate = tuple(int(c) for c in combine(L, floors))
    sigma = tuple(sorted(range(L.n + 1), key=lambda i: (-residuals[i], i)))
    return sigma, translate, residuals


def simplex_vertices(L: LaplacianLattice, sigma: Sequence[int]) -> Tuple[LatticePoint, ...]:
    """u^sigma_0, ..., u^sigma_{n-1} followed by the origin"""
    size = L.n + 1
    running = [0] * size
    vertices = []
    for i in sigma[: L.n]:
        running = [a + b for a, b in zip(running, L.rows[i])]
        vertices.append(tuple(running))
    vertices.append(tuple([0] * size))
    return tuple(vertices)


def _upper_bound(L: LaplacianLattice, p: RationalPoint, orientation: SimplexOrientation) -> Fraction:
    sigma, translate, _ = floor_cell(L, p)
    candidates = [tuple(a + b for a, b in zip(v, translate)) for v in simplex_vertices(L, sigma)]
    return min(_distance(p, q, orientation) for q in candidates)


def _points_above(lower: Sequence[int]) -> Iterable[Tuple[int, ...]]:
    """Integer vectors q >= lower with sum zero, lexicographic"""
    slack = -sum(lower)
    if slack < 0:
        return
    parts = len(lower)
    # stars and bars over the slack
    for bars in combinations(range(slack + parts - 1), parts - 1):
        previous, extra = -1, []
        for bar in bars:
            extra.append(bar - previous - 1)
            previous = bar
        extra.append(slack + parts - 2 - previous)
        yield tuple(low + e for low, e in zip(lower, extra))


def lattice_points_within(
    L: LaplacianLattice,
    p: Iterable[Number],
    orientation: SimplexOrientation,
    radius: Number,
) -> List[LatticePoint]:
    """
    All q in L with d(p, q) <= radius, sorted lexicographically.

    For the standard simplex d(p, q) <= r holds exactly when q_i >= p_i - r
    for every i (the coordinates of q - p sum to zero, so the minimum is
    nonpositive); summing the other bounds gives q_i - p_i <= n * r. The
    negative simplex mirrors this with q_i <= p_i + r.
    """
    p = as_rational_point(p)
    _check_length(L, p)
    radius = Fraction(radius)
    if radius < 0:
        return []
    if orientation == SimplexOrientation.TRI:
        lower = [math.ceil(c - radius) for c in p]
        found = [q for q in _points_above(lower) if _is_member(L, q)]
    else:
        lower = [math.ceil(-c - radius) for c in p]
        found = [tuple(-c for c in q) for q in _points_above(lower) if _is_member(L, q)]
    return sorted(found)


def h_distance(
    L: LaplacianLattice,
    p: Iterable[Number],
    orientation: SimplexOrientation = SimplexOrientation.TRI,
) -> Tuple[Fraction, List[LatticePoint]]:
    """
    h(p) = min over q in L of d(p, q), with every minimizer.

    The search radius r0 is the distance to the nearest vertex of the
    Delaunay cell containing p; every minimizer lies in the bounded region
    enumerated by lattice_points_within(p, r0).
    """
    p = as_rational_point(p)
    _check_length(L, p)
    bound = _upper_bound(L, p, orientation)
    candidates = lattice_points_within(L, p, orientation, bound)
    if not candidates:
        raise InternalConsistencyError(
            "bounded search found no lattice point",
            detail={"point": [str(c) for c in p], "bound": str(bound)},
        )
    scored = [(_distance(p, q, orientation), q) for q in candidates]
    value = min(score for score, _ in scored)
    argmins = [q for score, q in scored if score == value]
    logger.debug(f"h({[str(c) for c in p]}) = {value} over {len(candidates)} candidates")
    return value, argmins


def _check_length(L: LaplacianLattice, point: Sequence) -> None:
    if len(point) != L.n + 1:
        raise InvalidInputError(
            "point dimension does not match the lattice",
            detail={"expected": L.n + 1, "got": len(point)},
        )
