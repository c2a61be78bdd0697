"""
Brute-force and limit verifiers: acyclic-orientation critical points,
grid Voronoi neighbours, grid packing and covering checks, and
perturbations toward complete-skeleton graphs.
"""

import logging
from fractions import Fraction
from itertools import permutations, product
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from laplat.core.config import check_guard, settings
from laplat.core.errors import InternalConsistencyError, InvalidInputError
from laplat.models.graph import Multigraph
from laplat.models.lattice import LaplacianLattice
from laplat.models.oracle import (
    AcyclicOrientationPoint,
    LimitReport,
    LimitStep,
    PerturbationMode,
    PerturbedLattice,
)
from laplat.models.point import LatticePoint, RationalPoint, SimplexOrientation
from laplat.services import graph_service, invariant_service, lattice_service
from laplat.services.delaunay_service import subset_sum

logger = logging.getLogger(__name__)


def indegrees(graph: Multigraph, order: Sequence[int]) -> Tuple[int, ...]:
    """Indegree vector of the acyclic orientation pointing every edge forward along order"""
    position = {v: k for k, v in enumerate(order)}
    result = [0] * graph.vertex_count
    for i, j, mult in graph.edges:
        head = j if position[i] < position[j] else i
        result[head] += mult
    return tuple(result)


def critical_points(
    graph: Multigraph, guard_override: bool = False, strict: bool = True
) -> List[AcyclicOrientationPoint]:
    """
    c_pi, the projection of the indegree vector of every vertex ordering pi,
    with h(c_pi). Each value should equal the covering radius; a mismatch
    raises when strict and is logged otherwise.
    """
    check_guard("critical point permutations", graph.vertex_count, settings.CRITICAL_GUARD, guard_override)
    L = lattice_service.lattice_from_graph(graph)
    cov = invariant_service.covering_radius(L)

    points = []
    for order in permutations(range(graph.vertex_count)):
        nu = indegrees(graph, order)
        c = lattice_service.project_H0(nu)
        value, _ = lattice_service.h_distance(L, c, SimplexOrientation.TRI_BAR)
        if value != cov:
            if strict:
                raise InternalConsistencyError(
                    "critical point value differs from the covering radius",
                    detail={"permutation": list(order), "value": str(value), "cov": str(cov)},
                )
            logger.warning(f"Critical point of {list(order)} has h = {value}, covering radius is {cov}")
        points.append(AcyclicOrientationPoint(permutation=order, indegrees=nu, projection=c, value=value))
    return points


def _check_grid(L: LaplacianLattice, resolution: int, dimensions: Tuple[int, ...], guard_override: bool) -> None:
    if L.n not in dimensions:
        raise InvalidInputError(
            "grid checks are limited to small dimensions", detail={"n": L.n, "supported": list(dimensions)}
        )
    if resolution < 1:
        raise InvalidInputError("resolution must be positive", detail={"resolution": resolution})
    check_guard("grid resolution", resolution, settings.GRID_MAX_RESOLUTION, guard_override)


def iter_grid(L: LaplacianLattice, resolution: int) -> Iterator[RationalPoint]:
    """Points sum_{i<n} (k_i / resolution) b_i of the fundamental parallelepiped, 0 <= k_i < resolution"""
    for steps in product(range(resolution), repeat=L.n):
        coefficients = [Fraction(k, resolution) for k in steps] + [Fraction(0)]
        yield lattice_service.combine(L, coefficients)


def voronoi_neighbors_grid(L: LaplacianLattice, resolution: int, guard_override: bool = False) -> Set[LatticePoint]:
    """
    Lattice points whose Voronoi cell touches the cell of O, as seen from a
    rational grid. Two minimizers q, q' of d(p, .) at a grid point make q' - q
    a neighbour of O (the distance is translation invariant). Ties are exact,
    so the result only grows when the grid is refined.
    """
    _check_grid(L, resolution, (2, 3), guard_override)
    neighbours = set()
    for p in iter_grid(L, resolution):
        _, argmins = lattice_service.h_distance(L, p, SimplexOrientation.TRI)
        for a in argmins:
            for b in argmins:
                if a != b:
                    neighbours.add(tuple(x - y for x, y in zip(b, a)))
    logger.debug(f"Grid of resolution {resolution}: {len(neighbours)} Voronoi neighbours")
    return neighbours


def packing_overlap_grid(L: LaplacianLattice, resolution: int, guard_override: bool = False) -> List[RationalPoint]:
    """Grid points lying strictly inside two translates q + Pac times the simplex (expected: none)"""
    _check_grid(L, resolution, (2,), guard_override)
    pac, _ = invariant_service.packing_radius(L)
    overlaps = []
    for p in iter_grid(L, resolution):
        near = lattice_service.lattice_points_within(L, p, SimplexOrientation.TRI_BAR, pac)
        inside = [q for q in near if lattice_service.simplicial_distance(p, q, SimplexOrientation.TRI_BAR) < pac]
        if len(inside) > 1:
            overlaps.append(p)
    return overlaps


def covering_grid_max(
    L: LaplacianLattice, resolution: int, guard_override: bool = False
) -> Tuple[Fraction, RationalPoint]:
    """Largest h over the grid and a point attaining it; never exceeds the covering radius"""
    _check_grid(L, resolution, (2,), guard_override)
    best: Optional[Tuple[Fraction, RationalPoint]] = None
    for p in iter_grid(L, resolution):
        value, _ = lattice_service.h_distance(L, p, SimplexOrientation.TRI)
        if best is None or value > best[0]:
            best = (value, p)
    cov = invariant_service.covering_radius(L)
    if best[0] > cov:
        raise InternalConsistencyError(
            "grid point farther from the lattice than the covering radius",
            detail={"value": str(best[0]), "cov": str(cov), "point": [str(c) for c in best[1]]},
        )
    return best


def brute_force_shortest_vector(L: LaplacianLattice) -> Tuple[Fraction, List[LatticePoint]]:
    """min d(O, q) over nonzero q in L, searched in the region bounded by the best basis row"""
    origin = (0,) * (L.n + 1)
    radius = min(lattice_service.simplicial_distance(origin, row) for row in L.rows)
    candidates = [q for q in lattice_service.lattice_points_within(L, origin, SimplexOrientation.TRI, radius) if any(q)]
    scored = [(lattice_service.simplicial_distance(origin, q), q) for q in candidates]
    value = min(score for score, _ in scored)
    return value, [q for score, q in scored if score == value]


def brute_force_packing_radius(L: LaplacianLattice) -> Tuple[Fraction, List[LatticePoint]]:
    """
    min over nonzero q in L of the midpoint radius of O and q. The radius is
    ||q||_1 / (2(n+1)) and ||q||_1 >= 2 |min q|, so the search region is
    bounded by the smallest row norm.
    """
    origin = (0,) * (L.n + 1)
    limit = min(sum(abs(c) for c in row) for row in L.rows)
    region = lattice_service.lattice_points_within(L, origin, SimplexOrientation.TRI, Fraction(limit, 2))
    scored = []
    for q in region:
        if any(q) and sum(abs(c) for c in q) <= limit:
            scored.append((lattice_service.triangle_midpoint(q)[1], q))
    value = min(score for score, _ in scored)
    return value, [q for score, q in scored if score == value]


def _perturb(Q: Sequence[Sequence[int]], epsilon, mode: PerturbationMode) -> PerturbedLattice:
    epsilon = Fraction(epsilon)
    if epsilon < 0:
        raise InvalidInputError("epsilon must be nonnegative", detail={"epsilon": str(epsilon)})
    graph = Multigraph.from_laplacian(Q)
    size = graph.vertex_count

    weights = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            if i == j:
                continue
            mult = graph.multiplicity(i, j)
            bump = epsilon if mode == PerturbationMode.STANDARD or mult == 0 else Fraction(0)
            weights[i][j] = mult + bump

    scale = epsilon.denominator
    rows = tuple(
        tuple(sum(weights[i]) if i == j else -weights[i][j] for j in range(size)) for i in range(size)
    )
    scaled = Multigraph.from_adjacency([[int(w * scale) for w in row] for row in weights])
    return PerturbedLattice(epsilon=epsilon, rows=rows, scale=scale, scaled_graph=scaled, mode=mode)


def perturb_standard(Q: Sequence[Sequence[int]], epsilon) -> PerturbedLattice:
    """Add epsilon to the weight of every vertex pair; scaling by the denominator of epsilon makes it integral"""
    return _perturb(Q, epsilon, PerturbationMode.STANDARD)


def perturb_zero_entries(Q: Sequence[Sequence[int]], epsilon) -> PerturbedLattice:
    """Add epsilon only to non-adjacent pairs"""
    return _perturb(Q, epsilon, PerturbationMode.ZEROS)


def perturb(Q: Sequence[Sequence[int]], epsilon, mode: PerturbationMode = PerturbationMode.STANDARD) -> PerturbedLattice:
    return _perturb(Q, epsilon, PerturbationMode(mode))


def _nu_and_pac(graph: Multigraph) -> Tuple[Fraction, Fraction]:
    """nu and Pac through the subset sums u_S"""
    L = lattice_service.lattice_from_graph(graph)
    origin = (0,) * (L.n + 1)
    nu, pac = None, None
    for side in graph_service.iter_cut_sides(graph.vertex_count):
        u = subset_sum(L, side)
        distance = lattice_service.simplicial_distance(origin, u)
        radius = lattice_service.triangle_midpoint(u)[1]
        nu = distance if nu is None else min(nu, distance)
        pac = radius if pac is None else min(pac, radius)
    return nu, pac


def limit_check(
    Q: Sequence[Sequence[int]],
    epsilons: Sequence,
    mode: PerturbationMode = PerturbationMode.STANDARD,
) -> LimitReport:
    """
    nu and Pac of the perturbed lattices (rescaled by 1/scale) converge to
    those of L as epsilon decreases. Gaps must not grow along the sequence
    and the last one is at most epsilon (n+1).
    """
    epsilons = [Fraction(e) for e in epsilons]
    if any(e <= 0 for e in epsilons) or any(a <= b for a, b in zip(epsilons, epsilons[1:])):
        raise InvalidInputError(
            "epsilons must be positive and strictly decreasing", detail={"epsilons": [str(e) for e in epsilons]}
        )
    mode = PerturbationMode(mode)
    graph = Multigraph.from_laplacian(Q)
    nu, pac = _nu_and_pac(graph)
    n = graph.dimension

    steps = []
    for epsilon in epsilons:
        perturbed = _perturb(Q, epsilon, mode)
        scaled_nu, scaled_pac = _nu_and_pac(perturbed.scaled_graph)
        step_nu, step_pac = scaled_nu / perturbed.scale, scaled_pac / perturbed.scale
        steps.append(
            LimitStep(
                epsilon=epsilon,
                scale=perturbed.scale,
                nu=step_nu,
                pac=step_pac,
                nu_gap=abs(step_nu - nu),
                pac_gap=abs(step_pac - pac),
            )
        )
        logger.debug(f"epsilon = {epsilon}: nu = {step_nu}, pac = {step_pac}")

    for earlier, later in zip(steps, steps[1:]):
        if later.nu_gap > earlier.nu_gap or later.pac_gap > earlier.pac_gap:
            raise InternalConsistencyError(
                "perturbation gap grew as epsilon decreased",
                detail={"epsilon": str(later.epsilon), "nu_gap": str(later.nu_gap), "pac_gap": str(later.pac_gap)},
            )
    report = LimitReport(mode=mode, nu=nu, pac=pac, steps=tuple(steps))
    if steps and report.final_gap > steps[-1].epsilon * (n + 1):
        raise InternalConsistencyError(
            "perturbation gap above epsilon (n+1)",
            detail={"gap": str(report.final_gap), "epsilon": str(steps[-1].epsilon)},
        )
    return report
