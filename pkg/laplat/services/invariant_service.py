"""
Closed-form invariants of a Laplacian lattice under the simplicial distance:
shortest vector, packing and covering radius, densities and the Ramanujan
bounds on them.
"""

import logging
import math
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from laplat.core.config import check_guard, settings
from laplat.core.errors import InternalConsistencyError, NumericError
from laplat.models.graph import Cut, Multigraph
from laplat.models.invariants import InvariantReport, RamanujanBounds, RamanujanEvidence, RamanujanVerdict
from laplat.models.lattice import LaplacianLattice
from laplat.models.point import LatticePoint
from laplat.services import graph_service, lattice_service
from laplat.services.delaunay_service import subset_sum

logger = logging.getLogger(__name__)


def shortest_vector(L: LaplacianLattice, guard_override: bool = False) -> Tuple[Fraction, LatticePoint, Tuple[int, ...]]:
    """
    nu = min over nonempty proper S of d(O, u_S), which equals MC_inf.

    Returns (nu, u_S, S) with S the lexicographically smallest minimizer.
    """
    size = L.n + 1
    check_guard("shortest_vector vertices", size, settings.ENUMERATION_GUARD, guard_override)
    origin = (0,) * size
    best = None
    for side in graph_service.iter_cut_sides(size):
        u = subset_sum(L, side)
        value = lattice_service.simplicial_distance(origin, u)
        cut_value = graph_service.cut_weights(L.graph, side).linf_weight
        if value != cut_value:
            raise InternalConsistencyError(
                "distance to u_S differs from the l-infinity cut weight",
                detail={"side": list(side), "distance": str(value), "cut": cut_value},
            )
        if best is None or (value, side) < (best[0], best[2]):
            best = (value, u, side)

    _, mc_inf = graph_service.min_cut_linf(L.graph, guard_override=guard_override)
    if best[0] != mc_inf:
        raise InternalConsistencyError(
            "shortest vector differs from MC_inf", detail={"nu": str(best[0]), "mc_inf": mc_inf}
        )
    return best


def packing_radius(L: LaplacianLattice) -> Tuple[Fraction, Cut]:
    """Pac = MC_1 / (n+1)"""
    cut, mc1 = graph_service.min_cut_l1(L.graph)
    return Fraction(mc1, L.n + 1), cut


def covering_radius(L: LaplacianLattice) -> Fraction:
    """Cov = (g + n) / (n+1)"""
    return Fraction(graph_service.genus(L.graph) + L.n, L.n + 1)


def density_lower_bound(n: int) -> Fraction:
    """Every Laplacian lattice of dimension n has covering density at least n / (2(n+1))"""
    return Fraction(n, 2 * (n + 1))


def _nonzero_spectrum(L: LaplacianLattice) -> List[float]:
    values = graph_service.laplacian_spectrum(L.rows)
    nonzero = [v for v in values if abs(v) > settings.ZERO_TOLERANCE]
    if len(nonzero) != L.n:
        raise NumericError(
            "expected exactly n nonzero Laplacian eigenvalues",
            detail={"n": L.n, "spectrum": values},
        )
    return nonzero


def _geometric_mean(values: List[float]) -> float:
    return float(np.exp(np.mean(np.log(values))))


def densities(L: LaplacianLattice) -> Tuple[float, float]:
    """
    gamma = MC_1 / ((n+1) (prod lambda)^(1/n)) and
    theta = (sum lambda) / (2 (n+1) (prod lambda)^(1/n)) over the nonzero
    Laplacian eigenvalues. Checks Kirchhoff (prod lambda = (n+1) T) and the
    agreement with the exact radii normalized by ((n+1) T)^(1/n).
    """
    nonzero = _nonzero_spectrum(L)
    trees = graph_service.spanning_tree_count(L.rows)
    product = float(np.prod(nonzero))
    expected = (L.n + 1) * trees
    if not math.isclose(product, expected, rel_tol=settings.KIRCHHOFF_RTOL):
        logger.warning(f"Kirchhoff self-check drift: prod(lambda) = {product}, (n+1)T = {expected}")
        raise NumericError(
            "eigenvalue product disagrees with the spanning tree count",
            detail={"product": product, "expected": expected},
        )

    _, mc1 = graph_service.min_cut_l1(L.graph)
    mean = _geometric_mean(nonzero)
    gamma = mc1 / ((L.n + 1) * mean)
    theta = float(np.sum(nonzero)) / (2 * (L.n + 1) * mean)

    scale = float(expected) ** (1.0 / L.n)
    pac, _ = packing_radius(L)
    cov = covering_radius(L)
    for name, spectral, exact in (("gamma", gamma, float(pac) / scale), ("theta", theta, float(cov) / scale)):
        if not math.isclose(spectral, exact, rel_tol=settings.KIRCHHOFF_RTOL):
            raise NumericError(
                f"spectral and exact {name} disagree", detail={"spectral": spectral, "exact": exact}
            )
    return gamma, theta


def is_ramanujan(graph: Multigraph) -> RamanujanEvidence:
    """
    d-regular graphs are Ramanujan when every nontrivial adjacency eigenvalue
    has absolute value at most 2 sqrt(d-1). Non-regular graphs get the
    verdict not_applicable.
    """
    degrees = tuple(graph.degrees())
    if len(set(degrees)) != 1:
        return RamanujanEvidence(verdict=RamanujanVerdict.NOT_APPLICABLE, degrees=degrees)

    d = degrees[0]
    laplacian_values = graph_service.laplacian_spectrum(graph_service.laplacian(graph))
    # A = dI - Q, so ascending Laplacian values give descending adjacency values
    adjacency = tuple(d - v for v in laplacian_values)
    lambda_a = max(abs(adjacency[1]), abs(adjacency[-1]))
    threshold = 2 * math.sqrt(d - 1) if d >= 1 else 0.0
    interval = (d - threshold, d + threshold)
    in_interval = all(
        interval[0] - settings.ZERO_TOLERANCE <= v <= interval[1] + settings.ZERO_TOLERANCE
        for v in laplacian_values[1:]
    )
    ramanujan = lambda_a <= threshold + settings.ZERO_TOLERANCE
    logger.debug(f"Ramanujan check: d = {d}, lambda_A = {lambda_a:.6f}, threshold = {threshold:.6f}")
    return RamanujanEvidence(
        verdict=RamanujanVerdict.RAMANUJAN if ramanujan else RamanujanVerdict.NOT_RAMANUJAN,
        degrees=degrees,
        degree=d,
        adjacency_spectrum=adjacency,
        lambda_a=lambda_a,
        threshold=threshold,
        laplacian_interval=interval,
        laplacian_in_interval=in_interval,
    )


def ramanujan_bounds(graph: Multigraph) -> RamanujanBounds:
    """
    For a d-regular Ramanujan graph check
    theta <= d / (4 (d - 2 sqrt(d-1))),
    gamma >= (d - 2 sqrt(d-1)) / (2 (n+1) (d + 2 sqrt(d-1))) and
    d - 2 sqrt(d-1) <= (prod lambda)^(1/n) <= d + 2 sqrt(d-1).
    The theta bound is unbounded for d = 2.
    """
    evidence = is_ramanujan(graph)
    if not evidence.is_ramanujan:
        return RamanujanBounds(status="bounds_not_claimed", evidence=evidence)

    L = lattice_service.lattice_from_graph(graph)
    d = evidence.degree
    low, high = evidence.laplacian_interval
    gamma, theta = densities(L)
    theta_upper = math.inf if low <= settings.ZERO_TOLERANCE else d / (4 * low)
    gamma_lower = low / (2 * (L.n + 1) * high)
    mean = _geometric_mean(_nonzero_spectrum(L))

    tolerance = settings.ZERO_TOLERANCE
    failures = {}
    if theta > theta_upper + tolerance:
        failures["theta"] = [theta, theta_upper]
    if gamma < gamma_lower - tolerance:
        failures["gamma"] = [gamma, gamma_lower]
    if not (low - tolerance <= mean <= high + tolerance):
        failures["geometric_mean"] = [mean, low, high]
    if failures:
        raise InternalConsistencyError("Ramanujan density bound violated", detail=failures)

    return RamanujanBounds(
        status="checked",
        evidence=evidence,
        theta=theta,
        theta_upper=theta_upper,
        gamma=gamma,
        gamma_lower=gamma_lower,
        geometric_mean=mean,
        spectral_interval=(low, high),
    )


def report(graph: Multigraph, guard_override: bool = False) -> InvariantReport:
    """Every invariant of the Laplacian lattice of a connected multigraph"""
    L = lattice_service.lattice_from_graph(graph)
    nu, witness, side = shortest_vector(L, guard_override=guard_override)
    pac, cut = packing_radius(L)
    cov = covering_radius(L)
    if pac > cov:
        raise InternalConsistencyError("packing radius exceeds covering radius", detail={"pac": str(pac), "cov": str(cov)})

    gamma, theta = densities(L)
    floor = float(density_lower_bound(L.n))
    if theta < floor - 1e-9:
        raise InternalConsistencyError(
            "covering density below the universal lower bound", detail={"theta": theta, "bound": floor}
        )

    result = InvariantReport(
        n=L.n,
        trees=lattice_service.lattice_index(L),
        genus=graph_service.genus(graph),
        nu=nu,
        shortest_witness=witness,
        shortest_side=side,
        pac=pac,
        pac_witness=cut,
        cov=cov,
        gamma=gamma,
        theta=theta,
        ramanujan=is_ramanujan(graph),
        spectrum=graph_service.laplacian_spectrum(L.rows),
    )
    logger.info(f"Invariants computed for {graph.vertex_count} vertices: nu = {nu}, pac = {pac}, cov = {cov}")
    return result
