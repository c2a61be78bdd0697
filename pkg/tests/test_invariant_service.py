import math
from fractions import Fraction as F

import pytest

from laplat.models.graph import Multigraph
from laplat.models.invariants import RamanujanVerdict
from laplat.services import graph_service, invariant_service, lattice_service, oracle_service
from laplat.services.delaunay_service import subset_sum
from laplat.services.reconstruct_service import iter_connected_multigraphs
from tests.conftest import complete_graph, random_connected_multigraph


def test_shortest_vector(lk3, lg7, k4):
    assert invariant_service.shortest_vector(lk3) == (1, (2, -1, -1), (0,))
    assert invariant_service.shortest_vector(lg7) == (2, (-2, -2, 4), (2,))
    nu, _, _ = invariant_service.shortest_vector(lattice_service.lattice_from_graph(k4))
    assert nu == 1


def test_packing_radius(lk3, lg7, lp3):
    assert invariant_service.packing_radius(lk3)[0] == F(2, 3)
    pac, cut = invariant_service.packing_radius(lg7)
    assert pac == F(4, 3) and cut.side == (2,)
    assert invariant_service.packing_radius(lp3)[0] == F(1, 3)


def test_covering_radius(lk3, lg7, lp3):
    assert invariant_service.covering_radius(lk3) == 1
    assert invariant_service.covering_radius(lg7) == F(7, 3)
    assert invariant_service.covering_radius(lp3) == F(2, 3)


def test_shortest_vector_and_linf_cut_share_the_witness():
    # S = (2,) and S = (0, 1) both attain MC_inf = 1
    graph = Multigraph(3, ((0, 1, 3), (0, 2, 1)))
    cut, value = graph_service.min_cut_linf(graph)
    assert (value, cut.side) == (1, (0, 1))
    nu, _, side = invariant_service.shortest_vector(lattice_service.lattice_from_graph(graph))
    assert (nu, side) == (1, (0, 1))


def test_packing_radius_is_not_half_the_shortest_vector(lk3):
    nu, _, _ = invariant_service.shortest_vector(lk3)
    pac, _ = invariant_service.packing_radius(lk3)
    assert pac != nu / 2


def test_densities(lk3, lp3):
    gamma, theta = invariant_service.densities(lk3)
    assert gamma == pytest.approx(2 / 9)
    assert theta == pytest.approx(1 / 3)
    _, theta = invariant_service.densities(lp3)
    assert theta == pytest.approx(2 / (3 * math.sqrt(3)))


@pytest.mark.parametrize("vertices", [3, 4, 5, 6, 7])
def test_complete_graphs_meet_the_density_lower_bound(vertices):
    L = lattice_service.lattice_from_graph(complete_graph(vertices))
    _, theta = invariant_service.densities(L)
    bound = invariant_service.density_lower_bound(vertices - 1)
    assert abs(theta - float(bound)) <= 1e-9


def test_is_ramanujan(k4, c6, p3):
    evidence = invariant_service.is_ramanujan(k4)
    assert evidence.verdict == RamanujanVerdict.RAMANUJAN
    assert evidence.lambda_a == pytest.approx(1.0)
    assert evidence.laplacian_in_interval

    evidence = invariant_service.is_ramanujan(c6)
    assert evidence.is_ramanujan
    assert evidence.lambda_a == pytest.approx(2.0)

    evidence = invariant_service.is_ramanujan(p3)
    assert evidence.verdict == RamanujanVerdict.NOT_APPLICABLE
    assert evidence.degrees == (1, 2, 1)


def test_ramanujan_bounds(k4, petersen, c6, p3):
    bounds = invariant_service.ramanujan_bounds(k4)
    assert bounds.status == "checked"
    assert bounds.theta == pytest.approx(0.375)
    assert bounds.theta_upper == pytest.approx(3 / (4 * (3 - 2 * math.sqrt(2))))
    assert bounds.theta_margin > 0 and bounds.gamma_margin > 0

    bounds = invariant_service.ramanujan_bounds(petersen)
    assert bounds.status == "checked"
    assert bounds.evidence.lambda_a == pytest.approx(2.0)

    bounds = invariant_service.ramanujan_bounds(c6)
    assert bounds.theta_upper == math.inf
    assert bounds.theta == pytest.approx(0.488, abs=1e-3)

    assert invariant_service.ramanujan_bounds(p3).status == "bounds_not_claimed"


def test_report(g7):
    report = invariant_service.report(g7)
    assert report.nu == 2
    assert report.pac == F(4, 3)
    assert report.cov == F(7, 3)
    assert report.trees == 16
    assert report.genus == 5
    assert report.shortest_witness == (-2, -2, 4)
    assert report.pac <= report.cov


def test_invariants_survive_relabelling(fake):
    for _ in range(10):
        graph = random_connected_multigraph(fake, fake.random_int(3, 5))
        perm = list(range(graph.vertex_count))
        fake.random.shuffle(perm)
        first = lattice_service.lattice_from_graph(graph)
        second = lattice_service.lattice_from_graph(graph.relabel(perm))
        assert invariant_service.shortest_vector(first)[0] == invariant_service.shortest_vector(second)[0]
        assert invariant_service.packing_radius(first)[0] == invariant_service.packing_radius(second)[0]


def _check_central_theorems(graph, independent=True):
    L = lattice_service.lattice_from_graph(graph)
    n = L.n
    _, mc_inf = graph_service.min_cut_linf(graph)
    _, mc1 = graph_service.min_cut_l1(graph)
    midpoint_radius = min(
        lattice_service.triangle_midpoint(subset_sum(L, side))[1]
        for side in graph_service.iter_cut_sides(graph.vertex_count)
    )
    assert midpoint_radius == F(mc1, n + 1)
    assert invariant_service.shortest_vector(L)[0] == mc_inf
    if independent:
        assert oracle_service.brute_force_shortest_vector(L)[0] == mc_inf
        assert oracle_service.brute_force_packing_radius(L)[0] == F(mc1, n + 1)


def test_central_theorems_on_three_vertices():
    for graph in iter_connected_multigraphs(3, 3):
        _check_central_theorems(graph)
        _, theta = invariant_service.densities(lattice_service.lattice_from_graph(graph))
        assert theta >= float(invariant_service.density_lower_bound(2)) - 1e-9


@pytest.mark.slow
def test_central_theorems_on_four_vertices():
    for graph in iter_connected_multigraphs(4, 3):
        _check_central_theorems(graph, independent=False)
        L = lattice_service.lattice_from_graph(graph)
        assert oracle_service.brute_force_shortest_vector(L)[0] == graph_service.min_cut_linf(graph)[1]


def test_independent_packing_oracle_on_four_vertices(fake):
    for _ in range(5):
        _check_central_theorems(random_connected_multigraph(fake, 4, max_mult=2))
