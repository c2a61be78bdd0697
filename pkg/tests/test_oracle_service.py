from fractions import Fraction as F

import pytest

from laplat.core.errors import EnumerationLimitError, InvalidInputError
from laplat.models.graph import Multigraph
from laplat.models.oracle import PerturbationMode
from laplat.services import delaunay_service, graph_service, invariant_service, oracle_service
from laplat.services.lattice_service import lattice_from_graph
from laplat.services.reconstruct_service import iter_connected_multigraphs
from tests.conftest import complete_graph, path_graph, random_connected_multigraph


def test_indegrees(k3, g7):
    assert oracle_service.indegrees(k3, (0, 1, 2)) == (0, 1, 2)
    assert oracle_service.indegrees(k3, (2, 1, 0)) == (2, 1, 0)
    assert oracle_service.indegrees(g7, (1, 0, 2)) == (3, 0, 4)


def test_critical_points_of_k3(k3):
    points = oracle_service.critical_points(k3)
    assert len(points) == 6
    first = points[0]
    assert first.permutation == (0, 1, 2)
    assert first.indegrees == (0, 1, 2)
    assert first.projection == (-1, 0, 1)
    assert {point.value for point in points} == {1}


def test_critical_points_of_paths_and_g7(p3, g7):
    first = oracle_service.critical_points(p3)[0]
    assert first.indegrees == (0, 1, 1)
    assert first.value == F(2, 3)
    assert {point.value for point in oracle_service.critical_points(g7)} == {F(7, 3)}


def test_critical_points_on_three_vertices():
    for graph in iter_connected_multigraphs(3, 3):
        cov = invariant_service.covering_radius(lattice_from_graph(graph))
        assert all(point.value == cov for point in oracle_service.critical_points(graph))


def test_critical_points_match_covering_radius(fake):
    for _ in range(3):
        graph = random_connected_multigraph(fake, 4)
        cov = invariant_service.covering_radius(lattice_from_graph(graph))
        assert all(point.value == cov for point in oracle_service.critical_points(graph))


def test_critical_points_guard():
    with pytest.raises(EnumerationLimitError):
        oracle_service.critical_points(path_graph(9))


def test_voronoi_neighbours_of_k3(lk3):
    expected = delaunay_service.polytope(lk3).vertex_set
    assert oracle_service.voronoi_neighbors_grid(lk3, 24) == expected


def test_voronoi_neighbours_of_g7(lg7):
    coarse = oracle_service.voronoi_neighbors_grid(lg7, 8)
    fine = oracle_service.voronoi_neighbors_grid(lg7, 48)
    assert coarse <= fine
    assert (-2, -2, 4) in fine
    assert (2, 2, -4) in fine
    assert fine <= delaunay_service.polytope(lg7).vertex_set


def test_grid_checks_reject_bad_arguments(lk3, lg7):
    with pytest.raises(InvalidInputError):
        oracle_service.voronoi_neighbors_grid(lattice_from_graph(path_graph(2)), 4)
    with pytest.raises(InvalidInputError):
        oracle_service.voronoi_neighbors_grid(lk3, 0)
    with pytest.raises(EnumerationLimitError):
        oracle_service.covering_grid_max(lg7, 65)
    with pytest.raises(InvalidInputError):
        oracle_service.packing_overlap_grid(lattice_from_graph(complete_graph(4)), 4)


def test_packing_has_no_overlaps(lk3, lg7):
    assert oracle_service.packing_overlap_grid(lk3, 12) == []
    assert oracle_service.packing_overlap_grid(lg7, 12) == []


def test_covering_grid_max(lk3, lg7):
    value, point = oracle_service.covering_grid_max(lk3, 24)
    assert value == 1
    assert len(point) == 3
    assert oracle_service.covering_grid_max(lg7, 12)[0] <= F(7, 3)


def test_brute_force_agrees_with_cuts(lg7, lp3):
    assert oracle_service.brute_force_shortest_vector(lg7) == (2, [(-2, -2, 4)])
    value, witnesses = oracle_service.brute_force_packing_radius(lg7)
    assert value == F(4, 3)
    assert all(sum(abs(c) for c in q) == 8 for q in witnesses)
    assert oracle_service.brute_force_packing_radius(lp3)[0] == F(1, 3)


def test_perturb_complete_graph(k3):
    Q = graph_service.laplacian(k3)
    perturbed = oracle_service.perturb(Q, F(1, 2))
    assert perturbed.scale == 2
    assert perturbed.scaled_graph == complete_graph(3, 3)
    assert perturbed.rows[0] == (3, F(-3, 2), F(-3, 2))


def test_perturb_path(p3):
    Q = graph_service.laplacian(p3)
    standard = oracle_service.perturb_standard(Q, F(1, 2))
    assert standard.scaled_graph == Multigraph(3, ((0, 1, 3), (0, 2, 1), (1, 2, 3)))
    assert standard.scaled_graph.is_complete_skeleton()

    zeros = oracle_service.perturb_zero_entries(Q, F(1, 2))
    assert zeros.mode == PerturbationMode.ZEROS
    assert zeros.scaled_graph == Multigraph(3, ((0, 1, 2), (0, 2, 1), (1, 2, 2)))


def test_perturb_by_zero_is_identity(g7):
    perturbed = oracle_service.perturb(graph_service.laplacian(g7), 0)
    assert perturbed.scale == 1
    assert perturbed.scaled_graph == g7
    with pytest.raises(InvalidInputError):
        oracle_service.perturb(graph_service.laplacian(g7), F(-1, 4))


@pytest.mark.parametrize("mode", [PerturbationMode.STANDARD, PerturbationMode.ZEROS])
def test_limit_check(k3, p3, g7, mode):
    epsilons = [F(1, 2**k) for k in range(1, 7)]
    for graph in (k3, p3, g7):
        report = oracle_service.limit_check(graph_service.laplacian(graph), epsilons, mode)
        assert len(report.steps) == 6
        assert report.final_gap <= epsilons[-1] * graph.vertex_count


def test_limit_check_values(g7):
    report = oracle_service.limit_check(graph_service.laplacian(g7), [F(1, 2), F(1, 4)])
    assert (report.nu, report.pac) == (2, F(4, 3))
    assert [step.nu for step in report.steps] == [F(5, 2), F(9, 4)]
    assert [step.pac_gap for step in report.steps] == [F(1, 3), F(1, 6)]


def test_limit_check_rejects_bad_sequences(k3):
    Q = graph_service.laplacian(k3)
    with pytest.raises(InvalidInputError):
        oracle_service.limit_check(Q, [F(1, 4), F(1, 2)])
    with pytest.raises(InvalidInputError):
        oracle_service.limit_check(Q, [F(1, 2), 0])


@pytest.mark.slow
def test_grid_oracles_on_three_vertices():
    for graph in iter_connected_multigraphs(3, 3):
        L = lattice_from_graph(graph)
        cov = invariant_service.covering_radius(L)
        value, _ = oracle_service.covering_grid_max(L, 48)
        assert value <= cov
        assert oracle_service.packing_overlap_grid(L, 48) == []
        assert oracle_service.voronoi_neighbors_grid(L, 48) <= delaunay_service.polytope(L).vertex_set
