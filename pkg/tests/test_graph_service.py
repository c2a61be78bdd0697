import pytest

from laplat.core.errors import (
    DisconnectedGraphError,
    EnumerationLimitError,
    InvalidGraphError,
    InvalidInputError,
)
from laplat.models.graph import Multigraph
from laplat.services import graph_service
from tests.conftest import complete_graph, path_graph, random_connected_multigraph


def test_laplacian_rows(k3, g7, p3):
    assert graph_service.laplacian(k3) == ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))
    assert graph_service.laplacian(g7) == ((5, -3, -2), (-3, 5, -2), (-2, -2, 4))
    assert graph_service.laplacian(p3) == ((1, -1, 0), (-1, 2, -1), (0, -1, 1))


def test_laplacian_rows_sum_to_zero(fake):
    for _ in range(20):
        graph = random_connected_multigraph(fake, fake.random_int(2, 6))
        Q = graph_service.laplacian(graph)
        assert all(sum(row) == 0 for row in Q)
        assert all(Q[i][j] == Q[j][i] for i in range(len(Q)) for j in range(len(Q)))


def test_laplacian_needs_two_vertices():
    with pytest.raises(InvalidGraphError):
        graph_service.laplacian(Multigraph(1))


def test_multigraph_rejects_bad_edges():
    with pytest.raises(InvalidGraphError):
        Multigraph(3, ((1, 1, 1),))
    with pytest.raises(InvalidGraphError):
        Multigraph(3, ((0, 1, 1), (1, 0, 2)))
    with pytest.raises(InvalidGraphError):
        Multigraph(3, ((0, 1, -1),))
    with pytest.raises(InvalidGraphError):
        Multigraph(3, ((0, 3, 1),))
    with pytest.raises(InvalidGraphError):
        Multigraph.from_adjacency([[0, 1], [2, 0]])


def test_spanning_tree_count(k3, g7, p3, k4, petersen):
    assert graph_service.spanning_tree_count(graph_service.laplacian(k3)) == 3
    assert graph_service.spanning_tree_count(graph_service.laplacian(g7)) == 16
    assert graph_service.spanning_tree_count(graph_service.laplacian(p3)) == 1
    assert graph_service.spanning_tree_count(graph_service.laplacian(k4)) == 16
    assert graph_service.spanning_tree_count(graph_service.laplacian(petersen)) == 2000


def test_spanning_tree_count_disconnected():
    graph = Multigraph(4, ((0, 1, 1), (2, 3, 2)))
    assert graph_service.spanning_tree_count(graph_service.laplacian(graph)) == 0


def test_spanning_tree_count_is_cofactor_independent(g7):
    Q = graph_service.laplacian(g7)
    # delete the first row and column instead of the last
    rotated = tuple(tuple(row[1:] + row[:1]) for row in Q[1:] + Q[:1])
    assert graph_service.spanning_tree_count(rotated) == graph_service.spanning_tree_count(Q)


def test_min_cut_l1(k3, g7, p3):
    cut, value = graph_service.min_cut_l1(k3)
    assert value == 2 and cut.side == (0,)
    cut, value = graph_service.min_cut_l1(g7)
    assert value == 4 and cut.side == (2,)
    _, value = graph_service.min_cut_l1(p3)
    assert value == 1


def test_min_cut_l1_disconnected():
    graph = Multigraph(4, ((0, 1, 1), (2, 3, 2)))
    cut, value = graph_service.min_cut_l1(graph)
    assert value == 0
    assert cut.l1_weight == 0


def test_min_cut_l1_matches_enumeration(fake):
    for _ in range(25):
        graph = random_connected_multigraph(fake, fake.random_int(2, 7))
        cut, value = graph_service.min_cut_l1(graph)
        assert cut.l1_weight == value
        expected = min(
            graph_service.cut_weights(graph, side).l1_weight
            for side in graph_service.iter_cut_sides(graph.vertex_count)
        )
        assert value == expected


def test_min_cut_linf(g7, k4):
    cut, value = graph_service.min_cut_linf(g7)
    assert value == 2 and cut.side == (2,)
    _, value = graph_service.min_cut_linf(k4)
    assert value == 1


def test_cut_weight_relations(fake):
    for _ in range(10):
        graph = random_connected_multigraph(fake, fake.random_int(2, 6))
        for side in graph_service.iter_cut_sides(graph.vertex_count):
            cut = graph_service.cut_weights(graph, side)
            outside = cut.complement(graph.vertex_count)
            assert cut.l1_weight == sum(graph.cut_degree(side, v) for v in outside)
            assert 1 <= cut.linf_weight <= cut.l1_weight


def test_min_cut_linf_guard():
    with pytest.raises(EnumerationLimitError) as e:
        graph_service.min_cut_linf(path_graph(25))
    assert e.value.detail["limit"] == 24


def test_genus(k3, p3, g7):
    assert graph_service.genus(k3) == 1
    assert graph_service.genus(p3) == 0
    assert graph_service.genus(g7) == 5
    with pytest.raises(DisconnectedGraphError):
        graph_service.genus(Multigraph(3, ((0, 1, 1),)))


def test_laplacian_spectrum(k3, p3):
    assert graph_service.laplacian_spectrum(graph_service.laplacian(k3)) == pytest.approx([0.0, 3.0, 3.0])
    assert graph_service.laplacian_spectrum(graph_service.laplacian(p3)) == pytest.approx([0.0, 1.0, 3.0])


def test_laplacian_spectrum_matches_numpy(fake):
    import numpy as np

    for _ in range(10):
        Q = graph_service.laplacian(random_connected_multigraph(fake, fake.random_int(2, 7)))
        expected = sorted(np.linalg.eigvalsh(np.array(Q, dtype=float)))
        assert graph_service.laplacian_spectrum(Q) == pytest.approx(expected, abs=1e-8)


def test_laplacian_spectrum_zero_eigenvalue_is_exact():
    values = graph_service.laplacian_spectrum(graph_service.laplacian(complete_graph(5)))
    assert values[0] == 0.0


def test_laplacian_spectrum_rejects_bad_matrices():
    with pytest.raises(InvalidInputError):
        graph_service.laplacian_spectrum([[1, 2], [3, 4]])
    with pytest.raises(InvalidInputError):
        graph_service.laplacian_spectrum([[1, 2, 3]])


@pytest.mark.parametrize("vertices", range(2, 8))
def test_spanning_tree_count_of_complete_graphs(vertices):
    Q = graph_service.laplacian(complete_graph(vertices))
    assert graph_service.spanning_tree_count(Q) == vertices ** (vertices - 2)


def test_spanning_tree_count_ignores_labels(fake):
    for _ in range(10):
        size = fake.random_int(2, 6)
        graph = random_connected_multigraph(fake, size)
        perm = tuple(fake.random_sample(range(size), length=size))
        expected = graph_service.spanning_tree_count(graph_service.laplacian(graph))
        assert graph_service.spanning_tree_count(graph_service.laplacian(graph.relabel(perm))) == expected


def test_laplacian_spectrum_sums_to_twice_the_edges(fake):
    for _ in range(10):
        graph = random_connected_multigraph(fake, fake.random_int(2, 7))
        edges = sum(mult for _, _, mult in graph.edges)
        spectrum = graph_service.laplacian_spectrum(graph_service.laplacian(graph))
        assert sum(spectrum) == pytest.approx(2 * edges)
