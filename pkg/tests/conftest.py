from itertools import combinations

import pytest
from faker import Faker

from laplat.models.graph import Multigraph
from laplat.services.lattice_service import lattice_from_graph


def complete_graph(vertices: int, mult: int = 1) -> Multigraph:
    return Multigraph(vertices, tuple((i, j, mult) for i, j in combinations(range(vertices), 2)))


def cycle_graph(vertices: int) -> Multigraph:
    return Multigraph(vertices, tuple((i, (i + 1) % vertices, 1) for i in range(vertices)))


def path_graph(vertices: int) -> Multigraph:
    return Multigraph(vertices, tuple((i, i + 1, 1) for i in range(vertices - 1)))


def petersen_graph() -> Multigraph:
    outer = [(i, (i + 1) % 5, 1) for i in range(5)]
    spokes = [(i, i + 5, 1) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5, 1) for i in range(5)]
    return Multigraph(10, tuple(outer + spokes + inner))


def random_connected_multigraph(fake: Faker, vertices: int, max_mult: int = 3) -> Multigraph:
    """Random spanning tree with extra random multiplicities on top"""
    edges = {}
    for v in range(1, vertices):
        edges[(fake.random_int(0, v - 1), v)] = fake.random_int(1, max_mult)
    for i, j in combinations(range(vertices), 2):
        if (i, j) not in edges and fake.random_int(0, 2) == 0:
            edges[(i, j)] = fake.random_int(1, max_mult)
    return Multigraph.from_multiplicities(vertices, edges)


@pytest.fixture
def fake():
    Faker.seed(20240611)
    return Faker()


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def g7():
    return Multigraph(3, ((0, 1, 3), (0, 2, 2), (1, 2, 2)))


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def petersen():
    return petersen_graph()


@pytest.fixture
def lk3(k3):
    return lattice_from_graph(k3)


@pytest.fixture
def lp3(p3):
    return lattice_from_graph(p3)


@pytest.fixture
def lg7(g7):
    return lattice_from_graph(g7)
