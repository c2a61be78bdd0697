"""
Chip-firing on a multigraph: moves, equivalence through lattice
membership, and the geometric test for equivalence to an effective
configuration.
"""

import logging
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence, Tuple, Union

from laplat.core.config import settings
from laplat.core.errors import InternalConsistencyError, InvalidInputError
from laplat.models.chipfire import Configuration, FiringDirection
from laplat.models.graph import Multigraph
from laplat.models.point import SimplexOrientation
from laplat.services import lattice_service

logger = logging.getLogger(__name__)

ConfigurationLike = Union[Configuration, Sequence[int]]


def _chips(graph: Multigraph, c: ConfigurationLike) -> Tuple[int, ...]:
    chips = tuple(c.chips if isinstance(c, Configuration) else c)
    if len(chips) != graph.vertex_count:
        raise InvalidInputError(
            "configuration length does not match the graph",
            detail={"expected": graph.vertex_count, "got": len(chips)},
        )
    if any(isinstance(x, bool) or not isinstance(x, int) for x in chips):
        raise InvalidInputError("chip counts must be integers", detail={"chips": [str(x) for x in chips]})
    return chips


def fire(graph: Multigraph, c: ConfigurationLike, v: int, direction: FiringDirection) -> Configuration:
    """Lending subtracts row v of Q (v sends one chip along each edge); borrowing adds it"""
    chips = _chips(graph, c)
    if not 0 <= v < graph.vertex_count:
        raise InvalidInputError("vertex out of range", detail={"vertex": v})
    row = lattice_service.lattice_from_graph(graph).rows[v]
    sign = -1 if FiringDirection(direction) == FiringDirection.LEND else 1
    return Configuration(tuple(a + sign * b for a, b in zip(chips, row)))


def equivalent(graph: Multigraph, first: ConfigurationLike, second: ConfigurationLike) -> Optional[Tuple[int, ...]]:
    """Firing vector w with first - second = Q w, or None"""
    a, b = _chips(graph, first), _chips(graph, second)
    if sum(a) != sum(b):
        return None
    L = lattice_service.lattice_from_graph(graph)
    return lattice_service.lattice_contains(L, tuple(x - y for x, y in zip(a, b)))


def effective_equivalent(
    graph: Multigraph, c: ConfigurationLike
) -> Tuple[bool, Optional[Configuration], Optional[Tuple[int, ...]]]:
    """
    Decide whether c is equivalent to an effective configuration.

    With k = deg(c) and p the projection of c onto H_0, c is equivalent to an
    effective configuration exactly when some q in L has |min(p - q)| <= k/(n+1),
    i.e. p lies in the closed simplex q + (k/(n+1)) times the standard one.
    Returns (verdict, effective representative c - q, firing vector of q).
    """
    chips = _chips(graph, c)
    degree = sum(chips)
    if degree < 0:
        return False, None, None
    L = lattice_service.lattice_from_graph(graph)
    if all(x >= 0 for x in chips):
        return True, Configuration(chips), (0,) * (L.n + 1)

    p = lattice_service.project_H0(chips)
    value, argmins = lattice_service.h_distance(L, p, SimplexOrientation.TRI_BAR)
    if value > Fraction(degree, L.n + 1):
        logger.debug(f"{list(chips)} is not effective-equivalent: h = {value} > {degree}/{L.n + 1}")
        return False, None, None

    q = argmins[0]
    effective = tuple(x - y for x, y in zip(chips, q))
    if any(x < 0 for x in effective):
        raise InternalConsistencyError(
            "effective representative has a negative entry",
            detail={"configuration": list(chips), "witness": list(q)},
        )
    return True, Configuration(effective), lattice_service.lattice_contains(L, q)


def effective_oracle(graph: Multigraph, c: ConfigurationLike, bound: Optional[int] = None) -> Optional[Configuration]:
    """Search firing vectors w with every entry in [-bound, bound] for c - Q w >= 0"""
    chips = _chips(graph, c)
    bound = settings.CHIP_ORACLE_BOUND if bound is None else bound
    rows = lattice_service.lattice_from_graph(graph).rows
    size = graph.vertex_count
    for w in product(range(-bound, bound + 1), repeat=size):
        candidate = tuple(chips[k] - sum(w[i] * rows[i][k] for i in range(size)) for k in range(size))
        if all(x >= 0 for x in candidate):
            return Configuration(candidate)
    return None
