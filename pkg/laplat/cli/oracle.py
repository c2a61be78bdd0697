from fractions import Fraction

from laplat.cli.common import load_graph
from laplat.core.errors import UsageError
from laplat.models.oracle import PerturbationMode
from laplat.schemas.common import rational
from laplat.schemas.oracle import CriticalPointResponse, CriticalPointsResponse, LimitResponse, VoronoiResponse
from laplat.services import graph_service, invariant_service, lattice_service, oracle_service


def voronoi(args):
    L = lattice_service.lattice_from_graph(load_graph(args.graph))
    neighbours = oracle_service.voronoi_neighbors_grid(L, args.resolution, guard_override=args.guard_override)
    return VoronoiResponse(resolution=args.resolution, neighbours=[list(q) for q in sorted(neighbours)])


def critical(args):
    graph = load_graph(args.graph)
    points = oracle_service.critical_points(graph, guard_override=args.guard_override, strict=not args.lenient)
    cov = invariant_service.covering_radius(lattice_service.lattice_from_graph(graph))
    return CriticalPointsResponse(
        cov=rational(cov),
        all_equal_cov=all(p.value == cov for p in points),
        points=[CriticalPointResponse.from_point(p) for p in points],
    )


def _epsilons(text: str):
    try:
        return [Fraction(part) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError("epsilons must be comma separated rationals", detail={"epsilons": text}) from e


def limit(args):
    graph = load_graph(args.graph)
    epsilons = _epsilons(args.epsilons) if args.epsilons else [Fraction(1, 2**k) for k in range(1, args.steps + 1)]
    report = oracle_service.limit_check(graph_service.laplacian(graph), epsilons, PerturbationMode(args.mode))
    return LimitResponse.from_report(report)


def register(subparsers) -> None:
    parser = subparsers.add_parser("oracle", help="brute-force and limit verifiers")
    oracles = parser.add_subparsers(dest="oracle", required=True)

    sub = oracles.add_parser("voronoi", help="Voronoi neighbours of the origin from a rational grid")
    sub.add_argument("graph")
    sub.add_argument("--resolution", type=int, default=24)
    sub.set_defaults(handler=voronoi)

    sub = oracles.add_parser("critical", help="acyclic-orientation critical points and their h values")
    sub.add_argument("graph")
    sub.add_argument("--lenient", action="store_true", help="report mismatches instead of failing")
    sub.set_defaults(handler=critical)

    sub = oracles.add_parser("limit", help="nu and Pac of perturbed lattices as epsilon decreases")
    sub.add_argument("graph")
    sub.add_argument("--epsilons", help="comma separated decreasing rationals, e.g. 1/2,1/4")
    sub.add_argument("--steps", type=int, default=6, help="use epsilon = 2^-k for k = 1..steps")
    sub.add_argument("--mode", choices=[m.value for m in PerturbationMode], default=PerturbationMode.STANDARD.value)
    sub.set_defaults(handler=limit)
