from laplat.cli.common import load_graph, load_json, parse
from laplat.schemas.common import rational
from laplat.schemas.delaunay import DelaunayResponse, LocateResponse
from laplat.schemas.point import PointInput
from laplat.services import delaunay_service, lattice_service
from laplat.services.svg_service import svg_renderer


def delaunay(args):
    L = lattice_service.lattice_from_graph(load_graph(args.graph))
    if args.locate:
        p = parse(PointInput, load_json(args.locate), args.locate).to_point()
        sigma, translate = delaunay_service.locate(L, p, guard_override=args.guard_override)
        shifted = tuple(a - b for a, b in zip(p, translate))
        _, lambdas = delaunay_service.simplex_contains(L, sigma, shifted)
        return LocateResponse(
            sigma=list(sigma), translate=list(translate), lambdas=[rational(x) for x in lambdas]
        )
    P = delaunay_service.polytope(L, guard_override=args.guard_override)
    check = delaunay_service.hull_f_vector_check(P, guard_override=args.guard_override) if args.hull_check else None
    return DelaunayResponse.from_polytope(P, check)


def svg(args):
    L = lattice_service.lattice_from_graph(load_graph(args.graph))
    return svg_renderer.render(L, resolution=args.resolution)


def register(subparsers) -> None:
    parser = subparsers.add_parser("delaunay", help="Delaunay polytope of the origin, or the cell containing a point")
    parser.add_argument("graph", help="graph JSON file, '-' for stdin")
    parser.add_argument("--hull-check", action="store_true", help="compare with an exact convex hull (n <= 3)")
    parser.add_argument("--locate", metavar="POINT", help="JSON point of H_0 (file or inline array)")
    parser.set_defaults(handler=delaunay)

    parser = subparsers.add_parser("svg", help="SVG drawing of a three-vertex lattice")
    parser.add_argument("graph", help="graph JSON file, '-' for stdin")
    parser.add_argument("--resolution", type=int, default=12, help="Voronoi grid resolution (default 12)")
    parser.set_defaults(handler=svg)
