from laplat.schemas.invariants import InvariantReportResponse, SpectrumResponse
from laplat.schemas.common import real
from laplat.services import graph_service, invariant_service
from laplat.cli.common import load_graph


def invariants(args):
    graph = load_graph(args.graph)
    report = invariant_service.report(graph, guard_override=args.guard_override)
    bounds = invariant_service.ramanujan_bounds(graph) if args.ramanujan_bounds else None
    return InvariantReportResponse.from_report(report, bounds)


def spectrum(args):
    graph = load_graph(args.graph)
    values = graph_service.laplacian_spectrum(graph_service.laplacian(graph))
    return SpectrumResponse(spectrum=[real(v) for v in values])


def register(subparsers) -> None:
    parser = subparsers.add_parser("invariants", help="shortest vector, packing and covering radius, densities")
    parser.add_argument("graph", help="graph JSON file, '-' for stdin")
    parser.add_argument("--ramanujan-bounds", action="store_true", help="also check the Ramanujan density bounds")
    parser.set_defaults(handler=invariants)

    parser = subparsers.add_parser("spectrum", help="Laplacian eigenvalues, ascending")
    parser.add_argument("graph", help="graph JSON file, '-' for stdin")
    parser.set_defaults(handler=spectrum)
