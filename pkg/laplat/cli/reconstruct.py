from laplat.cli.common import load_graph, load_json, parse
from laplat.models.graph import Multigraph
from laplat.schemas.graph import GraphResponse
from laplat.schemas.point import VertexSetInput
from laplat.schemas.reconstruct import CensusClassResponse, CensusResponse, IsomorphicResponse, ReconstructResponse
from laplat.services import reconstruct_service


def reconstruct(args):
    data = load_json(args.vertex_set)
    if isinstance(data, list):
        data = {"vertices": data}
    points = parse(VertexSetInput, data, args.vertex_set).to_points()
    rows = reconstruct_service.reconstruct_laplacian(points)
    return ReconstructResponse(
        laplacian=[list(r) for r in rows], graph=GraphResponse.from_graph(Multigraph.from_laplacian(rows))
    )


def isomorphic(args):
    first, second = load_graph(args.first), load_graph(args.second)
    perm = reconstruct_service.graphs_isomorphic(first, second, guard_override=args.guard_override)
    return IsomorphicResponse(isomorphic=perm is not None, perm=list(perm) if perm is not None else None)


def census(args):
    classes = reconstruct_service.census(args.vertices, args.max_mult, guard_override=args.guard_override)
    return CensusResponse(
        vertices=args.vertices,
        max_mult=args.max_mult,
        lattices=len(classes),
        graphs=sum(entry.size for entry in classes),
        classes=[CensusClassResponse.from_class(entry) for entry in classes],
    )


def register(subparsers) -> None:
    parser = subparsers.add_parser("reconstruct", help="recover the graph from a Delaunay polytope vertex set")
    parser.add_argument("vertex_set", help="JSON {\"vertices\": [[...], ...]} or a bare list")
    parser.set_defaults(handler=reconstruct)

    parser = subparsers.add_parser("isomorphic", help="vertex permutation mapping one graph onto another")
    parser.add_argument("first")
    parser.add_argument("second")
    parser.set_defaults(handler=isomorphic)

    parser = subparsers.add_parser("census", help="group small multigraphs by Laplacian lattice")
    parser.add_argument("--vertices", type=int, default=3)
    parser.add_argument("--max-mult", type=int, default=3)
    parser.set_defaults(handler=census)
