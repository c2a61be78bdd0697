from laplat.cli.common import load_graph, load_json, parse
from laplat.schemas.chipfire import EquivalenceResponse, EffectiveResponse
from laplat.schemas.point import ConfigurationInput
from laplat.services import chipfire_service


def _configuration(source: str):
    return parse(ConfigurationInput, load_json(source), source).to_configuration()


def equiv(args):
    graph = load_graph(args.graph)
    witness = chipfire_service.equivalent(graph, _configuration(args.first), _configuration(args.second))
    return EquivalenceResponse(equivalent=witness is not None, witness=list(witness) if witness is not None else None)


def effective(args):
    graph = load_graph(args.graph)
    verdict, representative, firing = chipfire_service.effective_equivalent(graph, _configuration(args.configuration))
    return EffectiveResponse(
        effective=verdict,
        representative=list(representative.chips) if representative is not None else None,
        firing=list(firing) if firing is not None else None,
    )


def register(subparsers) -> None:
    parser = subparsers.add_parser("equiv", help="decide chip-firing equivalence of two configurations")
    parser.add_argument("graph")
    parser.add_argument("first", help="JSON integer array (file or inline)")
    parser.add_argument("second", help="JSON integer array (file or inline)")
    parser.set_defaults(handler=equiv)

    parser = subparsers.add_parser("effective", help="decide equivalence to an effective configuration")
    parser.add_argument("graph")
    parser.add_argument("configuration", help="JSON integer array (file or inline)")
    parser.set_defaults(handler=effective)
