import argparse
import logging

from common.idealmm import parse_sequence_member, theorem45_check
from common.mixedmult_helper import Settings, add_common_arguments, format_tuple, parse_type_argument
from common.model import Model
from common.report import Report, ideal_to_json, new_report

log = logging.getLogger(__name__)


def add_subparser(subparsers: argparse._SubParsersAction) -> None:
    """Register parser and its arguments as subparser."""
    parser = subparsers.add_parser(
        "theorem45",
        help="Compare a mixed multiplicity of ideals with the multiplicity of J modulo a saturated sequence",
    )
    add_common_arguments(parser)
    parser.add_argument("--system", default=None, help="system name (default: last declared)")
    parser.add_argument("--type", dest="type_vector", required=True, help="type k0,k1,...,ks of total q - 1")
    parser.add_argument(
        "--seq",
        default="",
        help="superficial sequence, members written var or var:i (i >= 1 names I_i)",
    )
    parser.set_defaults(func=run)


def run(model: Model, args: argparse.Namespace) -> Report:
    """Entry function for module."""
    settings = Settings.from_args(args)
    report = new_report(args, settings)
    system = model.system(args.system)
    sequence = [parse_sequence_member(item, system) for item in args.seq.split(",") if item.strip()]
    outcome = theorem45_check(system, parse_type_argument(args.type_vector), sequence, settings)
    report.result = {
        "type": format_tuple(outcome.type_vector),
        "sequence": [f"{var}:{index}" for var, index in outcome.sequence],
        "table_entry": outcome.table_entry,
        "saturated_ideal": ideal_to_json(outcome.saturated_ideal),
        "dimension": outcome.dimension,
        "expected_dimension": outcome.expected_dimension,
        "samuel_multiplicity": outcome.samuel_multiplicity,
        "holds": outcome.holds,
    }
    if not outcome.dimension_ok:
        report.guards.append("dimension of R/A differs from q - t, multiplicities not compared")
    report.passed = outcome.holds
    return report
