import argparse
import logging

from common.filterreg import SearchStats, positivity_certificate
from common.mixedmult_helper import Settings, add_common_arguments, parse_type_argument
from common.model import Model
from common.report import Report, new_report, positivity_to_json

log = logging.getLogger(__name__)


def add_subparser(subparsers: argparse._SubParsersAction) -> None:
    """Register parser and its arguments as subparser."""
    parser = subparsers.add_parser(
        "positivity",
        help="Decide whether a mixed multiplicity is positive and certify it by a filter-regular sequence",
    )
    add_common_arguments(parser)
    parser.add_argument("--ideal", default=None, help="ideal name (default: last declared)")
    parser.add_argument("--type", dest="type_vector", required=True, help="type k1,k2,... of total ell - 1")
    parser.set_defaults(func=run)


def run(model: Model, args: argparse.Namespace) -> Report:
    """Entry function for module."""
    settings = Settings.from_args(args)
    report = new_report(args, settings)
    quotient = model.quotient(args.ideal)
    stats = SearchStats(settings.budget)
    outcome = positivity_certificate(quotient, parse_type_argument(args.type_vector), settings, stats)
    if stats.exhausted:
        report.guards.append(f"search budget exhausted after {stats.nodes} nodes")
    report.result = {"ideal": str(quotient.ideal), **positivity_to_json(outcome), "nodes": stats.nodes}
    return report
