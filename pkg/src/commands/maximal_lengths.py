import argparse
import logging

from common.filterreg import SearchStats, explore_maximal_lengths
from common.mixedmult_helper import Settings, add_common_arguments
from common.model import Model
from common.report import Report, new_report

log = logging.getLogger(__name__)


def add_subparser(subparsers: argparse._SubParsersAction) -> None:
    """Register parser and its arguments as subparser."""
    parser = subparsers.add_parser(
        "maximal-lengths",
        help="Lengths of maximal filter-regular sequences of variables",
    )
    add_common_arguments(parser)
    parser.add_argument("--ideal", default=None, help="ideal name (default: last declared)")
    parser.set_defaults(func=run)


def run(model: Model, args: argparse.Namespace) -> Report:
    """Entry function for module."""
    settings = Settings.from_args(args)
    report = new_report(args, settings)
    quotient = model.quotient(args.ideal)
    stats = SearchStats(settings.budget)
    lengths = explore_maximal_lengths(quotient, settings, stats)
    if stats.exhausted:
        report.guards.append(f"search budget exhausted after {stats.nodes} nodes, lengths may be incomplete")
    report.result = {
        "ideal": str(quotient.ideal),
        "lengths": lengths,
        "max": max(lengths, default=None),
        "nodes": stats.nodes,
        "complete": not stats.exhausted,
    }
    return report
