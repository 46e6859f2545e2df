import argparse
import logging

from common.filterreg import SearchStats, find_sequence, verify_sequence
from common.mixedmult_helper import Settings, add_common_arguments, format_tuple, parse_type_argument
from common.model import Model
from common.report import Report, certificate_to_json, ideal_to_json, new_report

log = logging.getLogger(__name__)


def add_subparser(subparsers: argparse._SubParsersAction) -> None:
    """Register parser and its arguments as subparser."""
    parser = subparsers.add_parser(
        "filter-seq",
        help="Find or verify a filter-regular sequence of variables of a given type",
    )
    add_common_arguments(parser)
    parser.add_argument("--ideal", default=None, help="ideal name (default: last declared)")
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--type", dest="type_vector", help="number of variables per block, k1,k2,...")
    group.add_argument("--seq", help="comma separated variables to verify step by step")
    parser.set_defaults(func=run)


def run(model: Model, args: argparse.Namespace) -> Report:
    """Entry function for module."""
    settings = Settings.from_args(args)
    report = new_report(args, settings)
    quotient = model.quotient(args.ideal)

    if args.seq is not None:
        variables = [var.strip() for var in args.seq.split(",") if var.strip()]
        certificate = verify_sequence(quotient, variables)
        report.result = {"mode": "verify"}
    else:
        type_vector = parse_type_argument(args.type_vector)
        stats = SearchStats(settings.budget)
        certificate = find_sequence(quotient, type_vector, settings, stats)
        report.result = {"mode": "search", "nodes": stats.nodes}
        if stats.exhausted:
            report.guards.append(f"search budget exhausted after {stats.nodes} nodes")

    report.result.update(
        {
            "ideal": str(quotient.ideal),
            "found": certificate is not None,
            "type": format_tuple(certificate.type_vector) if certificate else None,
            "certificate": certificate_to_json(certificate),
            "cut": ideal_to_json(certificate.quotient.ideal) if certificate else None,
        }
    )
    return report
