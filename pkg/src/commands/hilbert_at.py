import argparse
import logging

from common.hilbert import brute_force_count, graded_count, vanishing_test
from common.kernel import count_free_monomials
from common.mixedmult_helper import Settings, add_common_arguments, parse_int_list
from common.model import Model
from common.report import Report, new_report

log = logging.getLogger(__name__)


def add_subparser(subparsers: argparse._SubParsersAction) -> None:
    """Register parser and its arguments as subparser."""
    parser = subparsers.add_parser("hilbert-at", help="Length of one multigraded piece of R/I")
    add_common_arguments(parser)
    parser.add_argument("--at", required=True, help="multidegree as d1,d2,...")
    parser.add_argument("--ideal", default=None, help="ideal name (default: last declared)")
    parser.add_argument(
        "--brute-force",
        dest="brute_force",
        action="store_true",
        help="also count by enumerating all monomials of the multidegree",
    )
    parser.set_defaults(func=run)


def run(model: Model, args: argparse.Namespace) -> Report:
    """Entry function for module."""
    settings = Settings.from_args(args)
    report = new_report(args, settings)
    quotient = model.quotient(args.ideal)
    n = parse_int_list(args.at, "multidegree")
    count = graded_count(quotient, n, settings)
    report.result = {
        "ideal": str(quotient.ideal),
        "multidegree": list(n),
        "count": count,
        "free": count_free_monomials(quotient.spec, n),
        "vanishing": vanishing_test(quotient),
    }
    if args.brute_force:
        brute = brute_force_count(quotient, n, settings)
        report.result["brute_force"] = brute
        report.passed = brute == count
    return report
