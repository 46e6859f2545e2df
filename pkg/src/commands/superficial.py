import argparse
import logging
from typing import Any, Dict

from common.idealmm import SuperficialVerdict, is_classically_superficial, is_superficial
from common.mixedmult_helper import Settings, add_common_arguments, format_tuple, parse_int_list
from common.model import Model
from common.report import Report, new_report

log = logging.getLogger(__name__)


def add_subparser(subparsers: argparse._SubParsersAction) -> None:
    """Register parser and its arguments as subparser."""
    parser = subparsers.add_parser(
        "superficial",
        help="Check a variable for superficiality on a window of exponents",
    )
    add_common_arguments(parser)
    parser.add_argument("--system", default=None, help="system name (default: last declared)")
    parser.add_argument("--var", required=True, help="candidate variable")
    parser.add_argument("--index", type=int, required=True, help="ideal index, 0 for J, i for I_i")
    parser.add_argument("--exponents", default=None, help="window low,high of exponents (default: automatic)")
    parser.add_argument(
        "--classical-c",
        dest="classical_c",
        type=int,
        default=None,
        help="also run the classical superficiality check with this c",
    )
    parser.set_defaults(func=run)


def verdict_to_json(verdict: SuperficialVerdict) -> Dict[str, Any]:
    return {
        "verified": verdict.verified,
        "window": list(verdict.window),
        "failed_at": format_tuple(verdict.failed_at) if verdict.failed_at else None,
        "failed_condition": verdict.failed_condition,
    }


def run(model: Model, args: argparse.Namespace) -> Report:
    """Entry function for module."""
    settings = Settings.from_args(args)
    report = new_report(args, settings)
    system = model.system(args.system)
    window = None
    if args.exponents is not None:
        bounds = parse_int_list(args.exponents, "window")
        if len(bounds) != 2:
            log.warning("Ignoring window '%s', it needs exactly two entries", args.exponents)
        else:
            window = (bounds[0], bounds[1])

    verdict = is_superficial(system, args.var, args.index, window)
    report.result = {"variable": args.var, "index": args.index, **verdict_to_json(verdict)}
    report.passed = verdict.verified
    if args.classical_c is not None:
        classical = is_classically_superficial(system, args.var, args.index, args.classical_c, window)
        report.result["classical"] = verdict_to_json(classical)
    return report
