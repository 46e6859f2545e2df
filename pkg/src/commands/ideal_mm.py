import argparse
import itertools
import logging

from common.idealmm import bhattacharya_table, direct_colength, is_m_primary, t_length
from common.mixedmult_helper import Settings, add_common_arguments, format_tuple
from common.model import Model
from common.report import Report, ideal_to_json, new_report

log = logging.getLogger(__name__)


def add_subparser(subparsers: argparse._SubParsersAction) -> None:
    """Register parser and its arguments as subparser."""
    parser = subparsers.add_parser(
        "ideal-mm",
        help="Mixed multiplicities of an m-primary ideal J and ideals I_1..I_s",
    )
    add_common_arguments(parser)
    parser.add_argument("--system", default=None, help="system name (default: last declared)")
    parser.set_defaults(func=run)


def run(model: Model, args: argparse.Namespace) -> Report:
    """Entry function for module."""
    settings = Settings.from_args(args)
    report = new_report(args, settings)
    system = model.system(args.system)
    table = bhattacharya_table(system, settings)
    report.note_escalation("bhattacharya", table.polynomial)

    report.result = {
        "system": {
            "variables": list(system.variables),
            "J": ideal_to_json(system.j_ideal),
            "ideals": [ideal_to_json(ideal) for ideal in system.ideals],
        },
        "polynomial": str(table.polynomial),
        "base": format_tuple(table.polynomial.base),
        "table": table.as_strings(),
    }

    if all(is_m_primary(ideal, system.variables) for ideal in system.ideals):
        # l(R/P(v+e_0)) - l(R/P(v)) must equal the counting function at v
        grid = itertools.product(range(table.polynomial.base[0], table.polynomial.base[0] + 2), repeat=system.s + 1)
        failures = [
            format_tuple(v)
            for v in grid
            if direct_colength(system, (v[0] + 1,) + v[1:], settings) - direct_colength(system, v, settings)
            != t_length(system, v, settings)
        ]
        report.result["telescoping_failures"] = failures
        report.passed = not failures
    return report
