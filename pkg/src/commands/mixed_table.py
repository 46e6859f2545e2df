import argparse
import logging

from common.hilbert import (
    diagonal_identity,
    diagonal_profile,
    hilbert_polynomial,
    mixed_multiplicity_table,
    total_multiplicity,
)
from common.mixedmult_helper import Settings, add_common_arguments, format_tuple
from common.model import Model
from common.report import Report, new_report

log = logging.getLogger(__name__)


def add_subparser(subparsers: argparse._SubParsersAction) -> None:
    """Register parser and its arguments as subparser."""
    parser = subparsers.add_parser(
        "mixed-table",
        help="Hilbert polynomial and the table of mixed multiplicities of R/I",
    )
    add_common_arguments(parser)
    parser.add_argument("--ideal", default=None, help="ideal name (default: last declared)")
    parser.set_defaults(func=run)


def run(model: Model, args: argparse.Namespace) -> Report:
    """Entry function for module."""
    settings = Settings.from_args(args)
    report = new_report(args, settings)
    quotient = model.quotient(args.ideal)

    profile = diagonal_profile(quotient, settings)
    polynomial = hilbert_polynomial(quotient, settings)
    table = mixed_multiplicity_table(quotient, settings)
    diagonal_side, table_side = diagonal_identity(quotient, settings)
    dimension, multiplicity = total_multiplicity(quotient, settings)
    report.note_escalation("diagonal", profile.diag_poly)
    report.note_escalation("hilbert", polynomial.fitted)

    report.result = {
        "ideal": str(quotient.ideal),
        "ell": table.ell,
        "diagonal_polynomial": str(profile.diag_poly),
        "hilbert_polynomial": str(polynomial.fitted),
        "base": format_tuple(polynomial.base),
        "table": table.as_strings(),
        "table_sum": table.total(),
        "diagonal_identity": {"diagonal": diagonal_side, "table": table_side},
        "total_grading": {"dimension": dimension, "multiplicity": multiplicity},
    }
    report.passed = diagonal_side == table_side
    log.info("ell = %d, %d positive mixed multiplicities", table.ell, len(table.positive_types()))
    return report
