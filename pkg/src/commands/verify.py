"""End-to-end checks of a model against exact facts and cross-checking oracles"""

import argparse
import itertools
import logging
from typing import Any, Dict, List

from common import fixtures
from common.filterreg import (
    Verdict,
    explore_maximal_lengths,
    length_drop_identity,
    positivity_certificate,
    saturated_diagonal_length,
    stabilization_index,
    verify_sequence,
)
from common.hilbert import (
    GradedQuotient,
    brute_force_count,
    diagonal_identity,
    graded_count,
    hilbert_polynomial,
    mixed_multiplicity_table,
    total_multiplicity,
    vanishing_test,
)
from common.idealmm import bhattacharya_table, direct_colength, is_m_primary, t_length, theorem45_check
from common.mixedmult_helper import Settings, add_common_arguments, format_tuple
from common.model import Model
from common.report import Report, new_report

log = logging.getLogger(__name__)


def add_subparser(subparsers: argparse._SubParsersAction) -> None:
    """Register parser and its arguments as subparser."""
    parser = subparsers.add_parser(
        "verify",
        help="Run the end-to-end checks of a builtin fixture or a model file",
    )
    add_common_arguments(parser)
    parser.set_defaults(func=run)


class Checks:
    def __init__(self) -> None:
        self.entries: List[Dict[str, Any]] = []

    def add(self, name: str, expected: Any, actual: Any) -> None:
        ok = expected == actual
        if not ok:
            log.error("Check '%s' failed: expected %s, got %s", name, expected, actual)
        self.entries.append({"name": name, "expected": expected, "actual": actual, "ok": ok})

    @property
    def passed(self) -> bool:
        return all(entry["ok"] for entry in self.entries)


def check_counting_oracle(checks: Checks, quotient: GradedQuotient, settings: Settings, reach: int = 2) -> None:
    mismatches = [
        format_tuple(n)
        for n in itertools.product(range(reach + 1), repeat=quotient.spec.d)
        if graded_count(quotient, n, settings) != brute_force_count(quotient, n, settings)
    ]
    checks.add(f"counting oracle on [0..{reach}]^d", [], mismatches)


def check_sequence_steps(checks: Checks, quotient: GradedQuotient, variables: List[str], settings: Settings) -> None:
    """Each step of the sequence passes the length drop identity on its validated window"""
    current = quotient
    for position, var in enumerate(variables, start=1):
        failures = length_drop_identity(current, var, settings)
        actual = {format_tuple(n): list(sides) for n, sides in failures.items()}
        checks.add(f"length drop at step {position} of {format_tuple(variables)} ({var})", {}, actual)
        current = verify_sequence(current, [var]).quotient


def check_example37(checks: Checks, quotient: GradedQuotient, settings: Settings) -> None:
    table = mixed_multiplicity_table(quotient, settings)
    polynomial = hilbert_polynomial(quotient, settings)
    checks.add("ell", fixtures.EXAMPLE37_ELL, table.ell)
    checks.add("total degree of the Hilbert polynomial", fixtures.EXAMPLE37_ELL - 1, polynomial.fitted.total_degree)
    expected = {format_tuple(k): fixtures.EXAMPLE37_TABLE.get(k, 0) for k in table.entries}
    checks.add("mixed multiplicity table", expected, table.as_strings())
    checks.add(
        "total grading dimension and multiplicity",
        [fixtures.EXAMPLE37_DIMENSION, fixtures.EXAMPLE37_MULTIPLICITY],
        list(total_multiplicity(quotient, settings)),
    )
    checks.add("table sum equals total multiplicity", fixtures.EXAMPLE37_MULTIPLICITY, table.total())
    diagonal_side, table_side = diagonal_identity(quotient, settings)
    checks.add("diagonal identity", diagonal_side, table_side)

    certificate = verify_sequence(quotient, fixtures.EXAMPLE37_SEQUENCE)
    checks.add("sequence type", "2,2,0", format_tuple(certificate.type_vector))
    reach = stabilization_index(certificate.quotient, settings) + settings.window
    lengths = [saturated_diagonal_length(certificate.quotient, n, settings) for n in range(reach + 1)]
    checks.add("saturated diagonal length of the cut", [1] * (reach + 1), lengths)
    outcome = positivity_certificate(quotient, (2, 2, 0), settings)
    checks.add("positivity of 2,2,0", [Verdict.POSITIVE.value, 1], [outcome.verdict.value, outcome.pipeline_e])

    blocked = verify_sequence(quotient, fixtures.EXAMPLE37_BLOCKED_SEQUENCE)
    checks.add("blocked sequence is maximal", True, vanishing_test(blocked.quotient))
    outcome = positivity_certificate(quotient, (4, 0, 0), settings)
    checks.add("positivity of 4,0,0", Verdict.ZERO_WITH_MAXIMAL_SEQUENCE_WITNESS.value, outcome.verdict.value)

    check_sequence_steps(checks, quotient, list(fixtures.EXAMPLE37_SEQUENCE), settings)
    check_sequence_steps(checks, quotient, list(fixtures.EXAMPLE37_BLOCKED_SEQUENCE), settings)
    lengths = explore_maximal_lengths(quotient, settings)
    checks.add("longest maximal sequence", fixtures.EXAMPLE37_MAX_LENGTH, max(lengths, default=None))
    checks.add("blocked length is maximal", True, len(fixtures.EXAMPLE37_BLOCKED_SEQUENCE) in lengths)
    check_counting_oracle(checks, quotient, settings)


def check_example36(checks: Checks, quotient: GradedQuotient, settings: Settings) -> None:
    t = len(quotient.spec.variables)
    table = mixed_multiplicity_table(quotient, settings)
    checks.add("ell", t, table.ell)
    checks.add(f"e({t - 1})", 1, table[(t - 1,)])
    outcome = positivity_certificate(quotient, (t - 1,), settings)
    checks.add(
        "positivity pipeline",
        [Verdict.POSITIVE.value, 1, 0],
        [outcome.verdict.value, outcome.pipeline_e, outcome.stabilization_index],
    )
    diagonal_side, table_side = diagonal_identity(quotient, settings)
    checks.add("diagonal identity", diagonal_side, table_side)
    if outcome.certificate is not None:
        check_sequence_steps(checks, quotient, list(outcome.certificate.variables), settings)
    check_counting_oracle(checks, quotient, settings, reach=4)


def check_quotient(checks: Checks, quotient: GradedQuotient, settings: Settings) -> None:
    check_counting_oracle(checks, quotient, settings)
    if vanishing_test(quotient):
        checks.add("quotient vanishes eventually", True, True)
        return
    diagonal_side, table_side = diagonal_identity(quotient, settings)
    checks.add("diagonal identity", diagonal_side, table_side)
    table = mixed_multiplicity_table(quotient, settings)
    for k in table.entries:
        outcome = positivity_certificate(quotient, k, settings)
        checks.add(
            f"positivity pipeline of {format_tuple(k)}",
            True,
            outcome.verdict != Verdict.POSITIVE or outcome.pipeline_e == outcome.coefficient_e,
        )


def check_systems(checks: Checks, model: Model, settings: Settings) -> None:
    for name, system in model.systems.items():
        table = bhattacharya_table(system, settings)
        if name in fixtures.IDEALS_TABLES and model.source == "builtin:ideals":
            expected = {format_tuple(k): e for k, e in fixtures.IDEALS_TABLES[name].items()}
            checks.add(f"{name} table", expected, table.as_strings())
            type_vector, sequence = fixtures.IDEALS_THEOREM45[name]
            outcome = theorem45_check(system, type_vector, sequence, settings)
            checks.add(f"{name} saturated sequence multiplicity", outcome.table_entry, outcome.samuel_multiplicity)
        if all(is_m_primary(ideal, system.variables) for ideal in system.ideals):
            base = table.polynomial.base
            failures = [
                format_tuple(v)
                for v in itertools.product(*(range(b, b + 2) for b in base))
                if direct_colength(system, (v[0] + 1,) + v[1:], settings) - direct_colength(system, v, settings)
                != t_length(system, v, settings)
            ]
            checks.add(f"{name} telescoping identity", [], failures)


def run(model: Model, args: argparse.Namespace) -> Report:
    """Entry function for module."""
    settings = Settings.from_args(args)
    report = new_report(args, settings)
    checks = Checks()
    if model.source == "builtin:example37":
        check_example37(checks, model.quotient(), settings)
    elif model.source == "builtin:example36":
        check_example36(checks, model.quotient(), settings)
    else:
        for name in model.ideals:
            log.info("Checking ideal %s", name)
            check_quotient(checks, model.quotient(name), settings)
    check_systems(checks, model, settings)

    report.result = {"checks": checks.entries, "failed": sum(1 for entry in checks.entries if not entry["ok"])}
    report.passed = checks.passed
    return report
