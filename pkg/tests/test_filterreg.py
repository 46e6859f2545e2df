import unittest

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from common.filterreg import (
    SearchStats,
    Verdict,
    colon_vanishes_on_window,
    cut,
    explore_maximal_lengths,
    find_sequence,
    is_filter_regular,
    length_drop_identity,
    positivity_certificate,
    saturated_diagonal_length,
    stabilization_index,
    verify_sequence,
)
from common.hilbert import GradedQuotient, diagonal_profile, mixed_multiplicity_table, vanishing_test
from common.mixedmult_helper import DegenerateError, PreconditionError, Settings, ValidationError
from mixedmult_test_common import graded_quotients, quotient, ring

EXAMPLE37 = quotient(
    ring("x1 x2 x3", "y1 y2 y3", "z1 z2 z3"),
    "x2*y2*z1",
    "x1*y1*z1",
    "x1*y1*z2",
    "x1*y2*z1",
    "x1*y2*z2",
    "x2*y1*z1",
    "x2*y1*z2",
)
SEQUENCE = ["x3", "x2", "y3", "y2"]
BLOCKED = ["x3", "x2", "x1"]


def polynomial_ring(t: int) -> GradedQuotient:
    return quotient(ring(" ".join(f"X{i}" for i in range(1, t + 1))))


class FilterRegularTest(unittest.TestCase):
    def test_free_variable_is_regular(self) -> None:
        self.assertTrue(is_filter_regular(EXAMPLE37, "x3"))
        self.assertFalse(is_filter_regular(EXAMPLE37, "x1"))

    def test_vanishing_quotient_is_rejected(self) -> None:
        with self.assertRaises(DegenerateError):
            is_filter_regular(quotient(ring("x", "y"), "x*y"), "x")

    def test_unknown_variable(self) -> None:
        with self.assertRaises(ValidationError):
            is_filter_regular(EXAMPLE37, "w")

    def test_cut_adds_variables(self) -> None:
        self.assertIn("x3", {str(g) for g in cut(EXAMPLE37, ["x3"]).ideal.generators})

    def test_sequence_verifies(self) -> None:
        certificate = verify_sequence(EXAMPLE37, SEQUENCE)
        self.assertEqual(certificate.type_vector, (2, 2, 0))
        self.assertEqual(certificate.variables, tuple(SEQUENCE))
        for n in range(8):
            self.assertEqual(saturated_diagonal_length(certificate.quotient, n), 1)
        self.assertEqual(stabilization_index(certificate.quotient), 0)

    def test_blocked_sequence_is_maximal(self) -> None:
        certificate = verify_sequence(EXAMPLE37, BLOCKED)
        self.assertTrue(vanishing_test(certificate.quotient))
        with self.assertRaises(PreconditionError):
            verify_sequence(EXAMPLE37, BLOCKED + ["y1"])

    def test_irregular_step_is_reported(self) -> None:
        with self.assertRaises(PreconditionError):
            verify_sequence(EXAMPLE37, ["x1"])

    def test_partial_cuts_keep_the_entry(self) -> None:
        for length, remaining in ((1, (1, 2, 0)), (2, (0, 2, 0)), (3, (0, 1, 0))):
            cut_quotient = verify_sequence(EXAMPLE37, SEQUENCE[:length]).quotient
            table = mixed_multiplicity_table(cut_quotient)
            self.assertEqual(table.ell, 5 - length)
            self.assertEqual(table[remaining], 1)

    def test_regular_cut_drops_ell(self) -> None:
        table = mixed_multiplicity_table(EXAMPLE37)
        cut_table = mixed_multiplicity_table(cut(EXAMPLE37, ["x3"]))
        self.assertEqual(cut_table.ell, table.ell - 1)
        for k, e in table.entries.items():
            if k[0] > 0 and e > 0:
                self.assertEqual(cut_table[(k[0] - 1,) + k[1:]], e)

    def test_length_drop_along_sequences(self) -> None:
        for variables in (SEQUENCE, BLOCKED):
            current = EXAMPLE37
            for var in variables:
                self.assertEqual(length_drop_identity(current, var), {})
                current = cut(current, [var])

    @settings(max_examples=200)
    @given(graded_quotients(max_variables=5), st.integers(0, 4))
    def test_saturation_test_matches_window_vanishing(self, q, position: int) -> None:
        assume(not vanishing_test(q))
        var = q.spec.variables[position % len(q.spec.variables)]
        self.assertEqual(is_filter_regular(q, var), colon_vanishes_on_window(q, var))

    @settings(max_examples=60)
    @given(graded_quotients(max_variables=5), st.integers(0, 4))
    def test_length_drop_for_regular_variables(self, q, position: int) -> None:
        assume(not vanishing_test(q))
        var = q.spec.variables[position % len(q.spec.variables)]
        assume(is_filter_regular(q, var))
        self.assertEqual(length_drop_identity(q, var), {})


class SearchTest(unittest.TestCase):
    def test_find_sequence_of_type(self) -> None:
        certificate = find_sequence(EXAMPLE37, (2, 2, 0))
        self.assertIsNotNone(certificate)
        self.assertEqual(certificate.type_vector, (2, 2, 0))
        verify_sequence(EXAMPLE37, certificate.variables)

    def test_type_too_long(self) -> None:
        with self.assertRaises(PreconditionError):
            find_sequence(EXAMPLE37, (3, 2, 0))

    def test_budget_exhaustion(self) -> None:
        stats = SearchStats(budget=1)
        self.assertIsNone(find_sequence(EXAMPLE37, (2, 2, 0), stats=stats))
        self.assertTrue(stats.exhausted)

    def test_maximal_lengths(self) -> None:
        lengths = explore_maximal_lengths(EXAMPLE37)
        self.assertEqual(max(lengths), 5)
        self.assertIn(3, lengths)


class PositivityTest(unittest.TestCase):
    def test_positive_entry(self) -> None:
        report = positivity_certificate(EXAMPLE37, (2, 2, 0))
        self.assertEqual(report.verdict, Verdict.POSITIVE)
        self.assertEqual(report.coefficient_e, 1)
        self.assertEqual(report.pipeline_e, 1)

    def test_zero_entry_with_witness(self) -> None:
        report = positivity_certificate(EXAMPLE37, (4, 0, 0))
        self.assertEqual(report.coefficient_e, 0)
        self.assertEqual(report.verdict, Verdict.ZERO_WITH_MAXIMAL_SEQUENCE_WITNESS)
        self.assertTrue(vanishing_test(report.witness.quotient))

    def test_zero_entry(self) -> None:
        report = positivity_certificate(EXAMPLE37, (2, 1, 1))
        self.assertEqual(report.coefficient_e, 0)
        self.assertIn(report.verdict, (Verdict.ZERO, Verdict.ZERO_WITH_MAXIMAL_SEQUENCE_WITNESS))

    def test_wrong_total(self) -> None:
        with self.assertRaises(PreconditionError):
            positivity_certificate(EXAMPLE37, (1, 1, 1))

    def test_polynomial_rings(self) -> None:
        for t in (2, 3, 4):
            q = polynomial_ring(t)
            report = positivity_certificate(q, (t - 1,))
            self.assertEqual(report.verdict, Verdict.POSITIVE)
            self.assertEqual(report.coefficient_e, 1)
            self.assertEqual(report.pipeline_e, 1)
            self.assertEqual(report.stabilization_index, 0)
            current = q
            for var in report.certificate.variables:
                self.assertEqual(length_drop_identity(current, var), {})
                current = cut(current, [var])

    def test_stabilization_needs_constant_diagonal(self) -> None:
        with self.assertRaises(PreconditionError):
            stabilization_index(polynomial_ring(2))

    def test_positive_entry_outside_the_first_block(self) -> None:
        report = positivity_certificate(EXAMPLE37, (0, 2, 2), Settings(budget=10000))
        self.assertEqual(report.verdict, Verdict.POSITIVE)
        self.assertEqual(diagonal_profile(report.certificate.quotient).ell, 1)


if __name__ == "__main__":
    unittest.main()
