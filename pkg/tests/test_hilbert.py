import itertools
import math
import unittest

import sympy
from hypothesis import assume, given, settings

from common.hilbert import (
    brute_force_count,
    diagonal_identity,
    diagonal_profile,
    fitting_threshold,
    graded_count,
    hilbert_polynomial,
    irrelevant_saturation,
    mixed_multiplicity_table,
    polynomial_threshold,
    total_multiplicity,
    vanishing_test,
)
from common.mixedmult_helper import (
    DegenerateError,
    GuardError,
    ResourceError,
    Settings,
    ValidationError,
    componentwise_max,
)
from mixedmult_test_common import graded_quotients, quotient, ring

EXAMPLE37 = ring("x1 x2 x3", "y1 y2 y3", "z1 z2 z3")
EXAMPLE37_IDEAL = ("x2*y2*z1", "x1*y1*z1", "x1*y1*z2", "x1*y2*z1", "x1*y2*z2", "x2*y1*z1", "x2*y1*z2")


class GradedCountTest(unittest.TestCase):
    def test_origin_counts_one(self) -> None:
        self.assertEqual(graded_count(quotient(ring("x", "y"), "x*y"), (0, 0)), 1)

    def test_free_ring(self) -> None:
        q = quotient(ring("x1 x2 x3"))
        for n in range(6):
            self.assertEqual(graded_count(q, (n,)), math.comb(n + 2, 2))

    def test_negative_multidegree_is_zero(self) -> None:
        self.assertEqual(graded_count(quotient(ring("x", "y")), (-1, 2)), 0)

    def test_wrong_length(self) -> None:
        with self.assertRaises(ValidationError):
            graded_count(quotient(ring("x", "y")), (1,))

    def test_brute_force_guard(self) -> None:
        with self.assertRaises(ResourceError):
            brute_force_count(quotient(ring("x1 x2 x3")), (4,), Settings(enumeration_limit=3))

    def test_large_ideals_fall_back_to_enumeration(self) -> None:
        q = quotient(ring("x y"), "x^3", "x^2*y", "x*y^2", "y^3")
        self.assertEqual(graded_count(q, (2,), Settings(ie_generator_limit=1)), 3)
        self.assertEqual(graded_count(q, (3,), Settings(ie_generator_limit=1)), 0)

    def test_threshold(self) -> None:
        q = quotient(ring("x1 x2"), "x1^3")
        self.assertEqual(polynomial_threshold(q), (2,))
        self.assertEqual([graded_count(q, (n,)) for n in range(6)], [1, 2, 3, 3, 3, 3])

    @settings(max_examples=500)
    @given(graded_quotients())
    def test_counting_oracle(self, q) -> None:
        for n in itertools.product(range(5), repeat=q.spec.d):
            self.assertEqual(graded_count(q, n), brute_force_count(q, n))


class VanishingTest(unittest.TestCase):
    def test_product_of_blocks_vanishes(self) -> None:
        q = quotient(ring("x", "y"), "x*y")
        self.assertTrue(vanishing_test(q))
        with self.assertRaises(DegenerateError):
            diagonal_profile(q)

    def test_unit_vanishes(self) -> None:
        self.assertTrue(vanishing_test(quotient(ring("x", "y"), "1")))

    def test_free_ring_does_not_vanish(self) -> None:
        self.assertFalse(vanishing_test(quotient(ring("x", "y"))))

    @settings(max_examples=150)
    @given(graded_quotients(max_variables=5))
    def test_vanishing_matches_saturation(self, q) -> None:
        # eventually zero exactly when the saturation is the unit ideal
        self.assertEqual(vanishing_test(q), irrelevant_saturation(q).is_unit)

    @settings(max_examples=100)
    @given(graded_quotients(max_variables=4))
    def test_vanishing_matches_zero_counts(self, q) -> None:
        # past the threshold a grid of N + 1 points per axis determines the polynomial
        start = polynomial_threshold(q)
        reach = len(q.spec.variables)
        counts = [
            graded_count(q, tuple(b + o for b, o in zip(start, offset)))
            for offset in itertools.product(range(reach + 1), repeat=q.spec.d)
        ]
        self.assertEqual(vanishing_test(q), not any(counts))

    @settings(max_examples=100)
    @given(graded_quotients(max_variables=4))
    def test_torsion_vanishes_past_thresholds(self, q) -> None:
        saturated = q.with_ideal(irrelevant_saturation(q))
        start = componentwise_max([polynomial_threshold(q), polynomial_threshold(saturated)], q.spec.d)
        for offset in itertools.product(range(Settings().window + 1), repeat=q.spec.d):
            n = tuple(b + o for b, o in zip(start, offset))
            self.assertEqual(graded_count(q, n), graded_count(saturated, n))


class HilbertPolynomialTest(unittest.TestCase):
    def test_polynomial_ring(self) -> None:
        q = quotient(ring("X1 X2 X3"))
        table = mixed_multiplicity_table(q)
        self.assertEqual(table.ell, 3)
        self.assertEqual(table.entries, {(2,): 1})

    def test_product_of_projective_lines(self) -> None:
        q = quotient(ring("x1 x2", "y1 y2"))
        polynomial = hilbert_polynomial(q)
        n1, n2 = sympy.symbols("n1 n2")
        self.assertEqual(polynomial.poly.as_expr().expand(), sympy.expand((n1 + 1) * (n2 + 1)))
        table = mixed_multiplicity_table(q)
        self.assertEqual(table.entries, {(2, 0): 0, (1, 1): 1, (0, 2): 0})
        self.assertEqual(diagonal_identity(q), (2, 2))
        self.assertEqual(total_multiplicity(q), (4, 1))

    def test_hypersurface(self) -> None:
        # a bidegree (1,1) hypersurface in P1 x P1
        q = quotient(ring("x1 x2", "y1 y2"), "x1*y1")
        table = mixed_multiplicity_table(q)
        self.assertEqual(table.ell, 2)
        self.assertEqual(table.entries, {(1, 0): 1, (0, 1): 1})

    def test_example37_table(self) -> None:
        q = quotient(EXAMPLE37, *EXAMPLE37_IDEAL)
        table = mixed_multiplicity_table(q)
        self.assertEqual(table.ell, 5)
        self.assertEqual(hilbert_polynomial(q).fitted.total_degree, 4)
        self.assertEqual(sorted(table.positive_types()), [(0, 2, 2), (2, 0, 2), (2, 2, 0)])
        self.assertEqual(len(table.entries), 15)
        self.assertEqual(table.total(), 3)
        self.assertEqual(diagonal_identity(q), (18, 18))
        self.assertEqual(total_multiplicity(q), (7, 3))

    def test_high_powers_start_past_the_threshold(self) -> None:
        # counts only settle at degree 18, long after the generator degrees
        q = quotient(ring("x1 x2 x3"), "x1^10", "x2^10")
        profile = diagonal_profile(q)
        self.assertEqual(profile.ell, 1)
        self.assertEqual(profile.diag_poly.poly.as_expr(), 100)
        self.assertEqual(mixed_multiplicity_table(q).entries, {(0,): 100})
        self.assertEqual(total_multiplicity(q), (1, 100))

    def test_lcm_threshold_exceeds_generator_degrees(self) -> None:
        q = quotient(ring("x1 x2", "y1 y2"), "x1^6*x2^4", "x1^6*y2^8", "x1^8*y1^6")
        self.assertEqual(fitting_threshold(q, Settings()), (11, 13))
        polynomial = hilbert_polynomial(q)
        n2 = sympy.symbols("n2")
        self.assertEqual(polynomial.poly.as_expr().expand(), 6 * n2 + 6)
        self.assertEqual(polynomial.fitted((20, 20)), brute_force_count(q, (20, 20)))
        self.assertEqual(brute_force_count(q, (20, 20)), 126)
        self.assertEqual(mixed_multiplicity_table(q).entries, {(1, 0): 0, (0, 1): 6})

    def test_requested_base_is_raised_to_the_threshold(self) -> None:
        q = quotient(ring("x1 x2", "y1 y2"), "x1^6*x2^4", "x1^6*y2^8", "x1^8*y1^6")
        base = hilbert_polynomial(q, Settings(base=1)).base
        self.assertTrue(all(b >= t for b, t in zip(base, (11, 13))))

    def test_threshold_past_the_enumeration_limit(self) -> None:
        q = quotient(ring("x1 x2", "y1 y2"), "x1^6*x2^4", "x1^6*y2^8", "x1^8*y1^6")
        # the lcm of all generators bounds every subset lcm
        self.assertEqual(fitting_threshold(q, Settings(ie_generator_limit=1)), (11, 13))

    def test_guard_trips_on_small_max_base(self) -> None:
        with self.assertRaises(GuardError):
            diagonal_profile(quotient(ring("x y"), "x^5"), Settings(max_base=2))

    @settings(max_examples=100)
    @given(graded_quotients(max_variables=5))
    def test_diagonal_identity(self, q) -> None:
        assume(not vanishing_test(q))
        diagonal_side, table_side = diagonal_identity(q)
        self.assertEqual(diagonal_side, table_side)
        table = mixed_multiplicity_table(q)
        self.assertTrue(all(e >= 0 for e in table.entries.values()))
        self.assertEqual(diagonal_profile(q).ell, table.ell)


if __name__ == "__main__":
    unittest.main()
