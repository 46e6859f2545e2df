import unittest

from mixedmult_test_common import MixedmultTestCase


class MaximalLengthsTest(MixedmultTestCase, unittest.TestCase):
    def __init__(self, method_name: str = "runTest") -> None:
        MixedmultTestCase.__init__(self, "maximal-lengths")
        unittest.TestCase.__init__(self, method_name)

    def test_example37(self) -> None:
        report = self.run_test_command(["builtin:example37"])
        self.assertEqual(report.result["max"], 5)
        self.assertIn(3, report.result["lengths"])
        self.assertTrue(report.result["complete"])

    def test_small_budget(self) -> None:
        result = self.run_json(["builtin:example37", "--budget", "5"])
        self.assertFalse(result["result"]["complete"])
        self.assertEqual(len(result["guards"]), 1)

    def test_polynomial_ring(self) -> None:
        report = self.run_test_command(["builtin:example36", "--t", "3"])
        self.assertEqual(report.result["lengths"], [3])


if __name__ == "__main__":
    unittest.main()
