import unittest

from mixedmult_test_common import MixedmultTestCase


class HilbertAtTest(MixedmultTestCase, unittest.TestCase):
    def __init__(self, method_name: str = "runTest") -> None:
        MixedmultTestCase.__init__(self, "hilbert-at")
        unittest.TestCase.__init__(self, method_name)

    def test_origin(self) -> None:
        report = self.run_test_command(["builtin:example37", "--at", "0,0,0"])
        self.assertEqual(report.result["count"], 1)
        self.assertFalse(report.result["vanishing"])

    def test_against_enumeration(self) -> None:
        # all seven generators have multidegree (1,1,1)
        result = self.run_json(["builtin:example37", "--at", "1,1,1", "--brute-force"])
        self.assertEqual(result["exit_code"], 0)
        self.assertEqual(result["status"], "PASS")
        self.assertEqual(result["result"]["free"], 27)
        self.assertEqual(result["result"]["count"], 20)
        self.assertEqual(result["result"]["brute_force"], 20)

    def test_polynomial_ring(self) -> None:
        report = self.run_test_command(["builtin:example36", "--t", "4", "--at", "3"])
        self.assertEqual(report.result["count"], 20)
        self.assertEqual(report.config["t"], 4)

    def test_wrong_length(self) -> None:
        result = self.run_json(["builtin:example37", "--at", "1,1"])
        self.assertEqual(result["exit_code"], 2)
        self.assertEqual(result["error"]["kind"], "validation")

    def test_unknown_ideal(self) -> None:
        result = self.run_json(["builtin:example37", "--at", "0,0,0", "--ideal", "J"])
        self.assertEqual(result["exit_code"], 2)
        self.assertIn("Unknown ideal 'J'", result["error"]["message"])

    def test_text_report(self) -> None:
        code, output = self.run_main(["builtin:example37", "--at", "0,0,0"])
        out = output.splitlines()
        self.assertEqual(code, 0)
        self.assertTrue(out[0].startswith("hilbert-at builtin:example37"))
        self.assertIn("count: 1", out)


if __name__ == "__main__":
    unittest.main()
