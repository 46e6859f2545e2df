import unittest

from mixedmult_test_common import MixedmultTestCase


class Theorem45Test(MixedmultTestCase, unittest.TestCase):
    def __init__(self, method_name: str = "runTest") -> None:
        MixedmultTestCase.__init__(self, "theorem45")
        unittest.TestCase.__init__(self, method_name)

    def test_single_member(self) -> None:
        result = self.run_json(["builtin:ideals", "--system", "S1", "--type", "0,1", "--seq", "x"])
        self.assertEqual(result["exit_code"], 0)
        self.assertEqual(result["result"]["sequence"], ["x:1"])
        self.assertEqual(result["result"]["saturated_ideal"], ["x"])
        self.assertEqual(result["result"]["table_entry"], 1)
        self.assertEqual(result["result"]["samuel_multiplicity"], 1)
        self.assertTrue(result["result"]["holds"])

    def test_empty_sequence(self) -> None:
        report = self.run_test_command(["builtin:ideals", "--system", "S2", "--type", "1,0"])
        self.assertTrue(report.passed)
        self.assertEqual(report.result["sequence"], [])
        self.assertEqual(report.result["dimension"], 2)

    def test_zero_entry(self) -> None:
        result = self.run_json(["builtin:ideals", "--system", "S2", "--type", "0,1", "--seq", "x:1"])
        self.assertEqual(result["exit_code"], 2)
        self.assertEqual(result["error"]["kind"], "precondition")


if __name__ == "__main__":
    unittest.main()
