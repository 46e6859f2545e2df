import unittest
from typing import List

from mixedmult_test_common import MixedmultTestCase


class VerifyTest(MixedmultTestCase, unittest.TestCase):
    def __init__(self, method_name: str = "runTest") -> None:
        MixedmultTestCase.__init__(self, "verify")
        unittest.TestCase.__init__(self, method_name)

    def assert_passes(self, arguments: List[str]) -> None:
        result = self.run_json(arguments)
        failed = [check["name"] for check in result["result"]["checks"] if not check["ok"]]
        self.assertEqual(failed, [])
        self.assertEqual(result["status"], "PASS")
        self.assertEqual(result["exit_code"], 0)

    def test_example37(self) -> None:
        self.assert_passes(["builtin:example37"])

    def test_example36(self) -> None:
        for t in ("2", "3", "4"):
            self.assert_passes(["builtin:example36", "--t", t])

    def test_ideals(self) -> None:
        self.assert_passes(["builtin:ideals"])

    def test_example36_config(self) -> None:
        report = self.run_test_command(["builtin:example36", "--t", "3"])
        self.assertEqual(report.config["t"], 3)
        names = [check["name"] for check in report.result["checks"]]
        self.assertIn("positivity pipeline", names)


if __name__ == "__main__":
    unittest.main()
