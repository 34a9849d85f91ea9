import json
import os
import tempfile
import unittest

from typer.testing import CliRunner

from src.cli import WORKERS_OPTION, app, mc_app

QUIET = ["--log-level", "ERROR"]


class TestCli(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def invoke(self, *args):
        return self.runner.invoke(app, QUIET + list(args))

    def result_of(self, *args):
        result = self.invoke(*args)
        self.assertEqual(result.exit_code, 0, result.output)
        document = json.loads(result.output)
        self.assertIn("version", document)
        self.assertEqual(document["config"]["subcommand"], args[0] if args[0] != "mc" else f"mc {args[1]}")
        return document["result"]

    def test_wg(self):
        self.assertEqual(self.result_of("wg", "--mu", "1", "--N", "5")["value"], "1/5")

    def test_hurwitz(self):
        result = self.result_of("hurwitz", "--profiles", "2;1,1;2")
        self.assertEqual(result["value"], "1/2")
        self.assertEqual(result["degree"], 2)

    def test_oracle(self):
        result = self.result_of("oracle", "--kappa", "2", "--mu", "1,1", "--bricks", "1")
        self.assertEqual(result["raw_count"], 1)
        self.assertEqual(result["count_over_factorial"], "1/2")

    def test_schur(self):
        self.assertEqual(self.result_of("schur", "--lambda", "2", "--p", "1:1,2:1/2")["value"], "3/4")

    def test_uintegral(self):
        result = self.result_of("uintegral", "--a", "1,1", "--b", "1,1", "--ap", "1,1", "--bp", "1,1", "--N", "3")
        self.assertEqual(result["value"], "1/6")

    def test_partitions(self):
        result = self.result_of("partitions", "--d", "4")
        self.assertEqual(result["count"], 5)
        self.assertEqual(result["partitions"][1]["partition"], "3,1")

    def test_series(self):
        result = self.result_of("series", "--n", "1", "--N", "4", "--max-degree", "2", "--repr", "moment")
        self.assertEqual([c["value"] for c in result["coefficients"]], ["8", "8"])
        self.assertEqual(result["model"]["N"], 4)

    def test_series_with_calibration(self):
        result = self.result_of("series", "--n", "2", "--N", "4", "--max-degree", "2", "--repr", "hurwitz", "--calibrate", "1")
        self.assertEqual(result["calibration"]["offsets"], {"2,1": -2})
        self.assertEqual(result["coefficients"][0]["value"], "1/2")

    def test_series_csv(self):
        result = self.invoke("series", "--N", "4", "--max-degree", "2", "--repr", "both", "--format", "csv")
        self.assertEqual(result.exit_code, 0, result.output)
        lines = result.output.strip().splitlines()
        self.assertEqual(lines[0], "degree,mu,kappa,repr,value")
        self.assertEqual(len(lines), 1 + 4)

    def test_series_json_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "series.json")
            result = self.invoke("series", "--N", "4", "--max-degree", "2", "--json", path)
            self.assertEqual(result.exit_code, 0, result.output)
            with open(path) as f:
                document = json.load(f)
            self.assertEqual(document["config"]["output"], path)

    def test_calibrate(self):
        result = self.result_of("calibrate", "--n", "1", "--max-k", "1")
        self.assertEqual(result["length_weight"], 1)
        self.assertFalse(result["hypothesis_confirmed"])

    def test_mc_moment(self):
        result = self.result_of("mc", "moment", "--n", "1", "--N", "3", "--mu", "2", "--samples", "4000", "--seed", "1", "--workers", "1")
        self.assertEqual(result["exact_rational"], "3")
        self.assertTrue(result["within_4se"])
        self.assertEqual(result["samples"], 4000)

    def test_exit_codes(self):
        self.assertEqual(self.invoke("hurwitz", "--profiles", "2;3").exit_code, 2)
        self.assertEqual(self.invoke("wg", "--mu", "1,1,1", "--N", "2").exit_code, 3)
        self.assertEqual(self.invoke("series", "--N", "2", "--max-degree", "4", "--repr", "hurwitz").exit_code, 3)
        self.assertEqual(self.invoke("oracle", "--profiles", "9;9", "--cap", "8").exit_code, 3)
        self.assertEqual(self.invoke("normal", "--n", "1", "--k", "1", "--N", "4", "--strict").exit_code, 4)

    def test_help_explains_normal_second_moment_and_workers(self):
        self.assertIn("N + 1", mc_app.info.help)
        self.assertIn("exact lambda sums ignore it", WORKERS_OPTION.help)

    def test_verify(self):
        result = self.invoke("verify", "characters", "--format", "json")
        self.assertEqual(result.exit_code, 0, result.output)
        report = json.loads(result.output)["result"]
        self.assertTrue(report["passed"])
        self.assertEqual([s["suite"] for s in report["suites"]], ["characters"])

    def test_verify_unknown_suite(self):
        self.assertEqual(self.invoke("verify", "nope").exit_code, 2)


if __name__ == "__main__":
    unittest.main()
