import json
import os
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from .config import load_config
from .exceptions import ConfigError
from .rendering import render_text


def run(name, *args):
    out = StringIO()
    call_command(name, *args, stdout=out)
    return out.getvalue()


def run_json(name, *args):
    return json.loads(run(name, *args, "--format", "json"))


class ConfigFileMixin:
    def write_config(self, text):
        handle, path = tempfile.mkstemp(suffix=".env")
        with os.fdopen(handle, "w") as config_file:
            config_file.write(text)
        self.addCleanup(os.remove, path)
        return path


class ConfigTests(ConfigFileMixin, SimpleTestCase):
    def test_defaults(self):
        config = load_config()
        self.assertEqual(config.max_level, 8)
        self.assertEqual(config.output_format, "text")
        self.assertEqual(config.growth_window, (50, 200))

    def test_file_overrides(self):
        path = self.write_config("ALGEBRA_MAX_LEVEL=3\nALGEBRA_OUTPUT_FORMAT=json\n")
        config = load_config(path)
        self.assertEqual(config.max_level, 3)
        self.assertEqual(config.output_format, "json")
        self.assertEqual(config.series_order, 50)
        # overrides stay private to the run
        self.assertNotIn("ALGEBRA_MAX_LEVEL", os.environ)

    def test_invalid_values(self):
        with self.assertRaises(ConfigError):
            load_config(self.write_config("ALGEBRA_OUTPUT_FORMAT=xml\n"))
        with self.assertRaises(ConfigError):
            load_config(self.write_config("ALGEBRA_MAX_LEVEL=lots\n"))
        with self.assertRaises(ConfigError):
            load_config(self.write_config("ALGEBRA_MAX_LEVEL=0\n"))
        with self.assertRaises(ConfigError):
            load_config(self.write_config("ALGEBRA_SERIES_ORDER=0\n"))
        with self.assertRaises(ConfigError):
            load_config("/nonexistent/algebra.env")


class VirasoroCommandTests(ConfigFileMixin, SimpleTestCase):
    def test_gram(self):
        data = run_json("gram", "--c", "1", "--h", "0", "--level", "1")
        self.assertEqual(data["basis"], ["L(-1)v"])
        self.assertEqual(data["matrix"], [["0"]])
        self.assertEqual(data["rank"], 0)

    def test_gram_text(self):
        out = run("gram", "--c", "1", "--h", "1/2", "--level", "1")
        self.assertIn("det = 1", out)
        self.assertIn("rank = 1", out)

    def test_level_out_of_range(self):
        with self.assertRaises(CommandError) as ctx:
            run("gram", "--c", "1", "--h", "0", "--level", "9")
        self.assertEqual(ctx.exception.returncode, 2)

    def test_config_lowers_max_level(self):
        path = self.write_config("ALGEBRA_MAX_LEVEL=2\n")
        with self.assertRaises(CommandError) as ctx:
            run("gram", "--c", "1", "--h", "0", "--level", "3", "--config", path)
        self.assertEqual(ctx.exception.returncode, 2)

    def test_bad_config_file(self):
        path = self.write_config("ALGEBRA_WEIGHT_CAP=0\n")
        with self.assertRaises(CommandError) as ctx:
            run("gram", "--c", "1", "--h", "0", "--level", "1", "--config", path)
        self.assertEqual(ctx.exception.returncode, 2)

    def test_singvec(self):
        data = run_json("singvec", "--c", "1", "--h", "0", "--level", "1")
        self.assertTrue(data["found"])
        self.assertEqual([t["word"] for t in data["terms"]], ["L(-1)v"])
        data = run_json("singvec", "--c", "1", "--h", "1/2", "--level", "1")
        self.assertFalse(data["found"])


class ZhuCommandTests(SimpleTestCase):
    def test_fusion(self):
        out = run("fusion", "--m", "1", "--n", "1", "--k", "1")
        self.assertIn("dim = 1", out)
        self.assertEqual(run_json("fusion", "--m", "1", "--n", "1", "--k", "3")["dim"], 0)

    def test_generic_fusion(self):
        self.assertEqual(run_json("fusion", "--m", "1", "--n", "2", "--k", "2", "--generic")["dim"], 1)

    def test_fusion_table(self):
        data = run_json("fusion-table", "--max-m", "1", "--max-n", "1", "--max-k", "2")
        self.assertEqual(len(data["entries"]), 12)
        cells = {(e["m"], e["n"], e["k"]): e["dim"] for e in data["entries"]}
        self.assertEqual(cells[(1, 1, 2)], 1)
        self.assertEqual(cells[(0, 1, 2)], 0)

    def test_bimodule_routes_agree(self):
        polynomials = {
            route: run_json("bimodule", "--r", "2", "--route", route)["polynomial"]
            for route in ("closed", "singular", "vandermonde")
        }
        self.assertEqual(len(set(polynomials.values())), 1)
        self.assertEqual(run_json("bimodule", "--r", "1", "--route", "singular")["scalar"], "2")


class SeriesCommandTests(SimpleTestCase):
    def test_eta(self):
        data = run_json("char", "--kind", "eta", "--order", "5")
        self.assertEqual(data["series"]["offset"], "1/24")
        self.assertEqual(data["series"]["coefficients"], ["1", "-1", "-1", "0", "0", "1"])

    def test_irreducible_needs_weight(self):
        with self.assertRaises(CommandError) as ctx:
            run("char", "--kind", "irr")
        self.assertEqual(ctx.exception.returncode, 2)

    def test_decomposition(self):
        data = run_json("decomp-check", "--order", "12")
        self.assertTrue(data["holds"])
        self.assertEqual(set(data["residual"]), {"0"})

    def test_growth(self):
        self.assertEqual(run_json("growth", "--series", "lattice")["verdict"], "polynomially-bounded")
        data = run_json("growth", "--series", "partition-gap")
        self.assertEqual(data["verdict"], "superpolynomial-evidence")
        self.assertEqual(data["window"], [50, 200])

    def test_older_series_name(self):
        data = run_json("growth", "--series", "lemma52")
        self.assertEqual(data["series"], "lemma52")
        self.assertEqual(data["verdict"], "superpolynomial-evidence")

    def test_negative_order(self):
        for name, args in (("char", ("--kind", "eta")), ("decomp-check", ()), ("growth", ("--series", "lattice"))):
            with self.assertRaises(CommandError) as ctx:
                run(name, *args, "--order", "-1")
            self.assertEqual(ctx.exception.returncode, 2, name)

    def test_json_renders_back_to_text(self):
        for name, args in (
            ("char", ("--kind", "irr", "--h", "1", "--order", "6")),
            ("decomp-check", ("--order", "6")),
            ("fusion", ("--m", "2", "--n", "1", "--k", "3")),
        ):
            text = run(name, *args)
            self.assertEqual(render_text(name, run_json(name, *args)), text)


class NilpotentCommandTests(ConfigFileMixin, SimpleTestCase):
    def test_hw_vector(self):
        out = run("verify-nilpotent", "--step", "hw-vector")
        self.assertIn("a = 15/49 (expected 15/49) OK", out)
        self.assertIn("b = 220/49 (expected 220/49) OK", out)
        self.assertIn("(y_3 v, u) = 60/49", out)
        self.assertTrue(out.endswith("OK\n"))

    def test_lemma_numbers(self):
        out = run("verify-section5", "--lemma", "5.6")
        self.assertEqual(out, run("verify-nilpotent", "--step", "hw-vector"))
        self.assertIn("a = 15/49 (expected 15/49) OK", out)
        data = run_json("verify-section5", "--lemma", "5.5")
        self.assertEqual([step["step"] for step in data["steps"]], ["u-norm"])
        self.assertTrue(data["ok"])

    def test_assumed_facts(self):
        data = run_json("verify-nilpotent", "--step", "u-norm", "--assume")
        self.assertTrue(data["ok"])

    def test_contradiction(self):
        data = run_json("contradiction", "--max-n", "2")
        self.assertEqual(data["verdict"], "contradiction-established")
        self.assertTrue(all(step["holds"] for step in data["steps"]))
        text = run("contradiction", "--max-n", "2")
        self.assertIn("verdict: contradiction-established", text)

    def test_rewrite_budget_exhausted(self):
        path = self.write_config("ALGEBRA_REWRITE_BUDGET=3\n")
        with self.assertRaises(CommandError) as ctx:
            run("verify-nilpotent", "--step", "annihilation", "--config", path)
        self.assertEqual(ctx.exception.returncode, 1)
