"""End-to-end checks of the polarcremona binary: exit codes, reports, schema."""

import json
import os
import re
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BINARY = os.environ.get("POLARCREMONA", "polarcremona")
SCHEMA_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "report.schema.json")

E6 = "w*x^2+x*z^2+y^3"
A1A5 = "w*x*z+y^2*z+x^3-x^2*z"


def run(*args):
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True, timeout=600)
    return proc.returncode, proc.stdout, proc.stderr


def run_json(*args):
    code, out, err = run("--format", "json", *args)
    if code != 0:
        raise AssertionError(f"exit {code}: {err}")
    return json.loads(out)


class Schema:
    validator = None

    @classmethod
    def check(cls, report):
        if cls.validator is None:
            with open(SCHEMA_PATH) as fh:
                schema = json.load(fh)
            jsonschema.Draft202012Validator.check_schema(schema)
            cls.validator = jsonschema.Draft202012Validator(schema)
        cls.validator.validate(report)


class ExitCodes(unittest.TestCase):
    def test_success(self):
        self.assertEqual(run("analyze", "x*y*z")[0], 0)

    def test_input_errors(self):
        for args in (["analyze", "x*y+"], ["analyze", "x*w"], ["analyze", "x^2+y"], ["analyze", "2x"],
                     ["analyze", "0"], ["--format", "xml", "analyze", "x"], ["monodromy", "--weights", "2/5,1/3"],
                     ["bounds", "--degree", "3", "--dim", "3", "--mu0", "x"], ["catalog", "run", "no-such-entry"],
                     ["analyze", "x^13+y^13"], ["--vars", "a,b,c,d,e,f,g,h,i", "analyze", "a*b"]):
            with self.subTest(args=args):
                code, _, err = run(*args)
                self.assertEqual(code, 1, err)

    def test_syntax_error_names_position(self):
        code, _, err = run("analyze", "x*y+")
        self.assertEqual(code, 1)
        self.assertIn("position 4", err)

    def test_hypothesis_violation(self):
        code, _, err = run("analyze", "x^2*y", "--vars", "x,y,z")
        self.assertEqual(code, 2)
        self.assertIn("singular locus has dimension 1", err)

    def test_formula_gate(self):
        self.assertEqual(run("polar-degree", "x^2*y", "--method", "formula")[0], 2)
        self.assertEqual(run("polar-degree", "x^2*y", "--method", "tame")[0], 2)
        # The oracle needs no hypotheses.
        self.assertEqual(run("polar-degree", "x^2*y", "--method", "oracle")[0], 0)

    def test_resource_limit(self):
        code, _, err = run("--max-basis", "2", "analyze", E6, "--vars", "w,x,y,z")
        self.assertEqual(code, 2)
        self.assertIn("ResourceLimit", err)


class Analyze(unittest.TestCase):
    def test_triangle(self):
        r = run_json("analyze", "x*y*z", "--vars", "x,y,z")
        Schema.check(r)
        self.assertEqual(r["d_f"]["consolidated"], 1)
        self.assertEqual(r["conjecture_status"], "out_of_hypothesis")
        self.assertEqual(r["mu_V"], 3)
        self.assertEqual(r["mu0_V"], 3)
        self.assertEqual(r["delta_V"]["divisor"], {"1": 3})
        rows = r["bounds"]["thm_t4"]["rows"]
        self.assertEqual(rows[0]["k"], 1)
        self.assertEqual(rows[0]["mult_V"], 3)
        self.assertIsNone(r["timings"])

    def test_e6_with_declaration(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
            json.dump([{"point": ["1", "0", "0", "0"], "bp_exponents": [3, 4, 2], "label": "E6"}], fh)
            path = fh.name
        try:
            r = run_json("--singular-data", path, "analyze", E6, "--vars", "w,x,y,z")
        finally:
            os.unlink(path)
        Schema.check(r)
        self.assertEqual(r["d_f"]["consolidated"], 2)
        for m in ("formula", "fiber_oracle", "tame_split"):
            self.assertEqual(r["d_f"][m]["value"], 2)
        self.assertEqual(r["singular_points"][0]["mu"], 6)
        self.assertEqual(r["mu0_V"], 0)
        p1 = r["bounds"]["prop_p1"]
        self.assertTrue(p1["applicable"])
        self.assertEqual(p1["lhs"], 2)
        self.assertEqual(p1["rhs"], 2)
        self.assertTrue(r["bounds"]["cor_37"]["certified"])
        self.assertEqual(r["conjecture_status"], "consistent")

    def test_bad_declaration(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
            fh.write("{not json")
            path = fh.name
        try:
            self.assertEqual(run("--singular-data", path, "analyze", "x*y*z")[0], 1)
        finally:
            os.unlink(path)

    def test_timings_are_opt_in(self):
        r = run_json("--timings", "analyze", "x*y*z")
        Schema.check(r)
        self.assertIsInstance(r["timings"], dict)

    def test_byte_identical(self):
        for args in (["analyze", A1A5, "--vars", "w,x,y,z"], ["--format", "json", "analyze", "x*(x*z-y^2)"],
                     ["--format", "json", "--modp", "dual", "polar-degree", "x^3+y^3+z^3"]):
            with self.subTest(args=args):
                first = run(*args)
                second = run(*args)
                self.assertEqual(first[0], 0)
                self.assertEqual(first[1], second[1])

    def test_seed_changes_targets_not_values(self):
        a = run_json("--seed", "1", "analyze", "x*y*z")
        b = run_json("--seed", "2", "analyze", "x*y*z")
        self.assertNotEqual(a["d_f"]["fiber_oracle"]["trials"][0]["target"],
                            b["d_f"]["fiber_oracle"]["trials"][0]["target"])
        self.assertEqual(a["d_f"]["consolidated"], b["d_f"]["consolidated"])

    def test_text_and_json_agree(self):
        for poly, vars_ in (("x*y*z", "x,y,z"), (E6, "w,x,y,z"), ("x^3+y^3+z^3", "x,y,z"),
                            ("y^2*z-x^3", "x,y,z")):
            with self.subTest(poly=poly):
                code, text, _ = run("analyze", poly, "--vars", vars_)
                self.assertEqual(code, 0)
                r = run_json("analyze", poly, "--vars", vars_)
                fields = dict(re.findall(r"^(d\(f\)[a-z ]*?|mu\(V\))\s+(\S+)$", text, re.M))
                self.assertEqual(fields["d(f) formula"], str(r["d_f"]["formula"]["value"]))
                self.assertEqual(fields["d(f) fiber oracle"], str(r["d_f"]["fiber_oracle"]["value"]))
                self.assertEqual(fields["d(f) tame split"], str(r["d_f"]["tame_split"]["value"]))
                self.assertEqual(fields["d(f)"], str(r["d_f"]["consolidated"]))
                self.assertEqual(fields["mu(V)"], str(r["mu_V"]))


class PolarDegree(unittest.TestCase):
    def test_oracle_trials(self):
        r = run_json("polar-degree", "x^3+y^3+z^3", "--method", "oracle", "--trials", "5")
        self.assertEqual(r["consolidated"], 4)
        self.assertEqual(len(r["results"][0]["trials"]), 5)

    def test_all_methods(self):
        r = run_json("polar-degree", "x*y*z", "--method", "all")
        self.assertEqual([x["value"] for x in r["results"]], [1, 1, 1])
        self.assertEqual(r["consolidated"], 1)

    def test_text(self):
        code, out, _ = run("polar-degree", "x*y*z", "--method", "all")
        self.assertEqual(code, 0)
        self.assertIn("formula 1", out)
        self.assertIn("consolidated 1", out)


class Monodromy(unittest.TestCase):
    def test_fermat(self):
        r = run_json("monodromy", "--fermat", "3,3")
        self.assertEqual(r["rendered"], "(t^3-1)^3*(t-1)^-1")
        self.assertEqual(r["degree"], 8)
        self.assertEqual(r["mult"]["1"], 2)
        self.assertEqual(r["mult"]["3"], 3)

    def test_bp(self):
        r = run_json("monodromy", "--bp", "3,4,2")
        self.assertEqual(r["degree"], 6)
        self.assertEqual(r["mu0"], 0)

    def test_weights(self):
        r = run_json("monodromy", "--weights", "1/3,1/5")
        self.assertEqual(r["degree"], 8)
        self.assertEqual(r["divisor"], {"15": 1, "5": -1, "3": -1, "1": 1})

    def test_needs_exactly_one_source(self):
        self.assertEqual(run("monodromy")[0], 1)
        self.assertEqual(run("monodromy", "--bp", "2,2", "--fermat", "3,3")[0], 1)


class Bounds(unittest.TestCase):
    def test_cubic_surface(self):
        r = run_json("bounds", "--degree", "3", "--dim", "3", "--mu0", "0")
        self.assertEqual(r["primitive_betti"], 2)
        self.assertEqual(r["prop_p1_rhs"], 2)
        self.assertTrue(r["cor_37"]["certified"])
        self.assertEqual(r["mult0"], {"1": 2, "3": 3})

    def test_quintic_surface(self):
        self.assertEqual(run_json("bounds", "--degree", "5", "--dim", "3")["primitive_betti"], 12)

    def test_cubic_threefold(self):
        self.assertEqual(run_json("bounds", "--degree", "3", "--dim", "4")["primitive_betti"], 6)


class Catalog(unittest.TestCase):
    def test_list(self):
        code, out, _ = run("catalog", "list")
        self.assertEqual(code, 0)
        for name in ("cremona-triangle", "e6-cubic", "a1a5-cubic", "conic-tangent"):
            self.assertIn(name, out)

    def test_named_entries(self):
        r = run_json("catalog", "run", "cremona-triangle")
        self.assertTrue(r[0]["pass"])
        r = run_json("catalog", "run", "e6-cubic")
        self.assertTrue(r[0]["pass"])
        self.assertEqual(r[0]["d_f"], 2)
        r = run_json("catalog", "run", "--entry", "conic-tangent")
        self.assertTrue(r[0]["pass"])
        row = r[0]["report"]["bounds"]["thm_t4"]["rows"][0]
        self.assertEqual((row["k"], row["mult_V"], row["required"]), (1, 1, 1))

    def test_run_all(self):
        r = run_json("--timings", "--jobs", "4", "catalog", "run", "all")
        self.assertGreaterEqual(len(r), 10)
        for item in r:
            with self.subTest(entry=item["name"]):
                self.assertTrue(item["pass"], item["mismatches"])
                self.assertLess(item["seconds"], 60.0)
                Schema.check(item["report"])

    def test_parallel_matches_serial(self):
        serial = run("--format", "json", "--jobs", "1", "catalog", "run", "all")
        parallel = run("--format", "json", "--jobs", "4", "catalog", "run", "all")
        self.assertEqual(serial[0], 0)
        self.assertEqual(serial[1], parallel[1])


if __name__ == "__main__":
    if len(sys.argv) > 1 and not sys.argv[1].startswith("-"):
        BINARY = sys.argv.pop(1)
    unittest.main()
