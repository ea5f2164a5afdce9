import json
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from io import StringIO
from pathlib import Path

from chaincalc.chains import DiracChain, dumps
from chaincalc.cli import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, UsageError, main, parse_chain_spec


def run(*argv: str):
    out, err = StringIO(), StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestVerify(unittest.TestCase):
    def test_algebra_passes(self):
        code, out, _ = run("verify", "algebra", "--seed", "7", "--samples", "3")
        self.assertEqual(code, EXIT_PASS)
        data = json.loads(out)
        self.assertEqual(data["schema"], 1)
        self.assertEqual(data["seed"], 7)
        self.assertTrue(data["pass"])

    def test_output_is_deterministic_apart_from_timestamp(self):
        first = json.loads(run("verify", "cartesian", "--seed", "3", "--samples", "2")[1])
        second = json.loads(run("verify", "cartesian", "--seed", "3", "--samples", "2")[1])
        first.pop("timestamp")
        second.pop("timestamp")
        self.assertEqual(first, second)

    def test_failure_exit_code(self):
        code, out, _ = run("verify", "duality", "--samples", "1", "--tol", "1e-300")
        self.assertEqual(code, EXIT_FAIL)
        self.assertFalse(json.loads(out)["pass"])

    def test_unknown_suite(self):
        code, out, err = run("verify", "bogus")
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(out, "")
        self.assertIn("unknown suite 'bogus'", err)

    def test_csv(self):
        code, out, _ = run("verify", "algebra", "--samples", "1", "--format", "csv")
        self.assertEqual(code, EXIT_PASS)
        self.assertEqual(out.splitlines()[0], "id,expected,computed,abs_err,tol,pass")

    def test_out_writes_a_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "report.json"
            code, out, _ = run("verify", "algebra", "--samples", "1", "--out", str(path))
            self.assertEqual(code, EXIT_PASS)
            self.assertEqual(out, "")
            self.assertEqual(json.loads(path.read_text())["suite"], "algebra")

    def test_argparse_errors_exit_with_two(self):
        for argv in (["verify"], ["verify", "algebra", "--oracle", "exact"], ["frobnicate"]):
            with self.subTest(argv=argv):
                with redirect_stderr(StringIO()), self.assertRaises(SystemExit) as ctx:
                    main(argv)
                self.assertEqual(ctx.exception.code, EXIT_USAGE)


class TestConverge(unittest.TestCase):
    def test_stokes_table(self):
        code, out, _ = run("converge", "stokes", "--levels", "3..5", "--format", "json")
        self.assertEqual(code, EXIT_PASS)
        data = json.loads(out)
        self.assertEqual([row["j"] for row in data["rows"]], [3, 4, 5])
        self.assertEqual(data["theorem"], "stokes")

    def test_csv_is_the_default(self):
        code, out, _ = run("converge", "kelvin-stokes", "--levels", "2..3")
        self.assertEqual(code, EXIT_PASS)
        self.assertEqual(out.splitlines()[0], "j,lhs,rhs,err,ratio,extrap")
        self.assertEqual(len(out.splitlines()), 3)

    def test_bad_levels(self):
        self.assertEqual(run("converge", "stokes", "--levels", "5..3")[0], EXIT_USAGE)
        self.assertEqual(run("converge", "stokes", "--levels", "three")[0], EXIT_USAGE)

    def test_parse_errors(self):
        code, _, err = run("converge", "stokes", "--form", "x $ 2", "--levels", "2")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("col", err)
        self.assertEqual(run("converge", "gauss-green", "--domain", "disk: 0, 0", "--levels", "2")[0], EXIT_USAGE)

    def test_unknown_theorem(self):
        self.assertEqual(run("converge", "pythagoras")[0], EXIT_USAGE)


class TestDemo(unittest.TestCase):
    def test_cantor(self):
        code, out, _ = run("demo", "cantor")
        self.assertEqual(code, EXIT_PASS)
        self.assertEqual(json.loads(out)["suite"], "demo/cantor")

    def test_tolerance_failure(self):
        self.assertEqual(run("demo", "vectorfield", "--tol", "1e-30")[0], EXIT_FAIL)

    def test_unknown_demo(self):
        code, _, err = run("demo", "mandelbrot")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("mandelbrot", err)

    def test_dump(self):
        with tempfile.TemporaryDirectory() as tmp:
            code, _, _ = run("demo", "sierpinski", "--dump", tmp)
            self.assertEqual(code, EXIT_PASS)
            self.assertTrue(list(Path(tmp).glob("sierpinski_*.chain")))


class TestNorm(unittest.TestCase):
    def test_refinement_bracket(self):
        code, out, _ = run("norm", "refinement:1,4", "--r", "1")
        self.assertEqual(code, EXIT_PASS)
        data = json.loads(out)
        self.assertLessEqual(data["lower"], data["upper"])
        self.assertEqual(data["r"], 1)

    def test_chain_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "cube.chain"
            path.write_text(dumps(parse_chain_spec("cube:2,1")))
            code, out, _ = run("norm", f"@{path}", "--r", "0", "--format", "csv")
            self.assertEqual(code, EXIT_PASS)
            self.assertEqual(out.splitlines()[0], "r,lower,upper")

    def test_undersized_form_bound_fails(self):
        code, out, err = run("norm", "cube:2,1", "--r", "0", "--form", "100 @ 1,2", "--form-bound", "1")
        self.assertEqual(code, EXIT_FAIL)
        self.assertEqual(out, "")
        self.assertIn("exceeds upper bound", err)

    def test_bad_specs(self):
        for spec in ("cube:2", "cube:a,b", "sphere:1", "@/nonexistent/chain"):
            with self.subTest(spec=spec):
                self.assertEqual(run("norm", spec)[0], EXIT_USAGE)

    def test_parse_chain_spec(self):
        self.assertEqual(parse_chain_spec("zero:2,1"), DiracChain.zero(2, 1))
        self.assertEqual(len(parse_chain_spec("cube:1,3")), 8)
        self.assertEqual(parse_chain_spec("cantor:2").grade, 1)
        with self.assertRaises(UsageError):
            parse_chain_spec("cube:1,2,3")


class TestFlow(unittest.TestCase):
    def test_ftc(self):
        code, out, _ = run("flow", "ftc", "--level", "4", "--intervals", "16")
        self.assertEqual(code, EXIT_PASS)
        data = json.loads(out)
        self.assertEqual(data["suite"], "flow/ftc")
        self.assertEqual(set(data["extra"]), {"name", "lhs", "rhs", "abs_err", "cfg", "values", "refinement_table"})

    def test_refinement_csv(self):
        code, out, _ = run("flow", "ftc", "--level", "3", "--intervals", "8", "--refine", "2", "--format", "csv")
        self.assertEqual(code, EXIT_PASS)
        lines = out.splitlines()
        self.assertEqual(lines[0], "intervals,lhs,rhs,err,ratio")
        self.assertEqual([line.split(",")[0] for line in lines[1:]], ["8", "16", "32"])

    def test_reynolds(self):
        code, out, _ = run("flow", "reynolds", "--level", "4", "--form", "t*x @ 2", "--tol", "1e-4")
        self.assertEqual(code, EXIT_PASS)
        self.assertIn("extrusion_part", json.loads(out)["extra"]["values"])

    def test_bad_form(self):
        self.assertEqual(run("flow", "ftc", "--form", "x @ 9")[0], EXIT_USAGE)


if __name__ == "__main__":
    unittest.main()
