"""End-to-end checks of the gkl command line: exit codes, stdout grammar,
file handling, and byte-identical reports across thread counts.

Usage: python3 cli_test.py /path/to/gkl
"""

import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

GKL = None


def run(*args, **kwargs):
    return subprocess.run([GKL, *args], capture_output=True, text=True,
                          **kwargs)


class AlphaTests(unittest.TestCase):
    def test_default_precision(self):
        proc = run("alpha")
        self.assertEqual(proc.returncode, 0)
        self.assertEqual(proc.stdout, "x=0.5639 alpha=1.7734\n")

    def test_high_precision(self):
        proc = run("alpha", "--precision", "10")
        self.assertEqual(proc.stdout, "x=0.5638955243 alpha=1.7733781472\n")

    def test_precision_out_of_range(self):
        proc = run("alpha", "--precision", "0")
        self.assertEqual(proc.returncode, 2)
        self.assertIn("precision", proc.stderr)


class StepSimulateTests(unittest.TestCase):
    def test_step_count(self):
        proc = run("step", "--ring", ">>>><<>>>>", "--count", "2")
        self.assertEqual(proc.stdout, ">>>>>>>>>>\n")

    def test_simulate_uniform(self):
        proc = run("simulate", "--ring", ">>>><<>>>>")
        self.assertEqual(proc.returncode, 0)
        self.assertEqual(proc.stdout,
                         "UniformR steps=2\nfinal=>>>>>>>>>>\n")

    def test_simulate_cycle_and_small_ring_note(self):
        proc = run("simulate", "--ring", "><")
        self.assertIn("CycleDetected steps=2 cycle=2", proc.stdout)
        self.assertIn("note=small ring", proc.stdout)

    def test_parse_error_exit_2(self):
        proc = run("simulate", "--ring", ">a<")
        self.assertEqual(proc.returncode, 2)
        self.assertIn("index 1", proc.stderr)

    def test_ring_file_with_comments(self):
        with tempfile.TemporaryDirectory() as tmp:
            rings = Path(tmp) / "rings.txt"
            rings.write_text("# comment line\n\n  >>>><<>>>>  \n<<<<<\n")
            proc = run("step", "--file", str(rings))
            self.assertEqual(proc.returncode, 0)
            self.assertEqual(proc.stdout, ">>>>><>>>>\n<<<<<\n")

    def test_missing_input_exit_2(self):
        proc = run("simulate")
        self.assertEqual(proc.returncode, 2)

    def test_trace_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            trace = Path(tmp) / "t.pbm"
            proc = run("simulate", "--ring", ">>>><<>>>>", "--trace",
                       str(trace))
            self.assertEqual(proc.returncode, 0)
            self.assertEqual(trace.read_bytes(),
                             b"P4\n10 3\n\x0c\x00\x04\x00\x00\x00")


class AnalyzeTests(unittest.TestCase):
    def test_summary(self):
        proc = run("analyze", "--ring", ">>><<>>>><<<")
        self.assertEqual(proc.returncode, 0)
        lines = proc.stdout.splitlines()
        self.assertEqual(lines[0], "ring=>>><<>>>><<< n=12 L=5 R=7")
        self.assertEqual(lines[1], "intervals=2 (0,3) (5,4)")
        self.assertEqual(lines[2],
                         "segments=2 (3,2)[closed:L] (9,3)[closed:LR]")
        self.assertTrue(lines[4].startswith("audit nodes=9 violations=0 ok"))

    def test_uniform_ring_degenerate(self):
        proc = run("analyze", "--ring", ">>>>>")
        self.assertEqual(proc.returncode, 0)
        self.assertIn("solids=degenerate", proc.stdout)


class ConstructTests(unittest.TestCase):
    def test_fibonacci(self):
        proc = run("construct", "fibonacci", "--index", "4")
        self.assertEqual(proc.stdout, "<<<<<<>><<<<<<<<<\n")

    def test_killing_info(self):
        proc = run("construct", "killing", "--segment", "<<", "--info")
        self.assertEqual(proc.stdout.splitlines()[0],
                         "# segment=<< pad=12 deadline=4 n=23")

    def test_invalid_segment_exit_2(self):
        proc = run("construct", "killing", "--segment", "><")
        self.assertEqual(proc.returncode, 2)

    def test_random_deterministic(self):
        a = run("construct", "random", "--n", "40", "--k", "5", "--seed", "7")
        b = run("construct", "random", "--n", "40", "--k", "5", "--seed", "7")
        self.assertEqual(a.stdout, b.stdout)
        self.assertEqual(a.stdout.strip().count("<"), 5)

    def test_enumerate(self):
        proc = run("construct", "enumerate", "--n", "4", "--k", "2")
        self.assertEqual(proc.stdout, "<<>>\n<><>\n")


class VerifyTests(unittest.TestCase):
    def test_theorem_pass(self):
        proc = run("verify", "theorem", "--k", "1", "--no-spots")
        self.assertEqual(proc.returncode, 0)
        self.assertTrue(proc.stdout.endswith("PASS\n"))
        self.assertIn("k=1 bound=3 checked=16", proc.stdout)

    def test_theorem_reports_identical_across_jobs(self):
        with tempfile.TemporaryDirectory() as tmp:
            outs = []
            for jobs in ("1", "4"):
                report = Path(tmp) / f"r{jobs}.json"
                csv = Path(tmp) / f"r{jobs}.csv"
                proc = run("verify", "theorem", "--k", "3", "--sampled",
                           "--samples", "200", "--spot-samples", "50",
                           "--jobs", jobs, "--report", str(report),
                           "--csv", str(csv))
                self.assertEqual(proc.returncode, 0)
                outs.append((report.read_bytes(), csv.read_bytes()))
            self.assertEqual(outs[0], outs[1])

    def test_cap_exceeded_exit_2(self):
        proc = run("verify", "theorem", "--k", "5", "--n-range", "200..200",
                   "--cap", "100")
        self.assertEqual(proc.returncode, 2)
        self.assertIn("cap", proc.stderr)

    def test_killing(self):
        proc = run("verify", "killing", "--max-len", "6")
        self.assertEqual(proc.returncode, 0)
        self.assertEqual(proc.stdout, "segments=28 failures=0\nPASS\n")

    def test_fibonacci(self):
        proc = run("verify", "fibonacci", "--max-index", "5")
        self.assertEqual(proc.returncode, 0)
        self.assertIn("i=5 n=31 L=24 steps=7 ok", proc.stdout)

    def test_solids(self):
        proc = run("verify", "solids", "--rings", "200", "--n-max", "64",
                   "--fibonacci-max", "5", "--jobs", "2")
        self.assertEqual(proc.returncode, 0)
        self.assertIn("violations=0", proc.stdout)

    def test_bad_range_exit_2(self):
        proc = run("verify", "theorem", "--n-range", "20-30")
        self.assertEqual(proc.returncode, 2)


class TightnessTests(unittest.TestCase):
    def test_profile(self):
        proc = run("tightness", "--k-range", "1..2", "--samples", "30")
        self.assertEqual(proc.returncode, 0)
        self.assertIn("alpha=1.773378 inverse_log2_golden=1.44042",
                      proc.stdout)


if __name__ == "__main__":
    if len(sys.argv) < 2:
        print("usage: cli_test.py /path/to/gkl", file=sys.stderr)
        sys.exit(2)
    GKL = sys.argv.pop(1)
    unittest.main(verbosity=2)
