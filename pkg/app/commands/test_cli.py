import io
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from app import run
from app.commands.common import (
    EXIT_ANSWERED,
    EXIT_CAP_EXCEEDED,
    EXIT_INPUT_ERROR,
    EXIT_NEGATIVE,
)
from app.utils.profile_io import parse_profile


def invoke(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    with redirect_stdout(stdout), redirect_stderr(stderr):
        code = run(list(argv))
    return code, stdout.getvalue(), stderr.getvalue()


class RecognizeCommandTests(unittest.TestCase):
    def test_fixture_is_pasp(self):
        code, out, _ = invoke("recognize", "--fixture", "example-sec3")
        self.assertEqual(code, EXIT_ANSWERED)
        self.assertIn("answer: pasp", out)
        self.assertIn("axis: Pa < Pb < Pc < Pd", out)

    def test_missing_file(self):
        code, out, err = invoke("recognize", "--input", "/nonexistent/profile.txt")
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertEqual(out, "")
        self.assertIn("profile file not found", err)

    def test_undecodable_file_is_an_input_error(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "bad.txt")
            with open(path, "wb") as handle:
                handle.write(b"CANDIDATES 1\n\xff\xfe\nPARTIES 1\nA: x\nVOTES 0\n")
            code, out, err = invoke("recognize", "--input", path)
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertEqual(out, "")
        self.assertIn("line 2, column 1", err)
        self.assertIn("invalid UTF-8", err)

    def test_labelled_profile_is_accepted(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "labelled.txt")
            with open(path, "w", encoding="utf-8") as handle:
                handle.write("CANDIDATES 2\na Alpha Display\nb\nPARTIES 1\nA: a b\nVOTES 1\nb a\n")
            code, out, _ = invoke("check", "--input", path)
        self.assertEqual(code, EXIT_ANSWERED)
        self.assertIn("answer: valid", out)

    def test_reads_profile_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "profile.txt")
            _, text, _ = invoke("generate", "fixture", "--name", "thm4")
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(text)
            code, out, _ = invoke("recognize", "--input", path, "--format", "structured")
        self.assertEqual(code, EXIT_ANSWERED)
        self.assertIn("answer=pasp", out.splitlines())


class EquilibriumCommandTests(unittest.TestCase):
    def test_no_equilibrium(self):
        code, out, _ = invoke("equilibrium", "--fixture", "thm4")
        self.assertEqual(code, EXIT_NEGATIVE)
        self.assertIn("answer: none", out)
        self.assertIn("a2 b2 | 3 0 | winners: A", out)

    def test_structured_output(self):
        code, out, _ = invoke("equilibrium", "--fixture", "thm4", "--party", "A", "--format", "structured")
        lines = out.splitlines()
        self.assertEqual(code, EXIT_NEGATIVE)
        self.assertEqual(lines[0], "query=equilibrium")
        self.assertIn("party=A", lines)
        self.assertIn("answer=none", lines)
        self.assertIn("table.count=4", lines)

    def test_centrist_axis(self):
        code, out, _ = invoke(
            "equilibrium", "--fixture", "thm5", "--centrist-axis", "p1 p3 p'1 p2 p'2 p4"
        )
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertEqual(out, "")

    def test_brute_agrees(self):
        code, out, _ = invoke("brute", "equilibrium", "--fixture", "thm4")
        self.assertEqual(code, EXIT_NEGATIVE)
        self.assertIn("query: brute-equilibrium", out)


class PresidentCommandTests(unittest.TestCase):
    def test_possible(self):
        code, out, _ = invoke("possible", "--fixture", "thm4", "--party", "A")
        self.assertEqual(code, EXIT_ANSWERED)
        self.assertIn("witness: a1 b1", out)
        self.assertIn("score: 2", out)

    def test_possible_excluding(self):
        code, out, _ = invoke("possible", "--fixture", "thm4", "--party", "B", "--exclude", "A")
        self.assertEqual(code, EXIT_ANSWERED)
        self.assertIn("note: A must not win", out)

    def test_necessary(self):
        code, out, _ = invoke("necessary", "--fixture", "thm4", "--party", "A")
        self.assertEqual(code, EXIT_NEGATIVE)
        self.assertIn("answer: no", out)

    def test_party_by_index(self):
        code, out, _ = invoke("possible", "--fixture", "thm4", "--party", "1")
        self.assertEqual(code, EXIT_ANSWERED)
        self.assertIn("party: B", out)

    def test_unknown_party(self):
        code, _, err = invoke("possible", "--fixture", "thm4", "--party", "C")
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertIn("error:", err)


class TableAndCheckCommandTests(unittest.TestCase):
    def test_table_over_cap(self):
        code, out, err = invoke("table", "--fixture", "thm5", "--max-schemes", "2")
        self.assertEqual(code, EXIT_CAP_EXCEEDED)
        self.assertEqual(out, "")
        self.assertIn("exceed the cap of 2", err)

    def test_table(self):
        code, out, _ = invoke("table", "--fixture", "thm5")
        self.assertEqual(code, EXIT_ANSWERED)
        self.assertIn("answer: 4", out)

    def test_cross_validate(self):
        code, out, _ = invoke("check", "--cross-validate", "--fixture", "thm4")
        self.assertEqual(code, EXIT_ANSWERED)
        self.assertIn("answer: agree", out)
        self.assertIn("note: possible[A]: solver=True oracle=True agrees", out)

    def test_check_summary(self):
        code, out, _ = invoke("check", "--fixture", "intro")
        self.assertEqual(code, EXIT_ANSWERED)
        self.assertIn("answer: valid", out)


class GenerateCommandTests(unittest.TestCase):
    def test_seeded_output_is_deterministic(self):
        first = invoke("generate", "pasp", "--seed", "3", "--sizes", "2,1,2", "--voters", "4")
        second = invoke("generate", "pasp", "--seed", "3", "--sizes", "2,1,2", "--voters", "4")
        self.assertEqual(first, second)
        self.assertTrue(first[1].startswith("# party axis: "))
        self.assertEqual(parse_profile(first[1]).n_voters, 4)

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "thm5.txt")
            code, out, _ = invoke("generate", "fixture", "--name", "thm5", "--output", path)
            with open(path, encoding="utf-8") as handle:
                written = handle.read()
        self.assertEqual(code, EXIT_ANSWERED)
        self.assertEqual(out, "")
        self.assertEqual(parse_profile(written).n_voters, 22)

    def test_bad_sizes(self):
        code, _, err = invoke("generate", "pasp", "--sizes", "2,x")
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertIn("party sizes", err)


if __name__ == "__main__":
    unittest.main()
