import unittest

from app.models.schemas import QueryReport, SchemeRow
from app.utils.errors import ElectionValidationError, ProfileParseError
from app.utils.generators import FIXTURE_NAMES, load_fixture
from app.utils.profile_io import (
    STRUCTURED,
    TEXT,
    decode_profile,
    parse_profile,
    read_document,
    score_table_rows,
    serialize_profile,
    serialize_report,
)

SAMPLE = """\
# two parties
CANDIDATES 4
a1 First of A
a2
b1
b2
PARTIES 2
A: a1 a2
B: b1 b2
VOTES 3
a1 b1 a2 b2   # first voter
2: b1 a2 b2 a1
"""


class ParseProfileTests(unittest.TestCase):
    def test_sample(self):
        election = parse_profile(SAMPLE)
        self.assertEqual(election.candidates, ("a1", "a2", "b1", "b2"))
        self.assertEqual(election.party_names, ("A", "B"))
        self.assertEqual(election.n_voters, 3)
        self.assertEqual(election.votes[1], election.votes[2])

    def test_display_names(self):
        document = read_document(SAMPLE)
        self.assertEqual(document.display_name("a1"), "First of A")
        self.assertEqual(document.display_name("b2"), "b2")
        self.assertEqual(document.voter_count, 3)

    def test_multiplicity_expands_to_identical_voters(self):
        text = serialize_profile(load_fixture("thm5"))
        self.assertIn("5: p1 p3 p'1 p2 p'2 p4", text)
        election = parse_profile(text)
        self.assertEqual(len({vote.ranking for vote in election.votes[:5]}), 1)

    def test_round_trip_on_fixtures(self):
        for name in FIXTURE_NAMES:
            election = load_fixture(name)
            with self.subTest(name=name):
                self.assertEqual(parse_profile(serialize_profile(election)), election)

    def test_round_trip_keeps_display_names(self):
        election = parse_profile(SAMPLE)
        self.assertEqual(election.display_name(0), "First of A")
        self.assertEqual(election.display_name(1), "a2")
        text = serialize_profile(election)
        self.assertIn("\na1 First of A\n", text)
        self.assertIn("\na2\n", text)
        again = parse_profile(text)
        self.assertEqual(again, election)
        self.assertEqual(again.display_names, election.display_names)
        self.assertEqual(serialize_profile(again), text)

    def test_documents_without_labels_carry_none(self):
        self.assertEqual(load_fixture("thm4").display_names, ())
        self.assertEqual(parse_profile(SAMPLE.replace("a1 First of A", "a1")).display_names, ())

    def assert_parse_error(self, text, line, fragment):
        with self.assertRaises(ProfileParseError) as ctx:
            parse_profile(text)
        self.assertEqual(ctx.exception.line, line)
        self.assertIn(fragment, str(ctx.exception))
        return ctx.exception

    def test_duplicate_candidate_in_vote(self):
        text = SAMPLE.replace("2: b1 a2 b2 a1", "2: b1 a2 b1 a1")
        error = self.assert_parse_error(text, 12, "duplicate candidate 'b1'")
        self.assertEqual(error.column, 10)

    def test_missing_candidate_in_vote(self):
        self.assert_parse_error(SAMPLE.replace("2: b1 a2 b2 a1", "2: b1 a2 b2"), 12, "missing candidate(s) a1")

    def test_unknown_candidate_in_party(self):
        self.assert_parse_error(SAMPLE.replace("B: b1 b2", "B: b1 b3"), 9, "unknown candidate id 'b3'")

    def test_party_overlap(self):
        text = SAMPLE.replace("B: b1 b2", "B: b1 b2 a2")
        self.assert_parse_error(text, 9, "party overlap")

    def test_count_mismatch(self):
        self.assert_parse_error(SAMPLE.replace("VOTES 3", "VOTES 4"), 10, "declares 4 but 3")

    def test_malformed_header(self):
        self.assert_parse_error(SAMPLE.replace("PARTIES 2", "PARTIES two"), 7, "malformed count header")

    def test_missing_section(self):
        self.assert_parse_error(SAMPLE.split("VOTES")[0], 9, "missing VOTES section")

    def test_non_positive_multiplicity(self):
        self.assert_parse_error(SAMPLE.replace("2: b1", "0: b1"), 12, "multiplicity must be positive")

    def test_duplicate_candidate_declaration(self):
        self.assert_parse_error(SAMPLE.replace("b2\nPARTIES", "b1\nPARTIES"), 6, "already declared on line 5")

    def test_late_validation_errors_point_at_the_offending_row(self):
        document = read_document(SAMPLE)
        document.votes[1][1].pop()
        with self.assertRaises(ElectionValidationError) as ctx:
            document.to_election()
        self.assertEqual(ctx.exception.voter_index, 1)
        self.assertEqual(document.line_of(ctx.exception), 12)
        self.assertEqual(document.line_of(ElectionValidationError("empty", party_index=1)), 9)
        self.assertEqual(document.line_of(ElectionValidationError("duplicate")), 2)
        self.assertEqual(document.voter_lines, [11, 12, 12])

    def test_invalid_utf8_is_located(self):
        with self.assertRaises(ProfileParseError) as ctx:
            decode_profile(b"CANDIDATES 1\nx \xff\xfe\nPARTIES 1\nA: x\nVOTES 0\n")
        self.assertEqual((ctx.exception.line, ctx.exception.column), (2, 3))
        self.assertIn("0xff", str(ctx.exception))
        self.assertEqual(decode_profile("CANDIDATES 1\nx \u00e9\n".encode("utf-8")), "CANDIDATES 1\nx \u00e9\n")


class ReportTests(unittest.TestCase):
    def setUp(self):
        self.report = QueryReport(
            query="possible",
            party="A",
            answer="yes",
            witness=["a1", "b1"],
            score=2,
            axis=["A", "B"],
            score_table=[SchemeRow(nominees=["a1", "b1"], scores=[2, 1], winners=["A"])],
            notes=["B must not win"],
        )

    def test_text_report(self):
        text = serialize_report(self.report, TEXT)
        self.assertIn("answer: yes\n", text)
        self.assertIn("witness: a1 b1\n", text)
        self.assertIn("axis: A < B\n", text)
        self.assertIn("a1 b1 | 2 1 | winners: A", text)
        self.assertTrue(text.endswith("note: B must not win\n"))

    def test_structured_report(self):
        lines = serialize_report(self.report, STRUCTURED).splitlines()
        self.assertEqual(lines[0], "query=possible")
        self.assertIn("witness=a1,b1", lines)
        self.assertIn("table.count=1", lines)
        self.assertIn("table.0.scores=2,1", lines)
        self.assertIn("note.0=B must not win", lines)

    def test_unknown_format(self):
        with self.assertRaises(ValueError):
            serialize_report(self.report, "xml")

    def test_score_table_rows(self):
        rows = score_table_rows(load_fixture("thm4"))
        self.assertEqual(len(rows), 4)
        self.assertEqual(rows[-1].nominees, ["a2", "b2"])
        self.assertEqual(rows[-1].scores, [3, 0])
        self.assertEqual(rows[-1].winners, ["A"])
        self.assertIsNone(score_table_rows(load_fixture("thm4"), limit=3))


if __name__ == "__main__":
    unittest.main()
