import unittest

from app.models.election import (
    ExtremalPlacement,
    NominationScheme,
    PartyAxis,
    ScoreVector,
    Vote,
    parse_party_reference,
)
from app.utils.generators import load_fixture


class VoteTests(unittest.TestCase):
    def test_ranks_invert_the_ranking(self):
        vote = Vote((2, 0, 3, 1))
        self.assertEqual(list(vote.ranks), [1, 3, 0, 2])
        self.assertEqual(vote.top, 2)
        self.assertEqual(vote.bottom, 1)
        self.assertTrue(vote.prefers(0, 1))
        self.assertFalse(vote.prefers(1, 3))

    def test_ranks_do_not_take_part_in_equality(self):
        self.assertEqual(Vote((0, 1)), Vote((0, 1)))
        self.assertNotEqual(Vote((0, 1)), Vote((1, 0)))


class ElectionTests(unittest.TestCase):
    def setUp(self):
        self.election = load_fixture("thm4")

    def test_sizes_and_lookups(self):
        self.assertEqual(self.election.n_candidates, 4)
        self.assertEqual(self.election.n_parties, 2)
        self.assertEqual(self.election.n_voters, 3)
        self.assertEqual(self.election.party_sizes, (2, 2))
        self.assertEqual(self.election.candidate_index("b1"), 2)
        self.assertEqual(self.election.party_index("B"), 1)
        self.assertEqual(list(self.election.party_of), [0, 0, 1, 1])

    def test_unknown_names_raise_key_error(self):
        with self.assertRaises(KeyError):
            self.election.candidate_index("zz")
        with self.assertRaises(KeyError):
            self.election.party_index("Z")

    def test_rank_matrix_is_read_only(self):
        with self.assertRaises(ValueError):
            self.election.ranks[0, 0] = 3

    def test_party_extreme_ranks(self):
        best, worst = self.election.party_extreme_ranks()
        # v2: b1 > a2 > b2 > a1
        self.assertEqual(list(best[1]), [1, 0])
        self.assertEqual(list(worst[1]), [3, 2])

    def test_party_reference_accepts_names_and_indices(self):
        self.assertEqual(parse_party_reference(self.election, "A"), 0)
        self.assertEqual(parse_party_reference(self.election, 1), 1)
        with self.assertRaises(KeyError):
            parse_party_reference(self.election, 2)


class SchemeAndScoreTests(unittest.TestCase):
    def test_replace_returns_new_scheme(self):
        scheme = NominationScheme((0, 2))
        replaced = scheme.replace(1, 3)
        self.assertEqual(replaced.nominees, (0, 3))
        self.assertEqual(scheme.nominees, (0, 2))

    def test_score_vector_ties(self):
        scores = ScoreVector((2, 1, 2))
        self.assertEqual(scores.total, 5)
        self.assertEqual(scores.maximum, 2)
        self.assertEqual(scores.winning_parties(), (0, 2))
        self.assertEqual(scores.by_candidate(NominationScheme((4, 5, 6))), {4: 2, 5: 1, 6: 2})


class PartyAxisTests(unittest.TestCase):
    def test_reversal_and_canonical_form(self):
        axis = PartyAxis((3, 1, 0, 2))
        self.assertEqual(axis.reversed().order, (2, 0, 1, 3))
        self.assertEqual(axis.canonical().order, (2, 0, 1, 3))
        self.assertTrue(axis.same_up_to_reversal(PartyAxis((2, 0, 1, 3))))
        self.assertFalse(axis.same_up_to_reversal(PartyAxis((0, 1, 2, 3))))

    def test_positions(self):
        axis = PartyAxis((2, 0, 1))
        self.assertEqual(axis.position(1), 2)
        self.assertEqual(list(axis.positions()), [1, 2, 0])

    def test_extremal_placement_grows_towards_the_middle(self):
        placement = ExtremalPlacement().extend_left(0).extend_right(3).extend_left(1).extend_right(2)
        self.assertEqual(placement.left, (0, 1))
        self.assertEqual(placement.right, (2, 3))
        self.assertEqual(placement.to_axis().order, (0, 1, 2, 3))


if __name__ == "__main__":
    unittest.main()
