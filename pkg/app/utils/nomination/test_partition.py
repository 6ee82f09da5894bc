import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from app.models.election import NominationScheme, PartyAxis
from app.utils.election import build_election, enumerate_schemes, reduced_scores
from app.utils.errors import NotPaspError
from app.utils.generators import load_fixture, random_pasp
from app.utils.nomination import build_score_chain, partition_voters, swing_preference_counts, two_possible_parties


class TwoPossiblePartiesTests(unittest.TestCase):
    def test_intro_voters(self):
        election = load_fixture("intro")
        axis = PartyAxis((0, 1))
        self.assertEqual(two_possible_parties(election.votes[0], axis, election), (0, 1))
        self.assertEqual(two_possible_parties(election.votes[1], axis, election), (0, 1))
        self.assertEqual(two_possible_parties(election.votes[2], axis, election), (0, None))

    def test_four_party_voter(self):
        election = load_fixture("example-sec3")
        self.assertEqual(two_possible_parties(election.votes[0], PartyAxis((0, 1, 2, 3)), election), (2, 1))

    def test_non_adjacent_second_party(self):
        election = build_election(
            ["x1", "x2", "y", "z"], [["x1", "x2"], ["y"], ["z"]], [["x1", "z", "x2", "y"]]
        )
        with self.assertRaises(NotPaspError):
            two_possible_parties(election.votes[0], PartyAxis((0, 1, 2)), election)


class PartitionTests(unittest.TestCase):
    def test_intro_partition(self):
        election = load_fixture("intro")
        partition = partition_voters(election, PartyAxis((0, 1)))
        self.assertEqual(partition.loyal, ((2,), ()))
        self.assertEqual(partition.swing, ((0, 1),))
        self.assertEqual(partition.swing_voters(1, 0), (0, 1))

    def test_four_party_partition(self):
        election = load_fixture("example-sec3")
        partition = partition_voters(election, PartyAxis((0, 1, 2, 3)))
        self.assertEqual(partition.swing, ((), (0, 1, 2), ()))
        self.assertEqual(partition.all_voters(), (0, 1, 2))

    def test_swing_counts(self):
        election = load_fixture("thm4")
        partition = partition_voters(election, PartyAxis((0, 1)))
        counts = swing_preference_counts(election, partition)[0]
        np.testing.assert_array_equal(counts, np.array([[2, 1], [1, 3]]))

    @given(st.integers(0, 2**32 - 1), st.lists(st.integers(1, 3), min_size=1, max_size=5), st.integers(0, 8))
    @settings(max_examples=80, deadline=None)
    def test_every_voter_lands_in_one_group(self, seed, sizes, n_voters):
        election, axis = random_pasp(seed, sizes, n_voters)
        partition = partition_voters(election, axis)
        self.assertEqual(partition.all_voters(), tuple(range(n_voters)))


class ScoreChainTests(unittest.TestCase):
    @given(st.integers(0, 2**32 - 1), st.lists(st.integers(1, 3), min_size=1, max_size=4), st.integers(0, 8))
    @settings(max_examples=60, deadline=None)
    def test_chain_scores_match_plurality(self, seed, sizes, n_voters):
        election, axis = random_pasp(seed, sizes, n_voters)
        chain = build_score_chain(election, axis)
        for scheme in enumerate_schemes(election):
            scores = reduced_scores(election, scheme)
            locals_by_slot = [chain.members[slot].index(scheme.nominee(party)) for slot, party in enumerate(axis)]
            for slot, party in enumerate(axis.order):
                before = locals_by_slot[slot - 1] if slot > 0 else None
                after = locals_by_slot[slot + 1] if slot + 1 < len(axis) else None
                self.assertEqual(chain.score(slot, before, locals_by_slot[slot], after), scores[party])

    @given(st.integers(0, 2**32 - 1), st.lists(st.integers(1, 3), min_size=2, max_size=5), st.integers(0, 8))
    @settings(max_examples=60, deadline=None)
    def test_mirrored_chain_is_the_chain_of_the_reversed_axis(self, seed, sizes, n_voters):
        election, axis = random_pasp(seed, sizes, n_voters)
        mirrored = build_score_chain(election, axis).mirrored()
        direct = build_score_chain(election, axis.reversed())
        self.assertEqual(mirrored.parties, direct.parties)
        self.assertEqual(mirrored.members, direct.members)
        self.assertEqual(mirrored.loyal, direct.loyal)
        self.assertEqual(mirrored.swing_sizes, direct.swing_sizes)
        for left, right in zip(mirrored.shares, direct.shares):
            np.testing.assert_array_equal(left, right)

    def test_candidates_from_local_indices(self):
        election = load_fixture("example-sec3")
        chain = build_score_chain(election, PartyAxis((0, 1, 2, 3)))
        scheme = NominationScheme(chain.to_candidates([0, 1, 0, 0]))
        self.assertEqual(scheme.names(election), ("a", "b2", "c1", "d"))


if __name__ == "__main__":
    unittest.main()
