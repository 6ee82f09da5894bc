import unittest

from app.models.election import NominationScheme
from app.utils.election import build_election, is_nash_equilibrium
from app.utils.errors import (
    AxisNotSinglePeakedError,
    ElectionValidationError,
    PartiesNotContiguousError,
    TooManyPartiesError,
)
from app.utils.generators import random_sp_pasp
from app.utils.nomination import centrist_equilibrium, centrist_schemes, party_blocks


class CentristTests(unittest.TestCase):
    def setUp(self):
        # a1 a2 | b1 b2 on the line
        self.election = build_election(
            ["a1", "a2", "b1", "b2"],
            {"A": ["a1", "a2"], "B": ["b1", "b2"]},
            [["a1", "a2", "b1", "b2"], ["b1", "a2", "b2", "a1"], ["b2", "b1", "a2", "a1"]],
        )
        self.axis = (0, 1, 2, 3)

    def test_blocks_follow_the_axis(self):
        self.assertEqual(party_blocks(self.election, self.axis), ((0, (0, 1)), (1, (2, 3))))

    def test_two_party_centrist_scheme(self):
        self.assertEqual(centrist_schemes(self.election, self.axis), [NominationScheme((1, 2))])
        scheme = centrist_equilibrium(self.election, self.axis)
        self.assertEqual(scheme, NominationScheme((1, 2)))
        self.assertTrue(is_nash_equilibrium(self.election, scheme))

    def test_single_party(self):
        election = build_election(["x", "y"], {"A": ["x", "y"]}, [["y", "x"]])
        self.assertEqual(centrist_equilibrium(election, (0, 1)), NominationScheme((0,)))

    def test_middle_party_varies(self):
        election, axis = random_sp_pasp(4, [3, 3, 3], 5)
        schemes = centrist_schemes(election, axis)
        self.assertEqual(len(schemes), 3)
        blocks = party_blocks(election, axis)
        for scheme in schemes:
            self.assertEqual(scheme.nominee(blocks[0][0]), blocks[0][1][-1])
            self.assertEqual(scheme.nominee(blocks[2][0]), blocks[2][1][0])

    def test_split_party_is_rejected(self):
        with self.assertRaises(PartiesNotContiguousError):
            centrist_equilibrium(self.election, (0, 2, 1, 3))

    def test_non_single_peaked_vote_is_rejected(self):
        election = build_election(
            ["a", "b", "c"], [["a"], ["b"], ["c"]], [["a", "c", "b"]]
        )
        with self.assertRaises(AxisNotSinglePeakedError):
            centrist_equilibrium(election, (0, 1, 2))

    def test_four_parties_are_rejected(self):
        election = build_election(["a", "b", "c", "d"], [["a"], ["b"], ["c"], ["d"]], [])
        with self.assertRaises(TooManyPartiesError):
            centrist_equilibrium(election, (0, 1, 2, 3))

    def test_axis_must_cover_every_candidate(self):
        with self.assertRaises(ElectionValidationError):
            centrist_equilibrium(self.election, (0, 1, 2))

    def test_generated_profiles(self):
        for seed in range(300):
            sizes = [1 + (seed + offset) % 3 for offset in range(1 + seed % 3)]
            election, axis = random_sp_pasp(seed, sizes, seed % 9)
            with self.subTest(seed=seed):
                self.assertTrue(is_nash_equilibrium(election, centrist_equilibrium(election, axis)))


if __name__ == "__main__":
    unittest.main()
