import unittest

from app.models.election import NominationScheme
from app.services.check_service import CrossCheck, cross_validate
from app.services.oracle_service import (
    brute_equilibria,
    brute_equilibrium_president,
    brute_necessary_president,
    brute_possible_president,
    brute_possible_president_excluding,
    brute_recognize_pasp,
    enumerate_schemes,
)
from app.utils.election import build_election
from app.utils.errors import CapExceededError
from app.utils.generators import FIXTURE_NAMES, load_fixture
from app.utils.recognition import verify_profile_under_axis


def singletons(count, votes=()):
    names = [f"c{index}" for index in range(count)]
    return build_election(names, [[name] for name in names], [list(vote) for vote in votes])


class EnumerationTests(unittest.TestCase):
    def test_scheme_counts(self):
        self.assertEqual(len(list(enumerate_schemes(load_fixture("thm5")))), 4)
        self.assertEqual(list(enumerate_schemes(singletons(3))), [NominationScheme((0, 1, 2))])

    def test_cap(self):
        with self.assertRaises(CapExceededError):
            list(enumerate_schemes(load_fixture("thm4"), max_schemes=3))


class BruteQueryTests(unittest.TestCase):
    def test_fixtures_without_equilibrium(self):
        self.assertEqual(brute_equilibria(load_fixture("thm4")), [])
        self.assertEqual(brute_equilibria(load_fixture("thm5")), [])

    def test_two_party_fixture(self):
        election = load_fixture("thm4")
        self.assertEqual(brute_possible_president(election, "A"), NominationScheme((0, 2)))
        self.assertEqual(brute_possible_president_excluding(election, "B", "A"), NominationScheme((0, 3)))
        self.assertFalse(brute_necessary_president(election, "A"))
        self.assertIsNone(brute_equilibrium_president(election, "A"))

    def test_single_party(self):
        election = build_election(["x", "y"], {"A": ["x", "y"]}, [["x", "y"]])
        self.assertTrue(brute_necessary_president(election, "A"))
        self.assertIsNotNone(brute_possible_president(election, "A"))
        self.assertEqual(len(brute_equilibria(election)), 2)


class BruteRecognitionTests(unittest.TestCase):
    def test_finds_a_fitting_axis(self):
        election = load_fixture("example-sec3")
        axis = brute_recognize_pasp(election)
        self.assertTrue(verify_profile_under_axis(election, axis))
        self.assertEqual(axis, axis.canonical())

    def test_no_axis(self):
        election = singletons(3, [["c0", "c1", "c2"], ["c1", "c2", "c0"], ["c2", "c0", "c1"]])
        self.assertIsNone(brute_recognize_pasp(election))

    def test_party_cap(self):
        with self.assertRaises(CapExceededError):
            brute_recognize_pasp(singletons(7))
        with self.assertRaises(CapExceededError):
            brute_recognize_pasp(singletons(3), max_parties=2)


class CrossValidateTests(unittest.TestCase):
    def test_fixtures_agree(self):
        for name in FIXTURE_NAMES:
            checks = cross_validate(load_fixture(name))
            with self.subTest(name=name):
                self.assertTrue(all(check.agrees for check in checks), [check.describe() for check in checks])

    def test_non_pasp_profile_stops_after_recognition(self):
        election = singletons(3, [["c0", "c1", "c2"], ["c1", "c2", "c0"], ["c2", "c0", "c1"]])
        checks = cross_validate(election)
        self.assertEqual(len(checks), 1)
        self.assertEqual(checks[0].describe(), "recognize: solver=False oracle=False agrees")

    def test_describe_disagreement(self):
        check = CrossCheck("possible", "A", True, False)
        self.assertFalse(check.agrees)
        self.assertEqual(check.describe(), "possible[A]: solver=True oracle=False DISAGREES")


if __name__ == "__main__":
    unittest.main()
