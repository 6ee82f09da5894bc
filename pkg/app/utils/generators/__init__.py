from .euclidean import euclidean_election, euclidean_ranking
from .fixtures import FIXTURE_NAMES, euclidean_fixture_spec, load_fixture
from .random_profiles import random_pasp, random_profile, random_sp_pasp, single_peaked_vote

__all__ = [
    "euclidean_election",
    "euclidean_ranking",
    "FIXTURE_NAMES",
    "load_fixture",
    "euclidean_fixture_spec",
    "random_pasp",
    "random_profile",
    "random_sp_pasp",
    "single_peaked_vote",
]
