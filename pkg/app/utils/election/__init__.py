from .builder import build_election, relabel_election, restrict_election
from .plurality import (
    is_nash_equilibrium,
    make_scheme,
    nash_deviations,
    reduced_scores,
    validate_scheme,
    winners,
    winning_parties,
)
from .schemes import SchemeEvaluation, enumerate_schemes, scheme_count, scheme_score_table
from .single_peaked import brute_single_peaked, is_profile_single_peaked, is_single_peaked

__all__ = [
    "build_election",
    "relabel_election",
    "restrict_election",
    "make_scheme",
    "validate_scheme",
    "reduced_scores",
    "winners",
    "winning_parties",
    "nash_deviations",
    "is_nash_equilibrium",
    "SchemeEvaluation",
    "enumerate_schemes",
    "scheme_count",
    "scheme_score_table",
    "is_single_peaked",
    "is_profile_single_peaked",
    "brute_single_peaked",
]
