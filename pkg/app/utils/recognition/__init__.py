from .axis import (
    canonical_axis,
    check_axis,
    party_extrema,
    perceived_axis,
    reverse_axis,
    verify_profile_under_axis,
    verify_vote_under_axis,
    violating_voters,
)
from .placement import Side, apply_extension, bottom_parties, vote_imposed_extension
from .recognizer import recognize_pasp

__all__ = [
    "canonical_axis",
    "check_axis",
    "party_extrema",
    "perceived_axis",
    "reverse_axis",
    "verify_profile_under_axis",
    "verify_vote_under_axis",
    "violating_voters",
    "Side",
    "apply_extension",
    "bottom_parties",
    "vote_imposed_extension",
    "recognize_pasp",
]
