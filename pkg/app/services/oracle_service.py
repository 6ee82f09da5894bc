from itertools import permutations
from typing import Iterator, List, Optional

from app.models.election import Election, NominationScheme, PartyAxis, parse_party_reference
from app.utils.config import MAX_AXIS_PARTIES
from app.utils.election import (
    brute_single_peaked,
    enumerate_schemes as _enumerate_schemes,
    is_nash_equilibrium,
    reduced_scores,
)
from app.utils.errors import CapExceededError
from app.utils.recognition import verify_profile_under_axis


def enumerate_schemes(election: Election, max_schemes: Optional[int] = None) -> Iterator[NominationScheme]:
    return _enumerate_schemes(election, max_schemes)


def brute_equilibria(election: Election, max_schemes: Optional[int] = None) -> List[NominationScheme]:
    return [scheme for scheme in enumerate_schemes(election, max_schemes) if is_nash_equilibrium(election, scheme)]


def _party_wins(election: Election, scheme: NominationScheme, party: int) -> bool:
    return party in reduced_scores(election, scheme).winning_parties()


def brute_possible_president(election: Election, party, max_schemes: Optional[int] = None) -> Optional[NominationScheme]:
    party = parse_party_reference(election, party)
    for scheme in enumerate_schemes(election, max_schemes):
        if _party_wins(election, scheme, party):
            return scheme
    return None


def brute_possible_president_excluding(
    election: Election, winner, loser, max_schemes: Optional[int] = None
) -> Optional[NominationScheme]:
    winner = parse_party_reference(election, winner)
    loser = parse_party_reference(election, loser)
    for scheme in enumerate_schemes(election, max_schemes):
        winning = reduced_scores(election, scheme).winning_parties()
        if winner in winning and loser not in winning:
            return scheme
    return None


def brute_necessary_president(election: Election, party, max_schemes: Optional[int] = None) -> bool:
    party = parse_party_reference(election, party)
    return all(_party_wins(election, scheme, party) for scheme in enumerate_schemes(election, max_schemes))


def brute_equilibrium_president(election: Election, party, max_schemes: Optional[int] = None) -> Optional[NominationScheme]:
    party = parse_party_reference(election, party)
    for scheme in enumerate_schemes(election, max_schemes):
        if _party_wins(election, scheme, party) and is_nash_equilibrium(election, scheme):
            return scheme
    return None


def brute_recognize_pasp(election: Election, max_parties: Optional[int] = None) -> Optional[PartyAxis]:
    """Try every party order; the first axis that verifies wins."""
    cap = MAX_AXIS_PARTIES if max_parties is None else max_parties
    if election.n_parties > cap:
        raise CapExceededError(f"{election.n_parties} parties exceed the axis search cap of {cap}")
    for order in permutations(range(election.n_parties)):
        axis = PartyAxis(tuple(order))
        if verify_profile_under_axis(election, axis):
            return axis.canonical()
    return None


__all__ = [
    "enumerate_schemes",
    "brute_equilibria",
    "brute_possible_president",
    "brute_possible_president_excluding",
    "brute_necessary_president",
    "brute_equilibrium_president",
    "brute_recognize_pasp",
    "brute_single_peaked",
]
