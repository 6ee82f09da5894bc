import logging
from typing import Optional

from app.models.election import Election, NominationScheme, PartyAxis, PresidentWitness, parse_party_reference
from app.utils.election import reduced_scores
from app.utils.errors import ElectionValidationError, InvariantViolation
from app.utils.logging_utils import log_query_step
from app.utils.nomination import build_pp_tables, build_score_chain, lowest_winning_score, partition_voters

from .recognition_service import resolve_axis


def _search(election: Election, party: int, axis: PartyAxis, excluded: Optional[int]) -> Optional[PresidentWitness]:
    if election.n_parties == 1:
        scheme = NominationScheme((election.parties[0][0],))
        return PresidentWitness(party=party, scheme=scheme, score=election.n_voters)
    chain = build_score_chain(election, axis, partition_voters(election, axis))
    mirrored = chain.mirrored()
    kappa = axis.position(party)
    excluded_slot = axis.position(excluded) if excluded is not None else None
    for target in range(lowest_winning_score(election), election.n_voters + 1):
        scheme = build_pp_tables(chain, kappa, target, excluded_slot, mirrored).witness()
        if scheme is not None:
            return _verified(election, party, scheme, target, excluded)
    return None


def _verified(election: Election, party: int, scheme: NominationScheme, target: int, excluded: Optional[int]) -> PresidentWitness:
    scores = reduced_scores(election, scheme)
    winners = scores.winning_parties()
    if scores[party] != target or party not in winners or (excluded is not None and excluded in winners):
        log_query_step(
            "possible",
            election.party_names[party],
            f"witness {scheme.names(election)} failed verification at score {target}",
            logging.ERROR,
        )
        raise InvariantViolation(f"possible-president witness {scheme.names(election)} failed verification")
    return PresidentWitness(party=party, scheme=scheme, score=target)


def possible_president(election: Election, party, axis: Optional[PartyAxis] = None) -> Optional[PresidentWitness]:
    """Some scheme in which ``party`` wins, or None."""
    party = parse_party_reference(election, party)
    axis = resolve_axis(election, axis)
    witness = _search(election, party, axis, None)
    log_query_step("possible", election.party_names[party], "possible" if witness else "impossible")
    return witness


def possible_president_excluding(
    election: Election, winner, loser, axis: Optional[PartyAxis] = None
) -> Optional[PresidentWitness]:
    """Some scheme in which ``winner`` wins and ``loser`` does not."""
    winner = parse_party_reference(election, winner)
    loser = parse_party_reference(election, loser)
    if winner == loser:
        raise ElectionValidationError("the winning and the excluded party must differ", party_index=winner)
    axis = resolve_axis(election, axis)
    return _search(election, winner, axis, loser)


def necessary_president(election: Election, party, axis: Optional[PartyAxis] = None) -> bool:
    """True iff ``party`` wins under every nomination scheme."""
    party = parse_party_reference(election, party)
    axis = resolve_axis(election, axis)
    for rival in range(election.n_parties):
        if rival == party:
            continue
        if _search(election, rival, axis, party) is not None:
            log_query_step(
                "necessary",
                election.party_names[party],
                f"{election.party_names[rival]} can win while it loses",
            )
            return False
    log_query_step("necessary", election.party_names[party], "wins under every scheme")
    return True
