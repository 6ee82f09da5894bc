import logging
from typing import Optional, Sequence

from app.models.election import Election, NominationScheme, PartyAxis, PresidentWitness, parse_party_reference
from app.utils.election import is_nash_equilibrium, reduced_scores
from app.utils.errors import ElectionValidationError, InvariantViolation
from app.utils.logging_utils import log_query_step
from app.utils.nomination import build_score_chain, build_tables, lowest_winning_score, partition_voters
from app.utils.nomination import centrist_equilibrium as _centrist_equilibrium

from .recognition_service import resolve_axis


def _verified(election: Election, party: int, scheme: NominationScheme, target: int) -> PresidentWitness:
    scores = reduced_scores(election, scheme)
    if scores[party] != target or party not in scores.winning_parties() or not is_nash_equilibrium(election, scheme):
        log_query_step(
            "equilibrium",
            election.party_names[party],
            f"witness {scheme.names(election)} failed verification at score {target}",
            logging.ERROR,
        )
        raise InvariantViolation(
            f"equilibrium witness {scheme.names(election)} for {election.party_names[party]} failed verification"
        )
    return PresidentWitness(party=party, scheme=scheme, score=target)


def equilibrium_president(election: Election, party, axis: Optional[PartyAxis] = None) -> Optional[PresidentWitness]:
    """Nash equilibrium in which ``party`` wins, with its winning score, or None."""
    party = parse_party_reference(election, party)
    axis = resolve_axis(election, axis)
    label = election.party_names[party]

    if election.n_parties == 1:
        scheme = NominationScheme((election.parties[0][0],))
        return _verified(election, party, scheme, election.n_voters)

    partition = partition_voters(election, axis)
    chain = build_score_chain(election, axis, partition)
    mirrored = chain.mirrored()
    kappa = axis.position(party)
    for target in range(lowest_winning_score(election), election.n_voters + 1):
        table = build_tables(chain, kappa, target, mirrored)
        scheme = table.witness()
        if scheme is not None:
            log_query_step("equilibrium", label, f"equilibrium found at score {target}")
            return _verified(election, party, scheme, target)
    log_query_step("equilibrium", label, "no equilibrium with this party winning")
    return None


def equilibrium_exists(election: Election, axis: Optional[PartyAxis] = None) -> Optional[PresidentWitness]:
    axis = resolve_axis(election, axis)
    for party in range(election.n_parties):
        witness = equilibrium_president(election, party, axis)
        if witness is not None:
            return witness
    return None


def centrist_equilibrium(election: Election, candidate_axis: Sequence) -> NominationScheme:
    """Accepts the candidate axis as indices or candidate names."""
    try:
        indices = [
            candidate if isinstance(candidate, int) else election.candidate_index(str(candidate))
            for candidate in candidate_axis
        ]
    except KeyError as exc:
        raise ElectionValidationError(str(exc.args[0])) from exc
    scheme = _centrist_equilibrium(election, indices)
    log_query_step("centrist", None, f"scheme {scheme.names(election)}")
    return scheme
