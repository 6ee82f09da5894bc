from typing import List, Sequence, Tuple

from app.models.election import Election, NominationScheme
from app.utils.election import is_nash_equilibrium, is_single_peaked, winning_parties
from app.utils.errors import (
    AxisNotSinglePeakedError,
    ElectionValidationError,
    InvariantViolation,
    PartiesNotContiguousError,
    TooManyPartiesError,
)
from app.utils.logging_utils import logger


def party_blocks(election: Election, candidate_axis: Sequence[int]) -> Tuple[Tuple[int, Tuple[int, ...]], ...]:
    """Parties in axis order, each with its members in axis order."""
    if sorted(candidate_axis) != list(range(election.n_candidates)):
        raise ElectionValidationError("candidate axis is not a permutation of the candidates")
    blocks: List[Tuple[int, List[int]]] = []
    for candidate in candidate_axis:
        party = int(election.party_of[candidate])
        if blocks and blocks[-1][0] == party:
            blocks[-1][1].append(candidate)
            continue
        if any(seen == party for seen, _ in blocks):
            raise PartiesNotContiguousError(
                f"party {election.party_names[party]} is split on the candidate axis"
            )
        blocks.append((party, [candidate]))
    return tuple((party, tuple(members)) for party, members in blocks)


def centrist_schemes(election: Election, candidate_axis: Sequence[int]) -> List[NominationScheme]:
    """Leftmost party takes its rightmost member, rightmost party its leftmost; the middle party varies."""
    blocks = party_blocks(election, candidate_axis)
    if len(blocks) > 3:
        raise TooManyPartiesError(f"centrist schemes need at most 3 parties, got {len(blocks)}")
    if len(blocks) == 1:
        party, members = blocks[0]
        return [NominationScheme((members[0],))]
    fixed = {blocks[0][0]: blocks[0][1][-1], blocks[-1][0]: blocks[-1][1][0]}
    middle_options = blocks[1][1] if len(blocks) == 3 else (None,)
    schemes = []
    for middle in middle_options:
        nominees = dict(fixed)
        if middle is not None:
            nominees[blocks[1][0]] = middle
        schemes.append(NominationScheme(tuple(nominees[party] for party in range(election.n_parties))))
    return schemes


def centrist_equilibrium(election: Election, candidate_axis: Sequence[int]) -> NominationScheme:
    """Nash equilibrium among the centrist schemes of a single-peaked election with up to three parties."""
    if election.n_parties > 3:
        raise TooManyPartiesError(f"centrist equilibrium needs at most 3 parties, got {election.n_parties}")
    blocks = party_blocks(election, candidate_axis)
    for voter, vote in enumerate(election.votes):
        if not is_single_peaked(vote.ranking, candidate_axis):
            raise AxisNotSinglePeakedError(f"voter {voter} is not single-peaked on the candidate axis")

    schemes = centrist_schemes(election, candidate_axis)
    if len(blocks) == 3:
        middle_party = blocks[1][0]
        middle_wins = [scheme for scheme in schemes if middle_party in winning_parties(election, scheme)]
        ordered = middle_wins + [scheme for scheme in schemes if scheme not in middle_wins]
    else:
        ordered = schemes
    for scheme in ordered:
        if is_nash_equilibrium(election, scheme):
            return scheme
    logger.error("No centrist scheme is a Nash equilibrium for axis %s", list(candidate_axis))
    raise InvariantViolation("no centrist scheme is a Nash equilibrium")
