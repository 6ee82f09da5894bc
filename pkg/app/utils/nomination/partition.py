from typing import Optional, Tuple

from app.models.election import Election, PartyAxis, Vote, VoterPartition
from app.utils.errors import NotPaspError
from app.utils.recognition import check_axis


def two_possible_parties(vote: Vote, axis: PartyAxis, election: Election) -> Tuple[int, Optional[int]]:
    """The only parties this voter can ever vote for: its top party and maybe one neighbour.

    The second party is ``None`` when the voter ranks its top party's members
    above everybody else.
    """
    party_of = election.party_of
    top_party = int(party_of[vote.top])
    size = len(election.parties[top_party])
    if all(party_of[candidate] == top_party for candidate in vote.ranking[:size]):
        return top_party, None
    other = next(
        int(party_of[candidate])
        for candidate in vote.ranking[: size + 1]
        if party_of[candidate] != top_party
    )
    if abs(axis.position(top_party) - axis.position(other)) != 1:
        raise NotPaspError(
            f"profile not PASP under axis: voter prefers {election.party_names[top_party]} "
            f"then {election.party_names[other]}, which are not adjacent"
        )
    return top_party, other


def partition_voters(election: Election, axis: PartyAxis) -> VoterPartition:
    check_axis(election, axis)
    loyal = [[] for _ in range(election.n_parties)]
    swing = [[] for _ in range(max(election.n_parties - 1, 0))]
    for voter, vote in enumerate(election.votes):
        top_party, other = two_possible_parties(vote, axis, election)
        if other is None:
            loyal[top_party].append(voter)
        else:
            swing[min(axis.position(top_party), axis.position(other))].append(voter)
    return VoterPartition(
        axis=axis,
        loyal=tuple(tuple(group) for group in loyal),
        swing=tuple(tuple(group) for group in swing),
    )
