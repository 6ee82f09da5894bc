from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from app.models.election import Election, PartyAxis, VoterPartition

from .partition import partition_voters


def swing_preference_counts(election: Election, partition: VoterPartition) -> Tuple[np.ndarray, ...]:
    """Per adjacent axis pair: ``counts[a, b]`` swing voters preferring left member a to right member b."""
    order = partition.axis.order
    counts = []
    for slot, voters in enumerate(partition.swing):
        left_members = list(election.parties[order[slot]])
        right_members = list(election.parties[order[slot + 1]])
        if not voters:
            counts.append(np.zeros((len(left_members), len(right_members)), dtype=np.int64))
            continue
        left_ranks = election.ranks[np.ix_(list(voters), left_members)]
        right_ranks = election.ranks[np.ix_(list(voters), right_members)]
        prefers_left = left_ranks[:, :, None] < right_ranks[:, None, :]
        counts.append(prefers_left.sum(axis=0).astype(np.int64))
    return tuple(counts)


@dataclass(frozen=True)
class ScoreChain:
    """The election seen along a party axis.

    Slot ``t`` is the party at axis position ``t``; nominees are addressed by
    their local index inside ``members[t]``. The score of a nominee depends only
    on its own slot and the nominees of the two neighbouring slots.
    """

    parties: Tuple[int, ...]
    members: Tuple[Tuple[int, ...], ...]
    loyal: Tuple[int, ...]
    swing_sizes: Tuple[int, ...]
    shares: Tuple[np.ndarray, ...]

    @property
    def n_slots(self) -> int:
        return len(self.members)

    def size(self, slot: int) -> int:
        return len(self.members[slot])

    def right_share(self, slot: int, current: int, following: int) -> int:
        return int(self.shares[slot][current, following])

    def left_share(self, slot: int, preceding: int, current: int) -> int:
        return self.swing_sizes[slot - 1] - int(self.shares[slot - 1][preceding, current])

    def score(self, slot: int, preceding: Optional[int], current: int, following: Optional[int]) -> int:
        total = self.loyal[slot]
        if slot > 0:
            total += self.left_share(slot, preceding, current)
        if slot < self.n_slots - 1:
            total += self.right_share(slot, current, following)
        return total

    def mirrored(self) -> "ScoreChain":
        return ScoreChain(
            parties=tuple(reversed(self.parties)),
            members=tuple(reversed(self.members)),
            loyal=tuple(reversed(self.loyal)),
            swing_sizes=tuple(reversed(self.swing_sizes)),
            shares=tuple(
                (size - table).T for size, table in zip(reversed(self.swing_sizes), reversed(self.shares))
            ),
        )

    def to_candidates(self, locals_by_slot) -> Tuple[int, ...]:
        return tuple(self.members[slot][local] for slot, local in enumerate(locals_by_slot))


def build_score_chain(election: Election, axis: PartyAxis, partition: Optional[VoterPartition] = None) -> ScoreChain:
    partition = partition or partition_voters(election, axis)
    order = axis.order
    return ScoreChain(
        parties=tuple(order),
        members=tuple(tuple(election.parties[party]) for party in order),
        loyal=tuple(len(partition.loyal[party]) for party in order),
        swing_sizes=tuple(len(group) for group in partition.swing),
        shares=swing_preference_counts(election, partition),
    )


def lowest_winning_score(election: Election) -> int:
    """A winner never scores below the average score."""
    if election.n_parties == 0:
        return 0
    return -(-election.n_voters // election.n_parties)
