from dataclasses import dataclass, field
from typing import Dict, Iterator, Tuple

import numpy as np


@dataclass(frozen=True)
class Vote:
    """Complete strict order over candidate indices, most preferred first."""

    ranking: Tuple[int, ...]
    ranks: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        ranks = np.empty(len(self.ranking), dtype=np.int64)
        ranks[list(self.ranking)] = np.arange(len(self.ranking))
        ranks.setflags(write=False)
        object.__setattr__(self, "ranks", ranks)

    @property
    def top(self) -> int:
        return self.ranking[0]

    @property
    def bottom(self) -> int:
        return self.ranking[-1]

    def prefers(self, first: int, second: int) -> bool:
        return bool(self.ranks[first] < self.ranks[second])


@dataclass(frozen=True)
class Election:
    """Validated election; construct through ``build_election``.

    ``ranks[v, c]`` holds the position of candidate ``c`` in vote ``v`` so
    preference queries never scan a ranking.
    """

    candidates: Tuple[str, ...]
    parties: Tuple[Tuple[int, ...], ...]
    party_names: Tuple[str, ...]
    votes: Tuple[Vote, ...]
    # Human-readable labels, parallel to ``candidates``; empty when none were given.
    display_names: Tuple[str, ...] = field(default=(), repr=False, compare=False)
    party_of: np.ndarray = field(init=False, repr=False, compare=False)
    ranks: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        party_of = np.empty(len(self.candidates), dtype=np.int64)
        for index, members in enumerate(self.parties):
            party_of[list(members)] = index
        party_of.setflags(write=False)
        object.__setattr__(self, "party_of", party_of)

        if self.votes:
            ranks = np.vstack([vote.ranks for vote in self.votes])
        else:
            ranks = np.zeros((0, len(self.candidates)), dtype=np.int64)
        ranks.setflags(write=False)
        object.__setattr__(self, "ranks", ranks)

    @property
    def n_candidates(self) -> int:
        return len(self.candidates)

    @property
    def n_parties(self) -> int:
        return len(self.parties)

    @property
    def n_voters(self) -> int:
        return len(self.votes)

    @property
    def party_sizes(self) -> Tuple[int, ...]:
        return tuple(len(members) for members in self.parties)

    def display_name(self, candidate: int) -> str:
        if self.display_names:
            return self.display_names[candidate]
        return self.candidates[candidate]

    def candidate_index(self, name: str) -> int:
        try:
            return self.candidates.index(name)
        except ValueError as exc:
            raise KeyError(f"Unknown candidate '{name}'") from exc

    def party_index(self, name: str) -> int:
        try:
            return self.party_names.index(name)
        except ValueError as exc:
            raise KeyError(f"Unknown party '{name}'") from exc

    def party_extreme_ranks(self) -> Tuple[np.ndarray, np.ndarray]:
        """Per voter and party: rank of the best and of the worst member."""
        best = np.empty((self.n_voters, self.n_parties), dtype=np.int64)
        worst = np.empty((self.n_voters, self.n_parties), dtype=np.int64)
        for index, members in enumerate(self.parties):
            block = self.ranks[:, list(members)]
            best[:, index] = block.min(axis=1, initial=self.n_candidates)
            worst[:, index] = block.max(axis=1, initial=-1)
        return best, worst


@dataclass(frozen=True)
class NominationScheme:
    """One nominee per party, indexed by party."""

    nominees: Tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.nominees)

    def __len__(self) -> int:
        return len(self.nominees)

    def nominee(self, party: int) -> int:
        return self.nominees[party]

    def replace(self, party: int, candidate: int) -> "NominationScheme":
        nominees = list(self.nominees)
        nominees[party] = candidate
        return NominationScheme(tuple(nominees))

    def names(self, election: Election) -> Tuple[str, ...]:
        return tuple(election.candidates[candidate] for candidate in self.nominees)


@dataclass(frozen=True)
class ScoreVector:
    """Plurality score of each party's nominee, indexed by party."""

    scores: Tuple[int, ...]

    def __getitem__(self, party: int) -> int:
        return self.scores[party]

    def __len__(self) -> int:
        return len(self.scores)

    @property
    def total(self) -> int:
        return sum(self.scores)

    @property
    def maximum(self) -> int:
        return max(self.scores, default=0)

    def winning_parties(self) -> Tuple[int, ...]:
        best = self.maximum
        return tuple(party for party, score in enumerate(self.scores) if score == best)

    def by_candidate(self, scheme: NominationScheme) -> Dict[int, int]:
        return dict(zip(scheme.nominees, self.scores))


@dataclass(frozen=True)
class PartyAxis:
    """Left-to-right order over party indices."""

    order: Tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.order)

    def __len__(self) -> int:
        return len(self.order)

    def position(self, party: int) -> int:
        return self.order.index(party)

    def positions(self) -> np.ndarray:
        positions = np.empty(len(self.order), dtype=np.int64)
        positions[list(self.order)] = np.arange(len(self.order))
        return positions

    def reversed(self) -> "PartyAxis":
        return PartyAxis(tuple(reversed(self.order)))

    def canonical(self) -> "PartyAxis":
        """Return whichever of the axis and its reverse starts with the smaller party index."""
        if self.order and self.order[0] > self.order[-1]:
            return self.reversed()
        return self

    def same_up_to_reversal(self, other: "PartyAxis") -> bool:
        return self.canonical() == other.canonical()

    def names(self, election: Election) -> Tuple[str, ...]:
        return tuple(election.party_names[party] for party in self.order)


@dataclass(frozen=True)
class ExtremalPlacement:
    """Partially built axis: ``left`` holds the leftmost parties, ``right`` the rightmost."""

    left: Tuple[int, ...] = ()
    right: Tuple[int, ...] = ()

    @property
    def placed(self) -> Tuple[int, ...]:
        return self.left + self.right

    def is_empty(self) -> bool:
        return not self.left and not self.right

    def extend_left(self, party: int) -> "ExtremalPlacement":
        return ExtremalPlacement(self.left + (party,), self.right)

    def extend_right(self, party: int) -> "ExtremalPlacement":
        return ExtremalPlacement(self.left, (party,) + self.right)

    def to_axis(self) -> PartyAxis:
        return PartyAxis(self.left + self.right)


@dataclass(frozen=True)
class PartyExtrema:
    """A voter's most- and least-preferred member of one party."""

    party: int
    best: int
    worst: int


@dataclass(frozen=True)
class VoterPartition:
    """Loyal voters per party and swing voters per adjacent axis pair.

    ``swing[t]`` holds the voters split between the parties at axis
    positions ``t`` and ``t + 1``.
    """

    axis: PartyAxis
    loyal: Tuple[Tuple[int, ...], ...]
    swing: Tuple[Tuple[int, ...], ...]

    def loyal_voters(self, party: int) -> Tuple[int, ...]:
        return self.loyal[party]

    def swing_voters(self, left_party: int, right_party: int) -> Tuple[int, ...]:
        left_position = self.axis.position(left_party)
        right_position = self.axis.position(right_party)
        if abs(left_position - right_position) != 1:
            return ()
        return self.swing[min(left_position, right_position)]

    def all_voters(self) -> Tuple[int, ...]:
        voters = [voter for group in self.loyal for voter in group]
        voters.extend(voter for group in self.swing for voter in group)
        return tuple(sorted(voters))


@dataclass(frozen=True)
class PresidentWitness:
    """A scheme in which ``party`` wins with ``score`` votes."""

    party: int
    scheme: NominationScheme
    score: int


def parse_party_reference(election: Election, reference) -> int:
    """Accept a party index or party name."""
    if isinstance(reference, (int, np.integer)):
        index = int(reference)
        if not 0 <= index < election.n_parties:
            raise KeyError(f"Party index {index} out of range")
        return index
    return election.party_index(str(reference))


__all__ = [
    "Vote",
    "Election",
    "NominationScheme",
    "ScoreVector",
    "PartyAxis",
    "ExtremalPlacement",
    "PartyExtrema",
    "VoterPartition",
    "PresidentWitness",
    "parse_party_reference",
]
