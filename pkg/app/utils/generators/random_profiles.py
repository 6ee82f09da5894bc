from typing import List, Sequence, Tuple

import numpy as np

from app.models.election import Election, PartyAxis
from app.utils.election import build_election
from app.utils.errors import ElectionValidationError, TooManyPartiesError


def _layout(sizes: Sequence[int]) -> Tuple[List[str], List[str], List[List[int]]]:
    if not sizes:
        raise ElectionValidationError("at least one party is required")
    for index, size in enumerate(sizes):
        if int(size) < 1:
            raise ElectionValidationError(f"party {index} must have at least one candidate", party_index=index)
    names: List[str] = []
    members: List[List[int]] = []
    for size in sizes:
        start = len(names)
        members.append(list(range(start, start + int(size))))
        names.extend(f"c{start + offset + 1}" for offset in range(int(size)))
    party_names = [f"P{index + 1}" for index in range(len(sizes))]
    return names, party_names, members


def _assemble(names, party_names, members, rankings) -> Election:
    parties = {name: [names[c] for c in group] for name, group in zip(party_names, members)}
    votes = [[names[c] for c in ranking] for ranking in rankings]
    return build_election(names, parties, votes)


def single_peaked_vote(rng: np.random.Generator, candidate_axis: Sequence[int]) -> List[int]:
    """Random peak, then a fair coin decides which side of the interval grows next."""
    m = len(candidate_axis)
    low = high = int(rng.integers(m))
    ranking = [candidate_axis[low]]
    while len(ranking) < m:
        if low == 0:
            grow_left = False
        elif high == m - 1:
            grow_left = True
        else:
            grow_left = bool(rng.random() < 0.5)
        if grow_left:
            low -= 1
            ranking.append(candidate_axis[low])
        else:
            high += 1
            ranking.append(candidate_axis[high])
    return ranking


def _check_voters(n_voters: int) -> None:
    if n_voters < 0:
        raise ElectionValidationError("voter count must be non-negative")


def random_pasp(seed: int, sizes: Sequence[int], n_voters: int) -> Tuple[Election, PartyAxis]:
    """PASP election with its witnessing party axis; each voter draws a private perceived axis."""
    _check_voters(n_voters)
    names, party_names, members = _layout(sizes)
    rng = np.random.default_rng(seed)
    order = [int(party) for party in rng.permutation(len(members))]
    rankings = []
    for _ in range(n_voters):
        perceived = [int(c) for party in order for c in rng.permutation(members[party])]
        rankings.append(single_peaked_vote(rng, perceived))
    return _assemble(names, party_names, members, rankings), PartyAxis(tuple(order))


def random_sp_pasp(seed: int, sizes: Sequence[int], n_voters: int) -> Tuple[Election, Tuple[int, ...]]:
    """Single-peaked election over one candidate axis with contiguous parties."""
    if len(sizes) > 3:
        raise TooManyPartiesError(f"single-peaked PASP generation supports at most 3 parties, got {len(sizes)}")
    _check_voters(n_voters)
    names, party_names, members = _layout(sizes)
    rng = np.random.default_rng(seed)
    order = [int(party) for party in rng.permutation(len(members))]
    candidate_axis = tuple(int(c) for party in order for c in rng.permutation(members[party]))
    rankings = [single_peaked_vote(rng, candidate_axis) for _ in range(n_voters)]
    return _assemble(names, party_names, members, rankings), candidate_axis


def random_profile(seed: int, sizes: Sequence[int], n_voters: int) -> Election:
    """Uniformly random complete orders; no structure guaranteed."""
    _check_voters(n_voters)
    names, party_names, members = _layout(sizes)
    rng = np.random.default_rng(seed)
    rankings = [[int(c) for c in rng.permutation(len(names))] for _ in range(n_voters)]
    return _assemble(names, party_names, members, rankings)
