from itertools import permutations
from typing import Optional, Sequence, Tuple

from app.models.election import Election
from app.utils.config import MAX_SP_CANDIDATES
from app.utils.errors import CapExceededError


def is_single_peaked(ranking: Sequence[int], candidate_axis: Sequence[int]) -> bool:
    """Every prefix of the ranking must be a contiguous interval of the axis."""
    if len(ranking) != len(candidate_axis):
        return False
    position = {candidate: index for index, candidate in enumerate(candidate_axis)}
    if len(position) != len(candidate_axis) or any(candidate not in position for candidate in ranking):
        return False
    if not ranking:
        return True
    low = high = position[ranking[0]]
    for candidate in ranking[1:]:
        where = position[candidate]
        if where == low - 1:
            low = where
        elif where == high + 1:
            high = where
        else:
            return False
    return True


def is_profile_single_peaked(election: Election, candidate_axis: Sequence[int]) -> bool:
    return all(is_single_peaked(vote.ranking, candidate_axis) for vote in election.votes)


def brute_single_peaked(election: Election, max_candidates: Optional[int] = None) -> Optional[Tuple[int, ...]]:
    """Search every candidate axis for one making the whole profile single-peaked."""
    cap = MAX_SP_CANDIDATES if max_candidates is None else max_candidates
    if election.n_candidates > cap:
        raise CapExceededError(
            f"{election.n_candidates} candidates exceed the single-peaked search cap of {cap}"
        )
    for axis in permutations(range(election.n_candidates)):
        if len(axis) > 1 and axis[0] > axis[-1]:
            continue
        if is_profile_single_peaked(election, axis):
            return axis
    return None
