from typing import Optional, Tuple

import numpy as np

from app.models.election import Election, PartyAxis, PartyExtrema, Vote
from app.utils.errors import ElectionValidationError


def check_axis(election: Election, axis: PartyAxis) -> None:
    if sorted(axis.order) != list(range(election.n_parties)):
        raise ElectionValidationError(
            f"party axis {list(axis.order)} is not a permutation of {election.n_parties} parties"
        )


def reverse_axis(axis: PartyAxis) -> PartyAxis:
    return axis.reversed()


def canonical_axis(axis: PartyAxis) -> PartyAxis:
    return axis.canonical()


def _conditions_hold(best: np.ndarray, worst: np.ndarray, top_parties: np.ndarray, axis: PartyAxis) -> np.ndarray:
    """Row-wise check of the three per-vote axis conditions.

    ``best``/``worst`` hold, per voter and party, the rank of the party's most
    and least preferred member. Smaller rank means more preferred.
    """
    order = list(axis.order)
    k = len(order)
    n = best.shape[0]
    h = best[:, order]
    low = worst[:, order]
    peak = axis.positions()[top_parties]
    slots = np.arange(k)

    # right of the peak: l_t beats h_{t+1}
    right_ok = low[:, :-1] < h[:, 1:]
    right_needed = slots[None, :-1] > peak[:, None]
    right = np.all(right_ok | ~right_needed, axis=1)

    # left of the peak: l_t beats h_{t-1}
    left_ok = low[:, 1:] < h[:, :-1]
    left_needed = slots[None, 1:] < peak[:, None]
    left = np.all(left_ok | ~left_needed, axis=1)

    rows = np.arange(n)
    interior = (peak > 0) & (peak < k - 1)
    top_worst = low[rows, peak]
    toward_left = top_worst < h[rows, np.clip(peak - 1, 0, k - 1)]
    toward_right = top_worst < h[rows, np.clip(peak + 1, 0, k - 1)]
    around_peak = ~interior | toward_left | toward_right
    return around_peak & left & right


def _vote_extreme_ranks(vote: Vote, election: Election) -> Tuple[np.ndarray, np.ndarray]:
    best = np.array([[vote.ranks[list(members)].min() for members in election.parties]])
    worst = np.array([[vote.ranks[list(members)].max() for members in election.parties]])
    return best, worst


def party_extrema(vote: Vote, election: Election) -> Tuple[PartyExtrema, ...]:
    extrema = []
    for party, members in enumerate(election.parties):
        ordered = sorted(members, key=lambda candidate: vote.ranks[candidate])
        extrema.append(PartyExtrema(party=party, best=ordered[0], worst=ordered[-1]))
    return tuple(extrema)


def verify_vote_under_axis(vote: Vote, axis: PartyAxis, election: Election) -> bool:
    check_axis(election, axis)
    best, worst = _vote_extreme_ranks(vote, election)
    top = np.array([election.party_of[vote.top]])
    return bool(_conditions_hold(best, worst, top, axis)[0])


def violating_voters(election: Election, axis: PartyAxis) -> Tuple[int, ...]:
    """Indices of voters whose vote breaks the axis conditions."""
    check_axis(election, axis)
    if election.n_voters == 0:
        return ()
    best, worst = election.party_extreme_ranks()
    top_parties = election.party_of[election.ranks.argmin(axis=1)]
    satisfied = _conditions_hold(best, worst, top_parties, axis)
    return tuple(int(voter) for voter in np.flatnonzero(~satisfied))


def verify_profile_under_axis(election: Election, axis: PartyAxis) -> bool:
    return not violating_voters(election, axis)


def perceived_axis(vote: Vote, axis: PartyAxis, election: Election) -> Optional[Tuple[int, ...]]:
    """Candidate axis refining ``axis`` on which ``vote`` is single-peaked, if any.

    Parties left of the peak are laid out with their least preferred member
    outermost, parties right of it mirror that. The rest of the top party sits
    on the side whose neighbour it entirely beats.
    """
    if not verify_vote_under_axis(vote, axis, election):
        return None
    order = axis.order
    k = len(order)
    ranks = vote.ranks
    top = vote.top
    peak = axis.position(int(election.party_of[top]))

    def rank_of(candidate: int) -> int:
        return int(ranks[candidate])

    rest = sorted((c for c in election.parties[order[peak]] if c != top), key=rank_of)
    if peak == 0:
        rest_on_left = True
    elif peak == k - 1:
        rest_on_left = False
    else:
        top_worst = max(rank_of(c) for c in election.parties[order[peak]])
        left_best = min(rank_of(c) for c in election.parties[order[peak - 1]])
        rest_on_left = top_worst < left_best

    layout = []
    for slot in range(peak):
        layout.extend(sorted(election.parties[order[slot]], key=rank_of, reverse=True))
    if rest_on_left:
        layout.extend(reversed(rest))
    layout.append(top)
    if not rest_on_left:
        layout.extend(rest)
    for slot in range(peak + 1, k):
        layout.extend(sorted(election.parties[order[slot]], key=rank_of))
    return tuple(layout)
