from enum import Enum
from typing import FrozenSet, Iterable, Optional, Tuple

import numpy as np

from app.models.election import Election, ExtremalPlacement


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


def bottom_parties(election: Election, placed: Iterable[int] = ()) -> FrozenSet[int]:
    """Parties owning some voter's last-ranked candidate among the unplaced parties."""
    placed = set(placed)
    active = np.array([party not in placed for party in election.party_of], dtype=bool)
    if election.n_voters == 0 or not active.any():
        return frozenset()
    masked = np.where(active[None, :], election.ranks, -1)
    last = masked.argmax(axis=1)
    return frozenset(int(party) for party in np.unique(election.party_of[last]))


def vote_imposed_extension(election: Election, placement: ExtremalPlacement) -> Optional[Tuple[int, Side]]:
    """Next party forced by the first voter whose placed candidates are not a suffix.

    Returns ``(party, Side.LEFT)`` when the party directly follows the left
    block, ``(party, Side.RIGHT)`` when it directly precedes the right block,
    and ``None`` when every vote ends with the placed candidates.
    """
    placed = placement.placed
    if not placed or election.n_voters == 0:
        return None
    placed_mask = np.isin(election.party_of, placed)
    if placed_mask.all():
        return None
    ranks = election.ranks
    worst_unplaced = ranks[:, ~placed_mask].max(axis=1)
    best_placed = ranks[:, placed_mask].min(axis=1)
    violating = np.flatnonzero(worst_unplaced > best_placed)
    if violating.size == 0:
        return None
    voter = int(violating[0])
    ranking = election.votes[voter].ranking
    party_a = int(election.party_of[ranking[worst_unplaced[voter]]])
    party_b = int(election.party_of[ranking[best_placed[voter]]])
    if party_b in placement.right:
        return party_a, Side.LEFT
    return party_a, Side.RIGHT


def apply_extension(placement: ExtremalPlacement, party: int, side: Side) -> ExtremalPlacement:
    if side is Side.LEFT:
        return placement.extend_left(party)
    return placement.extend_right(party)
