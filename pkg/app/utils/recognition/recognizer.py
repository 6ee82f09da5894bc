from typing import Optional

from app.models.election import Election, ExtremalPlacement, PartyAxis
from app.utils.logging_utils import logger

from .axis import verify_profile_under_axis
from .placement import apply_extension, bottom_parties, vote_imposed_extension


def recognize_pasp(election: Election) -> Optional[PartyAxis]:
    """Return a party axis witnessing party-aligned single-peakedness, or None.

    Bottom parties go to the extremes, voters then force further placements
    next to the blocks built so far, and once the placed parties end every
    vote the remaining parties are handled the same way. The resulting axis
    is always checked against the profile before it is returned.
    """
    k = election.n_parties
    if election.n_voters == 0:
        return PartyAxis(tuple(range(k)))

    placement = ExtremalPlacement()
    while len(placement.placed) < k:
        forced = vote_imposed_extension(election, placement)
        if forced is not None:
            party, side = forced
            logger.debug("Voter-forced placement of %s on the %s", election.party_names[party], side.value)
            placement = apply_extension(placement, party, side)
            continue
        bottoms = sorted(bottom_parties(election, placement.placed))
        if len(bottoms) > 2:
            logger.debug(
                "Rejecting profile: %d bottom parties (%s)",
                len(bottoms),
                ", ".join(election.party_names[party] for party in bottoms),
            )
            return None
        placement = placement.extend_left(bottoms[0])
        if len(bottoms) == 2:
            placement = placement.extend_right(bottoms[1])

    axis = placement.to_axis().canonical()
    if not verify_profile_under_axis(election, axis):
        logger.debug("Candidate axis %s failed verification", list(axis.order))
        return None
    return axis
