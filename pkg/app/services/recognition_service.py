from typing import Optional

from app.models.election import Election, PartyAxis
from app.utils.errors import NotPaspError
from app.utils.logging_utils import log_query_step
from app.utils.recognition import check_axis, recognize_pasp, verify_profile_under_axis


def recognize(election: Election) -> Optional[PartyAxis]:
    axis = recognize_pasp(election)
    if axis is None:
        log_query_step("recognize", None, "profile is not party-aligned single-peaked")
    else:
        log_query_step("recognize", None, f"axis {' < '.join(axis.names(election))}")
    return axis


def resolve_axis(election: Election, axis: Optional[PartyAxis] = None) -> PartyAxis:
    """Return a verified party axis or raise NotPaspError."""
    if axis is not None:
        check_axis(election, axis)
        if not verify_profile_under_axis(election, axis):
            raise NotPaspError("profile is not PASP under the supplied axis")
        return axis
    found = recognize_pasp(election)
    if found is None:
        raise NotPaspError("profile is not party-aligned single-peaked")
    return found
