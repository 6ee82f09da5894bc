from dataclasses import dataclass
from itertools import product
from math import prod
from typing import FrozenSet, Iterator, List, Optional

from app.models.election import Election, NominationScheme, ScoreVector
from app.utils.config import MAX_SCHEMES
from app.utils.errors import CapExceededError

from .plurality import reduced_scores


@dataclass(frozen=True)
class SchemeEvaluation:
    scheme: NominationScheme
    scores: ScoreVector
    winners: FrozenSet[int]


def scheme_count(election: Election) -> int:
    return prod(election.party_sizes)


def enumerate_schemes(election: Election, max_schemes: Optional[int] = None) -> Iterator[NominationScheme]:
    """Yield every nomination scheme once, lexicographically by party then candidate order.

    Raises CapExceededError up front when the scheme space is larger than the cap.
    """
    cap = MAX_SCHEMES if max_schemes is None else max_schemes
    total = scheme_count(election)
    if total > cap:
        raise CapExceededError(f"{total} nomination schemes exceed the cap of {cap}")
    for nominees in product(*election.parties):
        yield NominationScheme(tuple(nominees))


def scheme_score_table(election: Election, max_schemes: Optional[int] = None) -> List[SchemeEvaluation]:
    table = []
    for scheme in enumerate_schemes(election, max_schemes):
        scores = reduced_scores(election, scheme)
        table.append(
            SchemeEvaluation(
                scheme=scheme,
                scores=scores,
                winners=frozenset(scheme.nominee(party) for party in scores.winning_parties()),
            )
        )
    return table
