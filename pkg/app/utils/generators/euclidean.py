from fractions import Fraction
from typing import List

from app.models.election import Election
from app.models.schemas import EuclideanSpec
from app.utils.election import build_election
from app.utils.errors import EuclideanTieError


def euclidean_ranking(position: Fraction, spec: EuclideanSpec) -> List[str]:
    """Candidates by strictly increasing distance from ``position``."""
    by_distance = sorted(spec.candidates.items(), key=lambda item: abs(item[1] - position))
    for (first, first_at), (second, second_at) in zip(by_distance, by_distance[1:]):
        if abs(first_at - position) == abs(second_at - position):
            raise EuclideanTieError(
                f"voter at {position} is equidistant from '{first}' and '{second}'"
            )
    return [candidate for candidate, _ in by_distance]


def euclidean_election(spec: EuclideanSpec) -> Election:
    votes = []
    for group in spec.voters:
        ranking = euclidean_ranking(group.position, spec)
        votes.extend([ranking] * group.multiplicity)
    parties = {
        party: [candidate for candidate in spec.candidates if spec.parties[candidate] == party]
        for party in spec.ordered_parties()
    }
    return build_election(list(spec.candidates), parties, votes)
