from typing import Callable, Dict, Tuple

from app.models.election import Election
from app.models.schemas import EuclideanSpec
from app.utils.election import build_election
from app.utils.errors import UnknownFixtureError

from .constants import (
    EUCLIDEAN_SPEC,
    FOUR_PARTY_PARTIES,
    FOUR_PARTY_VOTES,
    NOT_SP_PARTIES,
    NOT_SP_VOTES,
    TWO_PARTY_PARTIES,
    TWO_PARTY_VOTES,
)
from .euclidean import euclidean_election


def _from_parties(parties, votes) -> Election:
    candidates = [candidate for members in parties.values() for candidate in members]
    return build_election(candidates, parties, votes)


def euclidean_fixture_spec() -> EuclideanSpec:
    return EuclideanSpec.model_validate(EUCLIDEAN_SPEC)


_FIXTURES: Dict[str, Callable[[], Election]] = {
    "thm4": lambda: _from_parties(TWO_PARTY_PARTIES, TWO_PARTY_VOTES),
    "thm5": lambda: euclidean_election(euclidean_fixture_spec()),
    "example-sec3": lambda: _from_parties(FOUR_PARTY_PARTIES, FOUR_PARTY_VOTES),
    "intro": lambda: _from_parties(NOT_SP_PARTIES, NOT_SP_VOTES),
}

FIXTURE_NAMES: Tuple[str, ...] = tuple(_FIXTURES)


def load_fixture(name: str) -> Election:
    try:
        factory = _FIXTURES[name]
    except KeyError as exc:
        raise UnknownFixtureError(
            f"unknown fixture '{name}'; choose one of {', '.join(FIXTURE_NAMES)}"
        ) from exc
    return factory()
