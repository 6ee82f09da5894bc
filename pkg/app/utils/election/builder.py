from typing import Mapping, Optional, Sequence, Tuple, Union

from app.models.election import Election, Vote
from app.utils.errors import ElectionValidationError

PartySpec = Union[Mapping[str, Sequence[str]], Sequence[Sequence[str]]]


def _split_party_spec(parties: PartySpec, party_names: Optional[Sequence[str]]):
    if isinstance(parties, Mapping):
        names = [str(name) for name in parties.keys()]
        members = [list(group) for group in parties.values()]
    else:
        members = [list(group) for group in parties]
        names = list(party_names) if party_names is not None else [f"P{index + 1}" for index in range(len(members))]
    if len(names) != len(members):
        raise ElectionValidationError(
            f"{len(names)} party names given for {len(members)} parties"
        )
    return names, members


def _validate_identifiers(candidates: Sequence[str], names: Sequence[str]) -> None:
    seen = set()
    for candidate in candidates:
        if candidate in seen:
            raise ElectionValidationError(f"duplicate candidate identifier '{candidate}'")
        seen.add(candidate)
    seen_parties = set()
    for index, name in enumerate(names):
        if name in seen_parties:
            raise ElectionValidationError(f"duplicate party name '{name}'", party_index=index)
        seen_parties.add(name)


def _display_labels(candidates: Sequence[str], display_names: Optional[Mapping[str, str]]) -> Tuple[str, ...]:
    if not display_names:
        return ()
    unknown = [candidate for candidate in display_names if candidate not in candidates]
    if unknown:
        raise ElectionValidationError(f"display names given for unknown candidates: {', '.join(unknown)}")
    labels = tuple(display_names.get(candidate, candidate) for candidate in candidates)
    return labels if labels != tuple(candidates) else ()


def _index_parties(candidate_index: Mapping[str, int], members: Sequence[Sequence[str]]):
    owner = {}
    indexed = []
    for party, group in enumerate(members):
        if not group:
            raise ElectionValidationError(f"party {party} is empty", party_index=party)
        indices = []
        for candidate in group:
            if candidate not in candidate_index:
                raise ElectionValidationError(
                    f"party {party} lists unknown candidate '{candidate}'", party_index=party
                )
            if candidate in owner:
                raise ElectionValidationError(
                    f"candidate '{candidate}' belongs to parties {owner[candidate]} and {party}",
                    party_index=party,
                )
            owner[candidate] = party
            indices.append(candidate_index[candidate])
        indexed.append(tuple(sorted(indices)))
    missing = [candidate for candidate in candidate_index if candidate not in owner]
    if missing:
        raise ElectionValidationError(f"candidates without a party: {', '.join(missing)}")
    return tuple(indexed)


def _index_vote(candidate_index: Mapping[str, int], ranking: Sequence[str], voter: int) -> Vote:
    seen = set()
    indices = []
    for candidate in ranking:
        if candidate not in candidate_index:
            raise ElectionValidationError(
                f"voter {voter} ranks unknown candidate '{candidate}'", voter_index=voter
            )
        if candidate in seen:
            raise ElectionValidationError(
                f"voter {voter} ranks '{candidate}' twice (tied ranking)", voter_index=voter
            )
        seen.add(candidate)
        indices.append(candidate_index[candidate])
    if len(indices) != len(candidate_index):
        omitted = [candidate for candidate in candidate_index if candidate not in seen]
        raise ElectionValidationError(
            f"voter {voter} has an incomplete ranking; missing {', '.join(omitted)}",
            voter_index=voter,
        )
    return Vote(tuple(indices))


def build_election(
    candidates: Sequence[str],
    parties: PartySpec,
    votes: Sequence[Sequence[str]],
    party_names: Optional[Sequence[str]] = None,
    display_names: Optional[Mapping[str, str]] = None,
) -> Election:
    """Validate raw identifiers and return an immutable Election.

    ``parties`` is either a mapping of party name to members or a list of
    member lists (named ``P1``, ``P2``, ... unless ``party_names`` is given).
    ``display_names`` maps candidate ids to labels; unlisted ids label themselves.
    """
    candidates = [str(candidate) for candidate in candidates]
    if not candidates:
        raise ElectionValidationError("an election needs at least one candidate")
    names, members = _split_party_spec(parties, party_names)
    _validate_identifiers(candidates, names)
    candidate_index = {candidate: index for index, candidate in enumerate(candidates)}
    indexed_parties = _index_parties(candidate_index, members)
    indexed_votes = tuple(
        _index_vote(candidate_index, ranking, voter) for voter, ranking in enumerate(votes)
    )
    return Election(
        candidates=tuple(candidates),
        parties=indexed_parties,
        party_names=tuple(names),
        votes=indexed_votes,
        display_names=_display_labels(candidates, display_names),
    )


def restrict_election(election: Election, party_indices: Sequence[int]) -> Election:
    """Keep only the listed parties (in the given order) and their candidates.

    Each vote is restricted to the surviving candidates.
    """
    kept_parties = list(dict.fromkeys(int(party) for party in party_indices))
    for party in kept_parties:
        if not 0 <= party < election.n_parties:
            raise ElectionValidationError(f"party index {party} out of range", party_index=party)
    kept_candidates = sorted(
        candidate for party in kept_parties for candidate in election.parties[party]
    )
    remap = {old: new for new, old in enumerate(kept_candidates)}
    parties = tuple(
        tuple(sorted(remap[candidate] for candidate in election.parties[party]))
        for party in kept_parties
    )
    votes = tuple(
        Vote(tuple(remap[candidate] for candidate in vote.ranking if candidate in remap))
        for vote in election.votes
    )
    labels = ()
    if election.display_names:
        labels = tuple(election.display_names[candidate] for candidate in kept_candidates)
    return Election(
        candidates=tuple(election.candidates[candidate] for candidate in kept_candidates),
        parties=parties,
        party_names=tuple(election.party_names[party] for party in kept_parties),
        votes=votes,
        display_names=labels,
    )


def relabel_election(election: Election, candidate_names: Mapping[str, str]) -> Election:
    """Rename candidates; parties, votes and party names are untouched."""
    renamed = [candidate_names.get(name, name) for name in election.candidates]
    if len(set(renamed)) != len(renamed):
        raise ElectionValidationError("relabelling produces duplicate candidate identifiers")
    return Election(
        candidates=tuple(renamed),
        parties=election.parties,
        party_names=election.party_names,
        votes=election.votes,
        display_names=election.display_names,
    )
