from typing import FrozenSet, List, Sequence, Tuple

import numpy as np

from app.models.election import Election, NominationScheme, ScoreVector
from app.utils.errors import ElectionValidationError


def make_scheme(election: Election, nominees: Sequence) -> NominationScheme:
    """Build a scheme from candidate names or indices, one per party in party order."""
    indices = []
    for nominee in nominees:
        if isinstance(nominee, (int, np.integer)):
            indices.append(int(nominee))
        else:
            try:
                indices.append(election.candidate_index(str(nominee)))
            except KeyError as exc:
                raise ElectionValidationError(str(exc.args[0])) from exc
    scheme = NominationScheme(tuple(indices))
    validate_scheme(election, scheme)
    return scheme


def validate_scheme(election: Election, scheme: NominationScheme) -> None:
    if len(scheme) != election.n_parties:
        raise ElectionValidationError(
            f"scheme names {len(scheme)} nominees for {election.n_parties} parties"
        )
    for party, candidate in enumerate(scheme):
        if not 0 <= candidate < election.n_candidates or election.party_of[candidate] != party:
            raise ElectionValidationError(
                f"nominee {candidate} is not a member of party {party}", party_index=party
            )


def reduced_scores(election: Election, scheme: NominationScheme) -> ScoreVector:
    """Plurality scores of the election restricted to the nominees."""
    validate_scheme(election, scheme)
    if election.n_voters == 0:
        return ScoreVector(tuple(0 for _ in scheme))
    nominee_ranks = election.ranks[:, list(scheme.nominees)]
    choices = nominee_ranks.argmin(axis=1)
    counts = np.bincount(choices, minlength=len(scheme))
    return ScoreVector(tuple(int(count) for count in counts))


def winners(election: Election, scheme: NominationScheme) -> FrozenSet[int]:
    """Nominees attaining the maximum score; ties are kept."""
    scores = reduced_scores(election, scheme)
    return frozenset(scheme.nominee(party) for party in scores.winning_parties())


def winning_parties(election: Election, scheme: NominationScheme) -> FrozenSet[int]:
    return frozenset(reduced_scores(election, scheme).winning_parties())


def nash_deviations(election: Election, scheme: NominationScheme) -> List[Tuple[int, int]]:
    """All (party, alternative) pairs turning a losing party into a winner."""
    scores = reduced_scores(election, scheme)
    current_winners = set(scores.winning_parties())
    deviations = []
    for party, members in enumerate(election.parties):
        if party in current_winners:
            continue
        for alternative in members:
            if alternative == scheme.nominee(party):
                continue
            if party in winning_parties(election, scheme.replace(party, alternative)):
                deviations.append((party, alternative))
    return deviations


def is_nash_equilibrium(election: Election, scheme: NominationScheme) -> bool:
    return not nash_deviations(election, scheme)
