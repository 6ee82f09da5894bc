from typing import List

from app.models.election import Election


def serialize_profile(election: Election) -> str:
    """Canonical text: identical consecutive votes collapse into one ``m:`` line."""
    lines: List[str] = [f"CANDIDATES {election.n_candidates}"]
    for candidate, name in enumerate(election.candidates):
        label = election.display_name(candidate)
        lines.append(name if label == name else f"{name} {label}")
    lines.append(f"PARTIES {election.n_parties}")
    for name, members in zip(election.party_names, election.parties):
        lines.append(f"{name}: " + " ".join(election.candidates[candidate] for candidate in members))
    lines.append(f"VOTES {election.n_voters}")

    groups: List[List] = []
    for vote in election.votes:
        if groups and groups[-1][1] == vote.ranking:
            groups[-1][0] += 1
        else:
            groups.append([1, vote.ranking])
    for multiplicity, ranking in groups:
        names = " ".join(election.candidates[candidate] for candidate in ranking)
        lines.append(f"{multiplicity}: {names}" if multiplicity > 1 else names)
    return "\n".join(lines) + "\n"
