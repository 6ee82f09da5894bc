"""Reader for the plain-text profile format.

    # comments run to the end of the line
    CANDIDATES 4
    a1 Optional display name
    a2
    b1
    b2
    PARTIES 2
    A: a1 a2
    B: b1 b2
    VOTES 3
    a1 b1 a2 b2
    2: b1 a2 b2 a1

The count after VOTES is the number of voters once multiplicities
(``m:`` prefixes) are expanded.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from app.models.election import Election
from app.utils.election import build_election
from app.utils.errors import ElectionValidationError, ProfileParseError

SECTIONS = ("CANDIDATES", "PARTIES", "VOTES")
_TOKEN = re.compile(r"\S+")
_MULTIPLICITY = re.compile(r"^(\d+):$")
_PARTY_LABEL = re.compile(r"^([^:\s]+):$")

Token = Tuple[str, int]


@dataclass
class ProfileDocument:
    candidates: List[Tuple[str, str]] = field(default_factory=list)
    parties: List[Tuple[str, List[str]]] = field(default_factory=list)
    votes: List[Tuple[int, List[str]]] = field(default_factory=list)
    # source line of the CANDIDATES header, of each party row and of each expanded voter
    candidates_line: int = 1
    party_lines: List[int] = field(default_factory=list)
    voter_lines: List[int] = field(default_factory=list)

    @property
    def voter_count(self) -> int:
        return sum(multiplicity for multiplicity, _ in self.votes)

    def display_name(self, candidate: str) -> str:
        return dict(self.candidates).get(candidate, candidate)

    def line_of(self, error: ElectionValidationError) -> int:
        if error.voter_index is not None and error.voter_index < len(self.voter_lines):
            return self.voter_lines[error.voter_index]
        if error.party_index is not None and error.party_index < len(self.party_lines):
            return self.party_lines[error.party_index]
        return self.candidates_line

    def to_election(self) -> Election:
        ballots = [ranking for multiplicity, ranking in self.votes for _ in range(multiplicity)]
        return build_election(
            [candidate for candidate, _ in self.candidates],
            {name: members for name, members in self.parties},
            ballots,
            display_names={candidate: label for candidate, label in self.candidates if label != candidate},
        )


@dataclass
class _Section:
    name: str
    declared: int
    line: int
    column: int
    rows: List[Tuple[int, List[Token]]] = field(default_factory=list)


def _tokens(text: str) -> List[Token]:
    return [(match.group(0), match.start() + 1) for match in _TOKEN.finditer(text)]


def _split_sections(text: str) -> Dict[str, _Section]:
    sections: Dict[str, _Section] = {}
    current: Optional[_Section] = None
    for line_number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = _tokens(content)
        if not tokens:
            continue
        keyword, column = tokens[0]
        if keyword in SECTIONS:
            if len(tokens) != 2 or not tokens[1][0].isdigit():
                bad_column = tokens[1][1] if len(tokens) > 1 else column + len(keyword)
                raise ProfileParseError(
                    f"malformed count header; expected '{keyword} <count>'",
                    line=line_number,
                    column=bad_column,
                )
            if keyword in sections:
                raise ProfileParseError(f"duplicate {keyword} section", line=line_number, column=column)
            current = _Section(keyword, int(tokens[1][0]), line_number, tokens[1][1])
            sections[keyword] = current
            continue
        if current is None:
            raise ProfileParseError("expected a CANDIDATES header", line=line_number, column=column)
        current.rows.append((line_number, tokens))
    for keyword in SECTIONS:
        if keyword not in sections:
            raise ProfileParseError(f"missing {keyword} section", line=max(len(text.splitlines()), 1))
    return sections


def _check_count(section: _Section, found: int) -> None:
    if found != section.declared:
        raise ProfileParseError(
            f"{section.name} header declares {section.declared} but {found} were given",
            line=section.line,
            column=section.column,
        )


def _read_candidates(section: _Section) -> List[Tuple[str, str]]:
    candidates = []
    seen: Dict[str, int] = {}
    for line_number, tokens in section.rows:
        candidate, column = tokens[0]
        if ":" in candidate:
            raise ProfileParseError(f"candidate id '{candidate}' may not contain ':'", line=line_number, column=column)
        if candidate in seen:
            raise ProfileParseError(
                f"candidate '{candidate}' already declared on line {seen[candidate]}",
                line=line_number,
                column=column,
            )
        seen[candidate] = line_number
        display = " ".join(token for token, _ in tokens[1:]) or candidate
        candidates.append((candidate, display))
    _check_count(section, len(candidates))
    return candidates


def _read_parties(section: _Section, known: Dict[str, int]) -> List[Tuple[str, List[str]]]:
    parties = []
    owner: Dict[str, str] = {}
    for line_number, tokens in section.rows:
        label, column = tokens[0]
        match = _PARTY_LABEL.match(label)
        if match is None:
            raise ProfileParseError("party lines look like 'NAME: id id ...'", line=line_number, column=column)
        name = match.group(1)
        if any(name == existing for existing, _ in parties):
            raise ProfileParseError(f"party '{name}' declared twice", line=line_number, column=column)
        if len(tokens) == 1:
            raise ProfileParseError(f"party '{name}' has no candidates", line=line_number, column=column + len(label))
        members = []
        for candidate, candidate_column in tokens[1:]:
            if candidate not in known:
                raise ProfileParseError(
                    f"unknown candidate id '{candidate}'", line=line_number, column=candidate_column
                )
            if candidate in owner:
                raise ProfileParseError(
                    f"party overlap: '{candidate}' already belongs to party '{owner[candidate]}'",
                    line=line_number,
                    column=candidate_column,
                )
            owner[candidate] = name
            members.append(candidate)
        parties.append((name, members))
    _check_count(section, len(parties))
    orphans = [candidate for candidate in known if candidate not in owner]
    if orphans:
        raise ProfileParseError(
            f"candidates without a party: {', '.join(orphans)}", line=section.line, column=1
        )
    return parties


def _read_votes(section: _Section, known: Dict[str, int]) -> List[Tuple[int, List[str]]]:
    votes = []
    for line_number, tokens in section.rows:
        multiplicity = 1
        match = _MULTIPLICITY.match(tokens[0][0])
        if match is not None:
            multiplicity = int(match.group(1))
            if multiplicity < 1:
                raise ProfileParseError("multiplicity must be positive", line=line_number, column=tokens[0][1])
            tokens = tokens[1:]
        ranking = []
        seen = set()
        for candidate, column in tokens:
            if candidate not in known:
                raise ProfileParseError(f"unknown candidate id '{candidate}'", line=line_number, column=column)
            if candidate in seen:
                raise ProfileParseError(
                    f"duplicate candidate '{candidate}' in ranking", line=line_number, column=column
                )
            seen.add(candidate)
            ranking.append(candidate)
        if len(ranking) != len(known):
            missing = [candidate for candidate in known if candidate not in seen]
            end_column = tokens[-1][1] + len(tokens[-1][0]) if tokens else 1
            raise ProfileParseError(
                f"missing candidate(s) {', '.join(missing)} in ranking", line=line_number, column=end_column
            )
        votes.append((multiplicity, ranking))
    _check_count(section, sum(multiplicity for multiplicity, _ in votes))
    return votes


def read_document(text: str) -> ProfileDocument:
    sections = _split_sections(text)
    candidates = _read_candidates(sections["CANDIDATES"])
    known = {candidate: index for index, (candidate, _) in enumerate(candidates)}
    parties = _read_parties(sections["PARTIES"], known)
    votes = _read_votes(sections["VOTES"], known)
    vote_rows = [line for line, _ in sections["VOTES"].rows]
    return ProfileDocument(
        candidates=candidates,
        parties=parties,
        votes=votes,
        candidates_line=sections["CANDIDATES"].line,
        party_lines=[line for line, _ in sections["PARTIES"].rows],
        voter_lines=[line for (multiplicity, _), line in zip(votes, vote_rows) for _ in range(multiplicity)],
    )


def parse_profile(text: str) -> Election:
    """Parse profile text into a validated Election; diagnostics carry line and column."""
    document = read_document(text)
    try:
        return document.to_election()
    except ElectionValidationError as exc:
        raise ProfileParseError(str(exc), line=document.line_of(exc)) from exc


def decode_profile(data: bytes) -> str:
    """UTF-8 text of a profile; undecodable bytes are reported by line and byte column."""
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data.count(b"\n", 0, exc.start) + 1
        column = exc.start - (data.rfind(b"\n", 0, exc.start) + 1) + 1
        raise ProfileParseError(
            f"invalid UTF-8 byte 0x{data[exc.start]:02x}", line=line, column=column
        ) from exc
