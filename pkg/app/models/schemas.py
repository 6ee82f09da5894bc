from fractions import Fraction
from typing import Annotated, Dict, List, Optional

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, model_validator


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not coordinates")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(str(value))
    if isinstance(value, (list, tuple)) and len(value) == 2:
        numerator, denominator = value
        if int(denominator) == 0:
            raise ValueError("zero denominator")
        return Fraction(int(numerator), int(denominator))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError as exc:
            raise ValueError("zero denominator") from exc
    raise ValueError(f"cannot read {value!r} as an exact rational")


ExactRational = Annotated[Fraction, BeforeValidator(_to_fraction)]


class VoterGroup(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    position: ExactRational = Field(..., description="Voter coordinate on the line")
    multiplicity: int = Field(1, ge=1, description="Number of identical voters at this coordinate")


class EuclideanSpec(BaseModel):
    """One-dimensional Euclidean election: every coordinate is an exact rational."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    candidates: Dict[str, ExactRational] = Field(..., description="Candidate coordinate by candidate id")
    parties: Dict[str, str] = Field(..., description="Party name by candidate id")
    voters: List[VoterGroup] = Field(default_factory=list)
    party_order: Optional[List[str]] = Field(None, description="Party index order; first appearance otherwise")

    @model_validator(mode="after")
    def _check_parties(self) -> "EuclideanSpec":
        if not self.candidates:
            raise ValueError("at least one candidate is required")
        if set(self.parties) != set(self.candidates):
            raise ValueError("every candidate needs exactly one party assignment")
        if self.party_order is not None and set(self.party_order) != set(self.parties.values()):
            raise ValueError("party_order must list every party exactly once")
        if self.party_order is not None and len(self.party_order) != len(set(self.party_order)):
            raise ValueError("party_order lists a party twice")
        return self

    def ordered_parties(self) -> List[str]:
        if self.party_order is not None:
            return list(self.party_order)
        return list(dict.fromkeys(self.parties[candidate] for candidate in self.candidates))


class SchemeRow(BaseModel):
    nominees: List[str]
    scores: List[int]
    winners: List[str] = Field(..., description="Winning party names")


class QueryReport(BaseModel):
    """Outcome of one CLI query, independent of the output format."""

    query: str
    answer: str
    party: Optional[str] = None
    witness: Optional[List[str]] = None
    score: Optional[int] = None
    axis: Optional[List[str]] = None
    score_table: Optional[List[SchemeRow]] = None
    oracle: Optional[str] = Field(None, description="agrees / disagrees when a cross-check ran")
    notes: List[str] = Field(default_factory=list)
