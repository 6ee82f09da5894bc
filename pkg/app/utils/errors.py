class NominationError(Exception):
    """Base class for every failure raised by the nomination toolkit."""


class ElectionValidationError(NominationError, ValueError):
    """Raised when raw inputs do not describe a valid election."""

    def __init__(self, message: str, *, voter_index: int | None = None, party_index: int | None = None) -> None:
        super().__init__(message)
        self.voter_index = voter_index
        self.party_index = party_index


class ProfileParseError(ElectionValidationError):
    """Raised by the profile parser; carries the offending line and column."""

    def __init__(self, message: str, *, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class EuclideanTieError(ElectionValidationError):
    """Raised when a voter is equidistant from two candidates."""


class NotPaspError(NominationError):
    """Raised when a profile is not party-aligned single-peaked under the axis in use."""


class CapExceededError(NominationError):
    """Raised when an exhaustive search would exceed its configured cap."""


class InvariantViolation(NominationError, AssertionError):
    """Raised when a solver witness fails re-verification."""


class CentristPreconditionError(NominationError):
    """Base class for violated hypotheses of the centrist construction."""


class TooManyPartiesError(CentristPreconditionError):
    """Raised when the centrist construction is asked for more than three parties."""


class AxisNotSinglePeakedError(CentristPreconditionError):
    """Raised when some vote is not single-peaked on the supplied candidate axis."""


class PartiesNotContiguousError(CentristPreconditionError):
    """Raised when a party's candidates are split on the supplied candidate axis."""


class UnknownFixtureError(NominationError, KeyError):
    """Raised when a named fixture does not exist."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown fixture"


__all__ = [
    "NominationError",
    "ElectionValidationError",
    "ProfileParseError",
    "EuclideanTieError",
    "NotPaspError",
    "CapExceededError",
    "InvariantViolation",
    "CentristPreconditionError",
    "TooManyPartiesError",
    "AxisNotSinglePeakedError",
    "PartiesNotContiguousError",
    "UnknownFixtureError",
]
