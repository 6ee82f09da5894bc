from dataclasses import dataclass
from typing import Iterable, List, Optional

from app.models.election import Election
from app.utils.logging_utils import log_query_step

from .equilibrium_service import equilibrium_president
from .oracle_service import (
    brute_equilibrium_president,
    brute_necessary_president,
    brute_possible_president,
    brute_recognize_pasp,
)
from .president_service import necessary_president, possible_president
from .recognition_service import recognize


@dataclass(frozen=True)
class CrossCheck:
    query: str
    party: Optional[str]
    solver: bool
    oracle: bool

    @property
    def agrees(self) -> bool:
        return self.solver == self.oracle

    def describe(self) -> str:
        label = self.query if self.party is None else f"{self.query}[{self.party}]"
        verdict = "agrees" if self.agrees else "DISAGREES"
        return f"{label}: solver={self.solver} oracle={self.oracle} {verdict}"


def cross_validate(
    election: Election, parties: Optional[Iterable[int]] = None, max_schemes: Optional[int] = None
) -> List[CrossCheck]:
    """Run each polynomial solver next to its exhaustive counterpart."""
    axis = recognize(election)
    checks = [CrossCheck("recognize", None, axis is not None, brute_recognize_pasp(election) is not None)]
    if axis is None:
        return checks
    parties = range(election.n_parties) if parties is None else parties
    for party in parties:
        name = election.party_names[party]
        checks.append(
            CrossCheck(
                "equilibrium",
                name,
                equilibrium_president(election, party, axis) is not None,
                brute_equilibrium_president(election, party, max_schemes) is not None,
            )
        )
        checks.append(
            CrossCheck(
                "possible",
                name,
                possible_president(election, party, axis) is not None,
                brute_possible_president(election, party, max_schemes) is not None,
            )
        )
        checks.append(
            CrossCheck(
                "necessary",
                name,
                necessary_president(election, party, axis),
                brute_necessary_president(election, party, max_schemes),
            )
        )
    for check in checks:
        if not check.agrees:
            log_query_step("check", check.party, check.describe())
    return checks
