from .election import (
    Election,
    ExtremalPlacement,
    NominationScheme,
    PartyAxis,
    PartyExtrema,
    PresidentWitness,
    ScoreVector,
    Vote,
    VoterPartition,
    parse_party_reference,
)

__all__ = [
    "Election",
    "ExtremalPlacement",
    "NominationScheme",
    "PartyAxis",
    "PartyExtrema",
    "PresidentWitness",
    "ScoreVector",
    "Vote",
    "VoterPartition",
    "parse_party_reference",
]
