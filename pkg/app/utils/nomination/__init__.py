from .centrist import centrist_equilibrium, centrist_schemes, party_blocks
from .chain import ScoreChain, build_score_chain, lowest_winning_score, swing_preference_counts
from .partition import partition_voters, two_possible_parties
from .pp_tables import PPViableScoreTable, build_pp_tables, compute_pp_tables
from .viable_tables import SideSummary, ViableScoreTable, build_tables, compute_viable_tables

__all__ = [
    "centrist_equilibrium",
    "centrist_schemes",
    "party_blocks",
    "ScoreChain",
    "build_score_chain",
    "lowest_winning_score",
    "swing_preference_counts",
    "partition_voters",
    "two_possible_parties",
    "PPViableScoreTable",
    "build_pp_tables",
    "compute_pp_tables",
    "SideSummary",
    "ViableScoreTable",
    "build_tables",
    "compute_viable_tables",
]
