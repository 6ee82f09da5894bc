from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from app.models.election import Election, NominationScheme, PartyAxis, VoterPartition

from .chain import ScoreChain, build_score_chain

PPEntry = Tuple[int, int]


@dataclass
class PPViableScoreTable:
    """Reachable ``(nominee, votes from this side)`` pairs per slot, for both ends of the axis.

    ``left[i]`` maps each viable pair of slot ``i`` to the pair it was reached
    from. ``right`` is the same table over the mirrored chain.
    """

    target: int
    kappa: int
    chain: ScoreChain
    excluded: Optional[int] = None
    left: List[Dict[PPEntry, Optional[PPEntry]]] = field(default_factory=list)
    right: List[Dict[PPEntry, Optional[PPEntry]]] = field(default_factory=list)

    def is_left_viable(self, slot: int, candidate: int, score: int) -> bool:
        members = self.chain.members[slot]
        return candidate in members and (members.index(candidate), score) in self.left[slot]

    def is_right_viable(self, slot: int, candidate: int, score: int) -> bool:
        mirrored_slot = self.chain.n_slots - 1 - slot
        members = self.chain.members[slot]
        return candidate in members and (members.index(candidate), score) in self.right[mirrored_slot]

    def witness(self) -> Optional[NominationScheme]:
        loyal = self.chain.loyal[self.kappa]
        right_by_nominee: Dict[int, Dict[int, PPEntry]] = {}
        for entry in self.right[-1]:
            right_by_nominee.setdefault(entry[0], {})[entry[1]] = entry
        for entry in sorted(self.left[-1]):
            nominee, partial = entry
            match = right_by_nominee.get(nominee, {}).get(self.target - partial + loyal)
            if match is not None:
                return self._assemble(entry, match)
        return None

    def _assemble(self, left_entry: PPEntry, right_entry: PPEntry) -> NominationScheme:
        k = self.chain.n_slots
        locals_by_slot = [0] * k
        for slot, local in enumerate(_backtrack(self.left, left_entry)):
            locals_by_slot[slot] = local
        for mirrored_slot, local in enumerate(_backtrack(self.right, right_entry)):
            locals_by_slot[k - 1 - mirrored_slot] = local
        candidates = self.chain.to_candidates(locals_by_slot)
        nominees = [0] * k
        for slot, party in enumerate(self.chain.parties):
            nominees[party] = candidates[slot]
        return NominationScheme(tuple(nominees))


def _backtrack(levels: List[Dict[PPEntry, Optional[PPEntry]]], entry: PPEntry) -> List[int]:
    picked = []
    for level in range(len(levels) - 1, -1, -1):
        picked.append(entry[0])
        entry = levels[level][entry]
    picked.reverse()
    return picked


def pp_left_levels(chain: ScoreChain, kappa: int, caps: List[int]) -> List[Dict[PPEntry, Optional[PPEntry]]]:
    """Fill the left PP table up to slot ``kappa``.

    ``caps[i]`` bounds the final score of slot ``i``; every slot left of
    ``kappa`` is checked once its right neighbour is known.
    """
    levels: List[Dict[PPEntry, Optional[PPEntry]]] = []
    first_partial = chain.loyal[0]
    levels.append({(nominee, first_partial): None for nominee in range(chain.size(0)) if first_partial <= caps[0]})
    for slot in range(kappa):
        following: Dict[PPEntry, Optional[PPEntry]] = {}
        for entry in levels[slot]:
            nominee, partial = entry
            for successor in range(chain.size(slot + 1)):
                if partial + chain.right_share(slot, nominee, successor) > caps[slot]:
                    continue
                successor_partial = chain.loyal[slot + 1] + chain.left_share(slot + 1, nominee, successor)
                if successor_partial > caps[slot + 1]:
                    continue
                following.setdefault((successor, successor_partial), entry)
        levels.append(following)
    return levels


def build_pp_tables(
    chain: ScoreChain,
    kappa: int,
    target: int,
    excluded_slot: Optional[int] = None,
    mirrored: Optional[ScoreChain] = None,
) -> PPViableScoreTable:
    """``excluded_slot`` is an axis slot whose nominee must stay strictly below ``target``."""
    mirrored = mirrored or chain.mirrored()
    k = chain.n_slots
    caps = [target] * k
    if excluded_slot is not None:
        caps[excluded_slot] = target - 1
    table = PPViableScoreTable(target=target, kappa=kappa, chain=chain, excluded=excluded_slot)
    table.left = pp_left_levels(chain, kappa, caps)
    table.right = pp_left_levels(mirrored, k - 1 - kappa, list(reversed(caps)))
    return table


def compute_pp_tables(
    election: Election,
    axis: PartyAxis,
    partition: Optional[VoterPartition],
    party: int,
    target: int,
    excluded_party: Optional[int] = None,
) -> PPViableScoreTable:
    chain = build_score_chain(election, axis, partition)
    excluded = axis.position(excluded_party) if excluded_party is not None else None
    return build_pp_tables(chain, axis.position(party), target, excluded)
