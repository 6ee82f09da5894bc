"""Dynamic programme behind EQUILIBRIUM PRESIDENT.

Scores along the axis are local: the nominee of slot ``i`` collects its
loyal voters plus its share of the two flanking swing groups. A Nash
deviation of slot ``j`` changes only the scores of slots ``j - 1``, ``j`` and
``j + 1``, so the left table walks the axis keeping the last four nominees
``(c[i-3], c[i-2], c[i-1], c[i])`` plus the largest score seen strictly left
of that window. The target slot ``kappa`` is reached from both ends (the
right end by running the same code on the mirrored chain) and the two halves
are glued when their scores add up to the target score and neither neighbour
of ``kappa`` can deviate against the maximum score of the other half.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from app.models.election import Election, NominationScheme, PartyAxis, VoterPartition

from .chain import ScoreChain, build_score_chain

Window = Tuple[Optional[int], Optional[int], Optional[int], int]

NO_SCORE = -1


@dataclass(frozen=True)
class LevelState:
    far_max: int
    parent: Optional[Window]


@dataclass(frozen=True)
class SideSummary:
    """What one half of the axis tells the other about slot ``kappa``.

    ``partial`` is the number of votes the target nominee takes from its
    side, ``side_max`` the largest score on that side, and ``threshold`` the
    smallest maximum score the other side must show to stop the neighbour of
    ``kappa`` on this side from deviating.
    """

    nominee: int
    partial: int
    threshold: int
    side_max: int
    window: Window


@dataclass
class ViableScoreTable:
    target: int
    kappa: int
    chain: ScoreChain
    left: List[Dict[Window, LevelState]] = field(default_factory=list)
    right: List[Dict[Window, LevelState]] = field(default_factory=list)
    left_summaries: List[SideSummary] = field(default_factory=list)
    right_summaries: List[SideSummary] = field(default_factory=list)

    @property
    def party(self) -> int:
        return self.chain.parties[self.kappa]

    def left_entries(self, level: int) -> Set[Tuple[int, int, int, int]]:
        """Viable ``(c[i-1], c[i], score of c[i-1], votes of c[i] from the left)`` at level ``i >= 1``."""
        return _project(self.chain, self.left, level)

    def right_entries(self, level: int) -> Set[Tuple[int, int, int, int]]:
        """Mirror of ``left_entries`` counted from the right end of the axis."""
        return _project(self.chain.mirrored(), self.right, level)

    def witness(self) -> Optional[NominationScheme]:
        loyal = self.chain.loyal[self.kappa]
        for left in self.left_summaries:
            for right in self.right_summaries:
                if left.nominee != right.nominee:
                    continue
                if left.partial + right.partial - loyal != self.target:
                    continue
                if right.side_max < left.threshold or left.side_max < right.threshold:
                    continue
                return self._assemble(left, right)
        return None

    def _assemble(self, left: SideSummary, right: SideSummary) -> NominationScheme:
        k = self.chain.n_slots
        locals_by_slot: List[int] = [0] * k
        for slot, local in enumerate(_backtrack(self.left, left.window)):
            locals_by_slot[slot] = local
        for mirrored_slot, local in enumerate(_backtrack(self.right, right.window)):
            locals_by_slot[k - 1 - mirrored_slot] = local
        candidates = self.chain.to_candidates(locals_by_slot)
        nominees = [0] * k
        for slot, party in enumerate(self.chain.parties):
            nominees[party] = candidates[slot]
        return NominationScheme(tuple(nominees))


def _project(chain: ScoreChain, levels: List[Dict[Window, LevelState]], level: int) -> Set[Tuple[int, int, int, int]]:
    if not 1 <= level < len(levels):
        raise ValueError(f"level {level} outside 1..{len(levels) - 1}")
    entries = set()
    for _, before, previous, current in levels[level]:
        entries.add(
            (
                chain.members[level - 1][previous],
                chain.members[level][current],
                chain.score(level - 1, before, previous, current),
                chain.loyal[level] + chain.left_share(level, previous, current),
            )
        )
    return entries


def _backtrack(levels: List[Dict[Window, LevelState]], window: Window) -> List[int]:
    picked = []
    for level in range(len(levels) - 1, -1, -1):
        picked.append(window[3])
        window = levels[level][window].parent
    picked.reverse()
    return picked


def _deviates(chain: ScoreChain, slot: int, target: int, nominees: Tuple[Optional[int], ...]) -> bool:
    """Can a losing slot away from ``kappa`` switch nominee and win?

    ``nominees`` holds the nominees of slots ``slot - 2 .. slot + 2``. The best
    score outside the three affected slots is exactly ``target``.
    """
    before2, before, current, after, after2 = nominees
    if chain.score(slot, before, current, after) >= target:
        return False
    for alternative in range(chain.size(slot)):
        if alternative == current:
            continue
        gained = chain.score(slot, before, alternative, after)
        if gained < target:
            continue
        if slot >= 1 and gained < chain.score(slot - 1, before2, before, alternative):
            continue
        if gained < chain.score(slot + 1, alternative, after, after2):
            continue
        return True
    return False


def left_levels(chain: ScoreChain, kappa: int, target: int) -> List[Dict[Window, LevelState]]:
    levels: List[Dict[Window, LevelState]] = [
        {(None, None, None, nominee): LevelState(NO_SCORE, None) for nominee in range(chain.size(0))}
    ]
    for level in range(kappa):
        following: Dict[Window, LevelState] = {}
        for window, state in levels[level].items():
            back3, back2, back1, current = window
            far_max = state.far_max
            if level >= 2:
                far_max = max(far_max, chain.score(level - 2, back3, back2, back1))
            for nominee in range(chain.size(level + 1)):
                if chain.score(level, back1, current, nominee) > target:
                    continue
                if level >= 1 and _deviates(chain, level - 1, target, (back3, back2, back1, current, nominee)):
                    continue
                key = (back2, back1, current, nominee)
                known = following.get(key)
                if known is None or far_max > known.far_max:
                    following[key] = LevelState(far_max, window)
        levels.append(following)
    return levels


def side_summaries(chain: ScoreChain, levels: List[Dict[Window, LevelState]], kappa: int, target: int) -> List[SideSummary]:
    room = chain.swing_sizes[kappa] if kappa < chain.n_slots - 1 else 0
    loyal = chain.loyal[kappa]
    best: Dict[Tuple[int, int, int], SideSummary] = {}
    for window, state in levels[kappa].items():
        back3, back2, back1, nominee = window
        partial = loyal + (chain.left_share(kappa, back1, nominee) if kappa > 0 else 0)
        outside = target - partial
        if not 0 <= outside <= room:
            continue
        side_max = state.far_max
        threshold = NO_SCORE
        if kappa >= 2:
            side_max = max(side_max, chain.score(kappa - 2, back3, back2, back1))
        if kappa >= 1:
            neighbour = chain.score(kappa - 1, back2, back1, nominee)
            side_max = max(side_max, neighbour)
            if neighbour < target:
                threshold = _neighbour_threshold(chain, kappa, window, state.far_max, outside)
        key = (nominee, partial, threshold)
        known = best.get(key)
        if known is None or side_max > known.side_max:
            best[key] = SideSummary(nominee, partial, threshold, side_max, window)
    return sorted(best.values(), key=lambda summary: (summary.nominee, summary.partial, summary.threshold))


def _neighbour_threshold(chain: ScoreChain, kappa: int, window: Window, far_max: int, outside: int) -> int:
    """One more than the best score the neighbour of ``kappa`` can reach by deviating, if it beats this side."""
    back3, back2, back1, nominee = window
    slot = kappa - 1
    top = None
    for alternative in range(chain.size(slot)):
        if alternative == back1:
            continue
        gained = chain.score(slot, back2, alternative, nominee)
        if slot >= 1 and gained < chain.score(slot - 1, back3, back2, alternative):
            continue
        if gained < chain.loyal[kappa] + chain.left_share(kappa, alternative, nominee) + outside:
            continue
        if gained < far_max:
            continue
        top = gained if top is None else max(top, gained)
    return NO_SCORE if top is None else top + 1


def build_tables(chain: ScoreChain, kappa: int, target: int, mirrored: Optional[ScoreChain] = None) -> ViableScoreTable:
    mirrored = mirrored or chain.mirrored()
    mirrored_kappa = chain.n_slots - 1 - kappa
    table = ViableScoreTable(target=target, kappa=kappa, chain=chain)
    table.left = left_levels(chain, kappa, target)
    table.right = left_levels(mirrored, mirrored_kappa, target)
    table.left_summaries = side_summaries(chain, table.left, kappa, target)
    table.right_summaries = side_summaries(mirrored, table.right, mirrored_kappa, target)
    return table


def compute_viable_tables(
    election: Election,
    axis: PartyAxis,
    partition: Optional[VoterPartition],
    party: int,
    target: int,
) -> ViableScoreTable:
    """Left and right tables for ``party`` winning with exactly ``target`` votes."""
    chain = build_score_chain(election, axis, partition)
    return build_tables(chain, axis.position(party), target)
