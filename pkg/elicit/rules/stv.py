"""
Single transferable vote with set-valued winners.

A candidate wins if some sequence of valid eliminations (each removing a
candidate of minimal plurality score on the remaining profile) leaves it last.
Every tie is branched on; results are memoized per remaining-candidate set.
"""

from fractions import Fraction
from typing import Dict, FrozenSet, List, Tuple

from elicit.models.results import EliminationStep, EliminationTrace, StvResult
from elicit.profiles.core import Profile, restrict_profile
from elicit.utils.logger import get_logger

logger = get_logger(__name__)

# winner index -> steps of one elimination sequence reaching it
Reachable = Dict[int, List[EliminationStep]]


def plurality_on(profile: Profile, remaining: Tuple[int, ...]) -> Dict[int, Fraction]:
    """Plurality scores of the remaining candidates on the restricted profile"""
    restricted = restrict_profile(profile, remaining)
    totals = {c: Fraction(0) for c in remaining}
    for ranking, value in restricted.items():
        totals[remaining[ranking[0]]] += value
    return totals


def stv_winners(profile: Profile) -> StvResult:
    labels = profile.candidates.labels
    memo: Dict[FrozenSet[int], Reachable] = {}

    def explore(remaining: FrozenSet[int]) -> Reachable:
        if remaining in memo:
            return memo[remaining]
        if len(remaining) == 1:
            memo[remaining] = {next(iter(remaining)): []}
            return memo[remaining]

        ordered = tuple(sorted(remaining))
        plurality = plurality_on(profile, ordered)
        lowest = min(plurality.values())
        step_scores = {labels[c]: plurality[c] for c in ordered}

        reachable: Reachable = {}
        for loser in (c for c in ordered if plurality[c] == lowest):
            step = EliminationStep(eliminated=labels[loser], plurality=step_scores)
            for winner, steps in explore(remaining - {loser}).items():
                if winner not in reachable:
                    reachable[winner] = [step] + steps
        memo[remaining] = reachable
        return reachable

    reachable = explore(frozenset(range(profile.m)))
    winners = sorted(reachable)
    logger.debug(f"STV explored {len(memo)} candidate subsets; winners {[labels[w] for w in winners]}")
    return StvResult(
        winners=[labels[w] for w in winners],
        traces=[EliminationTrace(winner=labels[w], steps=reachable[w]) for w in winners],
    )
