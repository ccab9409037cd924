"""
Covering designs: families of t-subsets of [m] containing every t*-subset.

A deterministic algorithm that must see some query holding all of C1 for
every possible C1 of size t* issues at least cov(m, t, t*) queries, and
cov(m, t, t*) >= C(m, t*) / C(t, t*).
"""

from fractions import Fraction
from itertools import combinations
from math import ceil
from typing import Dict, List, Optional, Sequence, Tuple

from elicit.config import settings
from elicit.exceptions import RefusedError
from elicit.models.results import CoverCheck, CoverInstance, CoverRow
from elicit.utils.helpers import binomial
from elicit.utils.logger import get_logger
from elicit.utils.validators import require

logger = get_logger(__name__)


def _check_parameters(m: int, t: int, tstar: int):
    require(1 <= tstar <= t <= m, f"need 1 <= t* <= t <= m, got m={m}, t={t}, t*={tstar}")


def rational_cover_bound(m: int, t: int, tstar: int) -> Fraction:
    _check_parameters(m, t, tstar)
    return Fraction(binomial(m, tstar), binomial(t, tstar))


def cover_lower_bound(m: int, t: int, tstar: int) -> int:
    """ceil(C(m, t*) / C(t, t*))"""
    bound = rational_cover_bound(m, t, tstar)
    return ceil(bound)


def is_cover(instance: CoverInstance) -> CoverCheck:
    """Valid iff every t*-subset lies in some listed set; otherwise report the first one missed"""
    issued = [frozenset(s) for s in instance.sets]
    for small in combinations(range(instance.m), instance.tstar):
        members = frozenset(small)
        if not any(members <= s for s in issued):
            return CoverCheck(valid=False, uncovered=small)
    return CoverCheck(valid=True)


class _CoverMasks:
    """Every t-set as a bitmask over the t*-sets it contains, both in lexicographic order"""

    def __init__(self, m: int, t: int, tstar: int):
        self.small_sets = list(combinations(range(m), tstar))
        positions = {s: k for k, s in enumerate(self.small_sets)}
        self.large_sets = list(combinations(range(m), t))
        self.masks: List[int] = []
        for large in self.large_sets:
            mask = 0
            for small in combinations(large, tstar):
                mask |= 1 << positions[small]
            self.masks.append(mask)
        # t-sets holding each t*-set, for branching on the first uncovered one
        self.holders: Dict[int, List[int]] = {k: [] for k in range(len(self.small_sets))}
        for j, mask in enumerate(self.masks):
            for k in range(len(self.small_sets)):
                if mask >> k & 1:
                    self.holders[k].append(j)
        self.full = (1 << len(self.small_sets)) - 1
        self.per_set = binomial(t, tstar)


def _popcount(value: int) -> int:
    return bin(value).count("1")


def greedy_cover(m: int, t: int, tstar: int) -> CoverInstance:
    """Repeatedly take the t-set covering the most uncovered t*-sets; ties go to the lexicographically first"""
    _check_parameters(m, t, tstar)
    masks = _CoverMasks(m, t, tstar)
    uncovered = masks.full
    chosen: List[Tuple[int, ...]] = []
    while uncovered:
        best, best_gain = None, 0
        for j, mask in enumerate(masks.masks):
            gain = _popcount(mask & uncovered)
            if gain > best_gain:
                best, best_gain = j, gain
        chosen.append(masks.large_sets[best])
        uncovered &= ~masks.masks[best]
    logger.debug(f"Greedy cover for (m={m}, t={t}, t*={tstar}) uses {len(chosen)} sets")
    return CoverInstance(m=m, t=t, tstar=tstar, sets=chosen)


def _search(masks: _CoverMasks, uncovered: int, budget: int, chosen: List[int]) -> bool:
    if not uncovered:
        return True
    if budget * masks.per_set < _popcount(uncovered):
        return False
    first = (uncovered & -uncovered).bit_length() - 1
    for j in masks.holders[first]:
        chosen.append(j)
        if _search(masks, uncovered & ~masks.masks[j], budget - 1, chosen):
            return True
        chosen.pop()
    return False


def exact_cover(m: int, t: int, tstar: int) -> CoverInstance:
    """
    A minimum cover, by iterative deepening from the lower bound. Each level
    branches on the t-sets holding the first uncovered t*-set, which every
    cover must contain one of, so the search is exhaustive.
    """
    _check_parameters(m, t, tstar)
    base = binomial(m, t)
    if base > settings.EXHAUSTIVE_COVER_CAP:
        raise RefusedError(
            f"exact cover search over C({m},{t})={base} sets exceeds "
            f"EXHAUSTIVE_COVER_CAP={settings.EXHAUSTIVE_COVER_CAP}"
        )
    masks = _CoverMasks(m, t, tstar)
    for budget in range(cover_lower_bound(m, t, tstar), base + 1):
        chosen: List[int] = []
        if _search(masks, masks.full, budget, chosen):
            logger.debug(f"Exact cover for (m={m}, t={t}, t*={tstar}) has {budget} sets")
            return CoverInstance(m=m, t=t, tstar=tstar, sets=sorted(masks.large_sets[j] for j in chosen))
    # all C(m, t) sets always cover
    raise AssertionError("unreachable: the full family is a cover")


def exact_cover_size(m: int, t: int, tstar: int) -> int:
    return len(exact_cover(m, t, tstar).sets)


def tiny_parameters(max_m: int) -> List[Tuple[int, int, int]]:
    """Every (m, t, t*) with m <= max_m whose exhaustive search fits under the cap"""
    found = []
    for m in range(1, max_m + 1):
        for t in range(1, m + 1):
            if binomial(m, t) > settings.EXHAUSTIVE_COVER_CAP:
                continue
            found.extend((m, t, tstar) for tstar in range(1, t + 1))
    return found


def cover_row(m: int, t: int, tstar: int, exact: bool = True) -> CoverRow:
    fits = binomial(m, t) <= settings.EXHAUSTIVE_COVER_CAP
    return CoverRow(
        m=m,
        t=t,
        tstar=tstar,
        lower_bound=cover_lower_bound(m, t, tstar),
        rational_bound=rational_cover_bound(m, t, tstar),
        greedy=len(greedy_cover(m, t, tstar).sets),
        exact=exact_cover_size(m, t, tstar) if exact and fits else None,
    )


def cover_rows(parameters: Sequence[Tuple[int, int, int]], exact: bool = True) -> List[CoverRow]:
    rows = [cover_row(m, t, tstar, exact) for m, t, tstar in parameters]
    logger.info(f"Computed {len(rows)} cover rows")
    return rows


def redundant_set(instance: CoverInstance) -> Optional[int]:
    """Index of a set whose removal keeps the family a cover, or None when every set is needed"""
    for k in range(len(instance.sets)):
        reduced = instance.model_copy(update={"sets": instance.sets[:k] + instance.sets[k + 1:]})
        if is_cover(reduced).valid:
            return k
    return None
