from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from elicit.config import settings
from elicit.models.results import IndistinguishabilityReport, IndistinguishabilityWitness
from elicit.profiles.core import Profile, restrict_profile
from elicit.utils.helpers import subsets_of_size
from elicit.utils.logger import get_logger
from elicit.utils.validators import require, validate_query_size

logger = get_logger(__name__)

Mismatch = Optional[Tuple[Tuple[int, ...], Tuple[int, ...], Fraction, Fraction]]


def _first_mismatch(first: Profile, second: Profile, members: Tuple[int, ...]) -> Mismatch:
    left = restrict_profile(first, members)
    right = restrict_profile(second, members)
    if left == right:
        return None
    for ranking in sorted(set(left.support) | set(right.support)):
        p, q = left.mass(ranking), right.mass(ranking)
        if p != q:
            return members, ranking, p, q
    return None


def indistinguishable(
    first: Profile, second: Profile, t: int, workers: Optional[int] = None
) -> IndistinguishabilityReport:
    """
    Exact t-indistinguishability: every restriction to a t-subset agrees.

    Subsets are checked in lexicographic order; the witness is always the first
    failing subset in that order, also when checks fan out to worker threads.
    """
    require(first.candidates == second.candidates, "profiles are over different candidate sets")
    validate_query_size(t, first.m)
    workers = workers or settings.VERIFY_WORKERS
    subsets: Iterable[Tuple[int, ...]] = subsets_of_size(first.m, t)

    checked = 0
    mismatch: Mismatch = None
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            # map yields in submission order
            for found in pool.map(lambda q: _first_mismatch(first, second, q), subsets):
                checked += 1
                if found is not None:
                    mismatch = found
                    break
    else:
        for members in subsets:
            checked += 1
            mismatch = _first_mismatch(first, second, members)
            if mismatch is not None:
                break

    if mismatch is None:
        return IndistinguishabilityReport(result=True, t=t, queries_checked=checked)

    members, ranking, p, q = mismatch
    labels = first.candidates.labels
    logger.debug(f"Profiles differ on query {[labels[c] for c in members]}")
    return IndistinguishabilityReport(
        result=False,
        t=t,
        queries_checked=checked,
        witness=IndistinguishabilityWitness(
            query=[labels[c] for c in members],
            ranking=[labels[members[i]] for i in ranking],
            first=p,
            second=q,
        ),
    )
