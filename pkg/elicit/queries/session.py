"""
Size-limited query sessions against a hidden profile.

QuerySession is the idealized oracle: a query Q returns the exact restriction
of the hidden profile to Q. SampledSession answers with n seeded draws instead.
"""

import bisect
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from elicit.config import settings
from elicit.exceptions import QueryTooLargeError
from elicit.models.documents import SessionTranscript, TranscriptEntry
from elicit.models.results import SampleReport
from elicit.profiles.core import Candidate, CandidateSet, Profile, Ranking, restrict_profile
from elicit.profiles.io import profile_to_document
from elicit.utils.logger import get_logger
from elicit.utils.validators import require, validate_query_size

logger = get_logger(__name__)

Query = Tuple[int, ...]

# rng.integers draws are int64; larger denominators fall back to float draws
_EXACT_DRAW_LIMIT = 2 ** 62


class QuerySession:
    """Single-owner session: not safe for concurrent mutation"""

    def __init__(self, hidden: Profile, max_size: int):
        validate_query_size(max_size, hidden.m)
        self._hidden = hidden
        self.max_size = max_size
        self.log: List[Query] = []
        self._responses: Dict[Query, Profile] = {}

    @property
    def candidates(self) -> CandidateSet:
        return self._hidden.candidates

    @property
    def m(self) -> int:
        return self._hidden.m

    @property
    def query_count(self) -> int:
        return len(self.log)

    def _resolve(self, subset: Iterable[Candidate]) -> Query:
        members = self.candidates.resolve_subset(subset)
        if len(members) > self.max_size:
            logger.debug(f"Rejected query of size {len(members)} (t={self.max_size})")
            raise QueryTooLargeError(len(members), self.max_size)
        return members

    def query(self, subset: Iterable[Candidate]) -> Profile:
        """Issue Q and log it; the answer is hidden|_Q"""
        members = self._resolve(subset)
        response = restrict_profile(self._hidden, members)
        self.log.append(members)
        self._responses[members] = response
        return response

    def lookup(self, subset: Iterable[Candidate]) -> Profile:
        """Answer from the log when Q was already issued, otherwise issue it"""
        members = self._resolve(subset)
        if members in self._responses:
            return self._responses[members]
        return self.query(members)

    def transcript(self) -> SessionTranscript:
        labels = self.candidates.labels
        return SessionTranscript(
            candidates=list(labels),
            max_size=self.max_size,
            queries=[
                TranscriptEntry(
                    query=[labels[c] for c in members],
                    response=profile_to_document(self._responses[members]),
                )
                for members in self.log
            ],
        )


def open_session(profile: Profile, t: int) -> QuerySession:
    return QuerySession(profile, t)


def query(session: QuerySession, subset: Iterable[Candidate]) -> Profile:
    return session.query(subset)


def query_count(session: QuerySession) -> int:
    return session.query_count


class SampledSession:
    """
    Oracle that answers with n restricted ballots drawn i.i.d.

    The k-th sampled query (0-based) draws from
    default_rng(SeedSequence(seed, spawn_key=(k,))), so identical seeds and
    call sequences give identical samples.
    """

    def __init__(self, hidden: Profile, max_size: int, seed: Optional[int] = None):
        validate_query_size(max_size, hidden.m)
        self._hidden = hidden
        self.max_size = max_size
        self.seed = settings.DEFAULT_SEED if seed is None else int(seed)
        self.log: List[Tuple[Query, int]] = []

    @property
    def candidates(self) -> CandidateSet:
        return self._hidden.candidates

    @property
    def query_count(self) -> int:
        return len(self.log)

    def _generator(self, k: int) -> np.random.Generator:
        return np.random.default_rng(np.random.SeedSequence(self.seed, spawn_key=(k,)))

    def sample(self, subset: Iterable[Candidate], n: int) -> SampleReport:
        members = self.candidates.resolve_subset(subset)
        if len(members) > self.max_size:
            raise QueryTooLargeError(len(members), self.max_size)
        require(isinstance(n, int) and n >= 1, f"sample count must be a positive integer, got {n!r}")

        exact = restrict_profile(self._hidden, members)
        k = len(self.log)
        draws = _draw(exact.items(), n, self._generator(k))
        self.log.append((members, n))

        counts: Dict[Ranking, int] = {}
        for ranking in draws:
            counts[ranking] = counts.get(ranking, 0) + 1
        empirical = Profile._trusted(exact.candidates, {r: Fraction(c, n) for r, c in counts.items()})

        rankings = set(counts) | set(exact.support)
        tv = sum((abs(empirical.mass(r) - exact.mass(r)) for r in rankings), Fraction(0)) / 2
        logger.debug(f"Sampled query #{k} of size {len(members)} with n={n}: tv={tv}")

        sub = exact.candidates
        return SampleReport(
            query=[self.candidates.label(c) for c in members],
            n=n,
            draw_index=k,
            counts={sub.format_ranking(r): c for r, c in sorted(counts.items())},
            empirical=profile_to_document(empirical),
            tv_distance=tv,
        )


def _draw(entries: List[Tuple[Ranking, Fraction]], n: int, rng: np.random.Generator) -> List[Ranking]:
    """n draws from a finite exact distribution given in canonical order"""
    denominator = lcm(*(value.denominator for _, value in entries))
    cumulative = []
    running = 0
    for _, value in entries:
        running += value.numerator * (denominator // value.denominator)
        cumulative.append(running)

    if denominator <= _EXACT_DRAW_LIMIT:
        points = [int(x) for x in rng.integers(0, denominator, size=n)]
        return [entries[bisect.bisect_right(cumulative, x)][0] for x in points]

    boundaries = [c / denominator for c in cumulative]
    points = [float(x) for x in rng.random(size=n)]
    return [entries[min(bisect.bisect_right(boundaries, x), len(entries) - 1)][0] for x in points]


def pairwise_preference(session: QuerySession, x: int, y: int) -> Fraction:
    """Pr[x above y] from one size-2 query"""
    response = session.query((x, y))
    # restricted candidates are re-indexed in canonical order
    first_local = 0 if x < y else 1
    return sum((value for ranking, value in response.items() if ranking[0] == first_local), Fraction(0))
