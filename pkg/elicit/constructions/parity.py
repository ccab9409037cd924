"""
Parity-pair profiles.

S is drawn uniformly from the subsets of C minus {a, b}; the ballot ranks a
uniformly ordered S first, then the adjacent pair (a b when |S| is even, b a
when it is odd), then a uniformly ordered complement of S. The profile and its
a<->b transposition agree on every query that misses a candidate.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial
from typing import Dict

from elicit.profiles.core import Candidate, CandidateSet, Profile, Ranking, transpose_profile
from elicit.utils.logger import get_logger
from elicit.utils.validators import require, validate_candidate_count

logger = get_logger(__name__)


@dataclass(frozen=True)
class ParityPair:
    profile: Profile
    a: str
    b: str
    transposed: Profile

    @property
    def candidates(self) -> CandidateSet:
        return self.profile.candidates


def parity_pair(candidates: CandidateSet, a: Candidate, b: Candidate) -> ParityPair:
    ia, ib = candidates.index(a), candidates.index(b)
    require(ia != ib, "parity pair needs two distinct candidates a and b")
    validate_candidate_count(candidates.m)

    rest = [c for c in range(candidates.m) if c not in (ia, ib)]
    subset_weight = Fraction(1, 2 ** len(rest))
    mass: Dict[Ranking, Fraction] = {}
    for size in range(len(rest) + 1):
        middle = (ia, ib) if size % 2 == 0 else (ib, ia)
        order_weight = subset_weight / (factorial(size) * factorial(len(rest) - size))
        for chosen in combinations(rest, size):
            others = [c for c in rest if c not in chosen]
            for head in permutations(chosen):
                for tail in permutations(others):
                    # the ballot determines S, so every ranking is produced once
                    mass[head + middle + tail] = order_weight

    profile = Profile._trusted(candidates, mass)
    logger.debug(f"Parity pair on {candidates.m} candidates has {len(profile)} support rankings")
    return ParityPair(
        profile=profile,
        a=candidates.label(ia),
        b=candidates.label(ib),
        transposed=transpose_profile(profile, ia, ib),
    )
