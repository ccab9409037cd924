"""
STV profiles that cannot be told apart with queries of size m-1.

Fix the directed cycle c1 -> c2 -> ... -> cm -> c1 and let R be the rankings
whose first and last candidates are consecutive on it. sigma_STV^c takes, with
probability eps, a draw from the winner-family profile of next(c) built for
alpha = (-1, 0, ..., 0), and otherwise a uniform draw from R. Candidates are
then eliminated in cycle order starting from next(c), leaving c.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from elicit.constructions.parity import parity_pair
from elicit.constructions.winner_family import WinnerFamily, winner_family
from elicit.profiles.core import CandidateSet, Profile, Ranking, mix, uniform_over
from elicit.scoring.vectors import ScoringVector
from elicit.utils.helpers import RationalLike, parse_rational
from elicit.utils.logger import get_logger, log_function_call
from elicit.utils.validators import require, validate_candidate_count

logger = get_logger(__name__)


@dataclass(frozen=True)
class StvFamilyParams:
    candidates: CandidateSet
    cycle: Tuple[int, ...]
    rankings: Tuple[Ranking, ...]
    epsilon: Fraction

    def next(self, c: int) -> int:
        position = self.cycle.index(c)
        return self.cycle[(position + 1) % len(self.cycle)]


def stv_parameters(candidates: CandidateSet, epsilon: Optional[RationalLike] = None) -> StvFamilyParams:
    """Cycle in canonical order; eps defaults to 1/m^2 and must satisfy eps < (1-eps)/(m(m-1))"""
    m = candidates.m
    require(m >= 3, f"the STV family needs m >= 3 (m=2 is plurality), got m={m}")
    validate_candidate_count(m)
    eps = Fraction(1, m * m) if epsilon is None else parse_rational(epsilon)
    require(0 < eps < (1 - eps) / (m * (m - 1)), f"eps={eps} must satisfy 0 < eps < (1-eps)/(m(m-1))")

    cycle = tuple(range(m))
    successor = {cycle[j]: cycle[(j + 1) % m] for j in range(m)}
    rankings = tuple(r for r in candidates.all_rankings() if successor[r[0]] == r[-1])
    return StvFamilyParams(candidates=candidates, cycle=cycle, rankings=rankings, epsilon=eps)


def negated_plurality_family(candidates: CandidateSet) -> WinnerFamily:
    """Winner family for alpha = (-1, 0, ..., 0): sigma^c makes c the unique plurality minimizer"""
    m = candidates.m
    alpha = ScoringVector(tuple(Fraction(-1 if j == 0 else 0) for j in range(m)))
    pair = parity_pair(candidates, 0, 1)
    return winner_family(pair.profile, pair.a, pair.b, alpha, t=m - 1)


@log_function_call
def stv_family(candidates: CandidateSet, epsilon: Optional[RationalLike] = None) -> Dict[str, Profile]:
    params = stv_parameters(candidates, epsilon)
    family = negated_plurality_family(candidates)
    spread = uniform_over(candidates, params.rankings)

    profiles = {}
    for c in range(candidates.m):
        inner = family.profiles[candidates.label(params.next(c))]
        profiles[candidates.label(c)] = mix([(inner, params.epsilon), (spread, 1 - params.epsilon)])
    logger.info(f"Built STV family on m={candidates.m} with eps={params.epsilon}, |R|={len(params.rankings)}")
    return profiles
