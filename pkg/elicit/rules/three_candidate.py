"""
Randomized Borda algorithms for three candidates with pairwise queries.

Each function returns the exact probability that the algorithm outputs a
Borda winner, enumerating the algorithm's own random choices and running
every branch against a fresh size-2 query session.
"""

from fractions import Fraction
from itertools import combinations
from typing import List

from elicit.profiles.core import Profile
from elicit.queries.session import QuerySession, pairwise_preference
from elicit.rules.presets import preset
from elicit.scoring.scores import winners
from elicit.utils.validators import require

THIRD = Fraction(1, 3)


def _borda_winner_indices(profile: Profile) -> List[int]:
    labels = set(winners(profile, preset("borda", profile.m)))
    return [c for c in range(profile.m) if profile.candidates.label(c) in labels]


def _require_three(profile: Profile):
    require(profile.m == 3, f"three-candidate algorithms need m=3, got m={profile.m}")


def guess_success(profile: Profile) -> Fraction:
    """Uniform guess without any query"""
    _require_three(profile)
    return Fraction(len(_borda_winner_indices(profile)), 3)


def one_query_success(profile: Profile) -> Fraction:
    """
    Query a uniform random pair and output each side with its pairwise
    probability; c is selected with probability borda(c) / 3.
    """
    _require_three(profile)
    best = set(_borda_winner_indices(profile))
    success = Fraction(0)
    for x, y in combinations(range(3), 2):
        session = QuerySession(profile, 2)
        p = pairwise_preference(session, x, y)
        success += THIRD * (p * (x in best) + (1 - p) * (y in best))
    return success


def two_query_success(profile: Profile) -> Fraction:
    """
    Pick c' uniformly and query both pairs containing it, which reveals its
    (1,0,-1) score; output c' if that score is positive, else a uniform other.
    """
    _require_three(profile)
    best = set(_borda_winner_indices(profile))
    success = Fraction(0)
    for chosen in range(3):
        session = QuerySession(profile, 2)
        others = [c for c in range(3) if c != chosen]
        chosen_score = sum((pairwise_preference(session, chosen, o) for o in others), Fraction(0)) - 1
        if chosen_score > 0:
            success += THIRD * (chosen in best)
        else:
            success += THIRD * Fraction(sum(o in best for o in others), 2)
    return success
