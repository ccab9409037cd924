"""
Winner families: one profile per candidate, all indistinguishable from the
uniform profile with queries of size t, each with its own unique alpha-winner.

sigma^c mixes pi o sigma over all m! permutations pi with weight 1/m!, except
that the branches with pi(b) = c use pi o sigma^{a<->b} instead.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Optional

from elicit.exceptions import InvalidArgumentError
from elicit.profiles.core import (
    Candidate,
    CandidateSet,
    Profile,
    Ranking,
    all_permutations,
    transpose_profile,
)
from elicit.queries.verifier import indistinguishable
from elicit.scoring.scores import score
from elicit.scoring.vectors import ScoringVector
from elicit.utils.logger import get_logger, log_function_call
from elicit.utils.validators import require

logger = get_logger(__name__)


@dataclass(frozen=True)
class WinnerFamily:
    alpha: ScoringVector
    t: int
    a: str
    b: str
    base: Profile
    profiles: Dict[str, Profile]
    uniform: Profile

    @property
    def candidates(self) -> CandidateSet:
        return self.base.candidates


@log_function_call
def winner_family(
    profile: Profile, a: Candidate, b: Candidate, alpha: ScoringVector, t: Optional[int] = None
) -> WinnerFamily:
    """
    profile and its a<->b transposition must be t-indistinguishable (default
    t = m-1) and give a and b different alpha-scores. When b scores higher the
    two labels swap roles so that a is always the higher scorer.
    """
    candidates = profile.candidates
    m = candidates.m
    t = m - 1 if t is None else t
    require(alpha.m == m, f"scoring vector has {alpha.m} weights for {m} candidates")
    ia, ib = candidates.index(a), candidates.index(b)
    require(ia != ib, "a and b must be distinct")

    score_a, score_b = score(profile, alpha, ia), score(profile, alpha, ib)
    if score_a == score_b:
        raise InvalidArgumentError(f"a and b have equal scores ({score_a}); the family needs a score gap")
    if score_a < score_b:
        ia, ib = ib, ia

    transposed = transpose_profile(profile, ia, ib)
    report = indistinguishable(profile, transposed, t)
    if not report.result:
        raise InvalidArgumentError(
            f"profile and its {candidates.label(ia)}<->{candidates.label(ib)} transposition "
            f"are distinguishable with queries of size {t} (witness query {report.witness.query})"
        )

    weight = Fraction(1, factorial(m))
    base_items = profile.items()
    swapped_items = transposed.items()
    accumulators: Dict[int, Dict[Ranking, Fraction]] = {c: {} for c in range(m)}
    uniform_mass: Dict[Ranking, Fraction] = {}

    for pi in all_permutations(candidates):
        images = pi.images
        moved = [(tuple(images[x] for x in r), v * weight) for r, v in base_items]
        moved_swapped = [(tuple(images[x] for x in r), v * weight) for r, v in swapped_items]
        for ranking, value in moved:
            uniform_mass[ranking] = uniform_mass.get(ranking, Fraction(0)) + value
        special = images[ib]
        for c in range(m):
            target = accumulators[c]
            for ranking, value in (moved_swapped if c == special else moved):
                target[ranking] = target.get(ranking, Fraction(0)) + value

    profiles = {candidates.label(c): Profile._trusted(candidates, accumulators[c]) for c in range(m)}
    logger.info(f"Built winner family for alpha=({alpha.format()}) on m={m} with t={t}")
    return WinnerFamily(
        alpha=alpha,
        t=t,
        a=candidates.label(ia),
        b=candidates.label(ib),
        base=profile,
        profiles=profiles,
        uniform=Profile._trusted(candidates, uniform_mass),
    )
