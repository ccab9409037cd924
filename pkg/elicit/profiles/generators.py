from fractions import Fraction
from math import factorial
from typing import Dict, Optional, Union

import numpy as np

from elicit.config import settings
from elicit.profiles.core import CandidateSet, Profile, Ranking
from elicit.utils.validators import require

SeedLike = Union[int, np.random.Generator, None]


def make_rng(seed: SeedLike = None) -> np.random.Generator:
    """A PCG64 generator; None falls back to settings.DEFAULT_SEED"""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(settings.DEFAULT_SEED if seed is None else seed)


def random_profile(
    candidates: CandidateSet,
    seed: SeedLike = None,
    support: Optional[int] = None,
    max_weight: int = 9,
) -> Profile:
    """
    Seeded random profile with rational masses.

    Support rankings are distinct uniform draws from L(C) (default: up to 6 of
    them), each with an integer weight in 1..max_weight, normalized exactly.
    Never enumerates L(C), so it also serves candidate counts past the cap.
    """
    rng = make_rng(seed)
    size = support or 6
    if candidates.m <= 12:
        size = min(size, factorial(candidates.m))
    require(size >= 1, "support size must be positive")

    mass: Dict[Ranking, Fraction] = {}
    weights = [int(w) for w in rng.integers(1, max_weight + 1, size=size)]
    total = sum(weights)
    while len(mass) < size:
        ranking = tuple(int(c) for c in rng.permutation(candidates.m))
        if ranking not in mass:
            mass[ranking] = Fraction(weights[len(mass)], total)
    return Profile._trusted(candidates, mass)
