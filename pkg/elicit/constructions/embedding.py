from fractions import Fraction
from typing import Dict, Sequence

from elicit.profiles.core import Candidate, CandidateSet, Profile, Ranking
from elicit.utils.validators import require


def embedded_profile(
    candidates: CandidateSet,
    inner_members: Sequence[Candidate],
    outer_order: Sequence[Candidate],
    i: int,
    inner: Profile,
) -> Profile:
    """
    Extend a profile over C1 to all of C: every ballot lists the first i-1
    candidates of the fixed C2 order, then the inner ballot, then the rest of C2.
    """
    c1 = candidates.resolve_subset(inner_members)
    c2 = [candidates.index(c) for c in outer_order]
    require(len(set(c2)) == len(c2), "outer order repeats a candidate")
    require(
        sorted(c1 + tuple(c2)) == list(range(candidates.m)),
        "inner members and outer order must partition the candidate set",
    )
    require(inner.candidates == candidates.subset(c1), "inner profile must be over exactly the inner members")
    require(1 <= i <= len(c2) + 1, f"insertion index must lie in 1..{len(c2) + 1}, got {i}")

    prefix, suffix = tuple(c2[: i - 1]), tuple(c2[i - 1:])
    mass: Dict[Ranking, Fraction] = {
        prefix + tuple(c1[local] for local in ranking) + suffix: value for ranking, value in inner.items()
    }
    return Profile._trusted(candidates, mass)
