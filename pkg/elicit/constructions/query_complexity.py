"""
Hard instances for algorithms whose queries may be larger than t*.

C1 holds t* candidates including a and b. The embedded profile sigma^i over
C1 (a parity pair) and the complement C2 is chosen where a and b score
differently. sigma* mixes pi o sigma^i over all permutations, swapping a and
b on the branches where pi fixes C1 pointwise. Every query that misses a
member of C1 then sees the uniform distribution, yet b is the unique winner.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from elicit.constructions.embedding import embedded_profile
from elicit.constructions.parity import parity_pair
from elicit.exceptions import InvalidArgumentError
from elicit.models.results import BoundRow
from elicit.profiles.core import (
    Candidate,
    CandidateSet,
    Permutation,
    Profile,
    Ranking,
    all_permutations,
    permute_profile,
    transpose_profile,
)
from elicit.scoring.basis import minimal_query_size
from elicit.scoring.scores import score
from elicit.scoring.separation import separating_index
from elicit.scoring.vectors import ScoringVector
from elicit.utils.helpers import RationalLike, parse_rational
from elicit.utils.logger import get_logger, log_function_call
from elicit.utils.validators import require

logger = get_logger(__name__)


@dataclass(frozen=True)
class QueryComplexityInstance:
    alpha: ScoringVector
    tstar: int
    inner: Tuple[int, ...]
    a: str
    b: str
    index: int
    embedded: Profile
    profile: Profile

    @property
    def candidates(self) -> CandidateSet:
        return self.profile.candidates

    @property
    def winner(self) -> str:
        return self.b


@log_function_call
def query_complexity_instance(
    alpha: ScoringVector,
    tstar: Optional[int] = None,
    inner: Optional[Sequence[Candidate]] = None,
    candidates: Optional[CandidateSet] = None,
) -> QueryComplexityInstance:
    m = alpha.m
    candidates = candidates or CandidateSet.letters(m)
    require(candidates.m == m, f"scoring vector has {m} weights for {candidates.m} candidates")
    minimal = minimal_query_size(alpha)
    tstar = minimal if tstar is None else tstar
    if minimal == 1:
        raise InvalidArgumentError("constant scoring vectors have t*=1; every candidate always wins")
    require(tstar == minimal, f"t*={tstar} is not the minimal query size {minimal} of alpha")

    c1 = candidates.resolve_subset(inner if inner is not None else range(tstar))
    require(len(c1) == tstar, f"C1 must have exactly t*={tstar} candidates, got {len(c1)}")
    certificate = separating_index(alpha, tstar - 1, inner=c1, candidates=candidates)
    ia, ib = candidates.index(certificate.a), candidates.index(certificate.b)
    c2 = [c for c in range(m) if c not in c1]

    pair = parity_pair(candidates.subset(c1), certificate.a, certificate.b)
    embedded = embedded_profile(candidates, c1, c2, certificate.index, pair.profile)
    if score(embedded, alpha, ia) < score(embedded, alpha, ib):
        ia, ib = ib, ia

    swapped = transpose_profile(embedded, ia, ib)
    weight = Fraction(1, factorial(m))
    mass: Dict[Ranking, Fraction] = {}
    for pi in all_permutations(candidates):
        source = swapped if pi.fixes(c1) else embedded
        for ranking, value in source.items():
            moved = tuple(pi.images[x] for x in ranking)
            mass[moved] = mass.get(moved, Fraction(0)) + value * weight

    logger.info(f"Built query complexity instance for alpha=({alpha.format()}), t*={tstar}, i={certificate.index}")
    return QueryComplexityInstance(
        alpha=alpha,
        tstar=tstar,
        inner=c1,
        a=candidates.label(ia),
        b=candidates.label(ib),
        index=certificate.index,
        embedded=embedded,
        profile=Profile._trusted(candidates, mass),
    )


def first_uncovered(m: int, tstar: int, queries: Sequence[Sequence[int]]) -> Optional[Tuple[int, ...]]:
    """Lexicographically first t*-set contained in no query"""
    issued = [frozenset(q) for q in queries]
    for candidate_set in combinations(range(m), tstar):
        members = frozenset(candidate_set)
        if not any(members <= q for q in issued):
            return candidate_set
    return None


@dataclass(frozen=True)
class Deception:
    uncovered: Tuple[int, ...]
    winner: str
    permutation: Permutation
    profile: Profile


def deceive_deterministic(
    instance: QueryComplexityInstance, queries: Sequence[Sequence[Candidate]], output: Candidate
) -> Deception:
    """
    Against a deterministic algorithm that issued queries (all answered with
    uniform distributions) and then output a candidate: relabel sigma* so that
    its unique winner lies in an uncovered t*-set and differs from the output,
    while every issued query still sees the uniform distribution.
    """
    candidates = instance.candidates
    m = candidates.m
    resolved = [candidates.resolve_subset(q) for q in queries]
    c = candidates.index(output)
    uncovered = first_uncovered(m, instance.tstar, resolved)
    if uncovered is None:
        raise InvalidArgumentError(f"the queries cover every {instance.tstar}-set; no deception exists")

    target = next(x for x in uncovered if x != c)
    ib = candidates.index(instance.b)
    sources = [ib] + [x for x in instance.inner if x != ib]
    targets = [target] + [x for x in uncovered if x != target]
    mapping = dict(zip(sources, targets))
    rest_sources = [x for x in range(m) if x not in mapping]
    rest_targets = [x for x in range(m) if x not in set(targets)]
    mapping.update(zip(rest_sources, rest_targets))
    pi = Permutation(candidates, tuple(mapping[x] for x in range(m)))

    return Deception(
        uncovered=uncovered,
        winner=candidates.label(target),
        permutation=pi,
        profile=permute_profile(instance.profile, pi),
    )


def bound_success_probability(delta: RationalLike, m: int, tstar: int) -> Fraction:
    """min(delta + 1/m, delta + (1 - delta)/t*) for an algorithm covering a delta fraction of t*-sets"""
    d = parse_rational(delta)
    require(0 <= d <= 1, f"delta must lie in [0, 1], got {d}")
    require(tstar >= 2 and m >= tstar, f"need 2 <= t* <= m, got m={m}, t*={tstar}")
    return min(d + Fraction(1, m), d + (1 - d) / tstar)


# best achievable success for m=3, t*=2 (Borda with pairwise queries), by delta
KNOWN_OPTIMA_M3: Dict[Fraction, Fraction] = {
    Fraction(0): Fraction(1, 3),
    Fraction(1, 3): Fraction(1, 3),
    Fraction(2, 3): Fraction(1, 2),
    Fraction(1): Fraction(1),
}


def bound_curve(m: int, tstar: int, deltas: Sequence[RationalLike]) -> List[BoundRow]:
    """Upper bound rows with the 1/m random-guess baseline and known optima where they exist"""
    rows = []
    for delta in deltas:
        d = parse_rational(delta)
        optimal = KNOWN_OPTIMA_M3.get(d) if (m, tstar) == (3, 2) else None
        rows.append(
            BoundRow(delta=d, bound=bound_success_probability(d, m, tstar), baseline=Fraction(1, m), optimal=optimal)
        )
    return rows


def uniform_grid(steps: int) -> List[Fraction]:
    """0, 1/steps, ..., 1"""
    require(steps >= 1, f"grid needs at least one step, got {steps}")
    return [Fraction(k, steps) for k in range(steps + 1)]
