from fractions import Fraction
from typing import Optional, Sequence

from elicit.constructions.embedding import embedded_profile
from elicit.constructions.parity import parity_pair
from elicit.exceptions import InvalidArgumentError
from elicit.models.results import SeparationCertificate
from elicit.profiles.core import Candidate, CandidateSet, pos_vector
from elicit.scoring.basis import span_membership
from elicit.scoring.vectors import ScoringVector
from elicit.utils.logger import get_logger
from elicit.utils.validators import require

logger = get_logger(__name__)


def separating_index(
    alpha: ScoringVector,
    t: int,
    inner: Optional[Sequence[Candidate]] = None,
    a: Optional[Candidate] = None,
    b: Optional[Candidate] = None,
    candidates: Optional[CandidateSet] = None,
) -> SeparationCertificate:
    """
    For alpha outside R_{m,t}, find an embedded profile on which a and b score
    differently although it cannot be told apart from its a<->b transposition
    with queries of size t.

    inner is C1 (t+1 candidates, default: the first t+1); C2 is its complement
    in canonical order; the inner profile is the parity pair of (a, b) on C1.
    """
    m = alpha.m
    candidates = candidates or CandidateSet.letters(m)
    require(candidates.m == m, f"scoring vector has {m} weights for {candidates.m} candidates")
    require(1 <= t < m, f"need 1 <= t < m={m}, got t={t}")
    if span_membership(alpha, t).member:
        raise InvalidArgumentError(f"alpha=({alpha.format()}) lies in R_{{{m},{t}}}; no separation exists")

    c1 = candidates.resolve_subset(inner if inner is not None else range(t + 1))
    require(len(c1) == t + 1, f"C1 must have exactly t+1={t + 1} candidates, got {len(c1)}")
    ia = candidates.index(a) if a is not None else c1[0]
    ib = candidates.index(b) if b is not None else c1[1]
    require(ia in c1 and ib in c1 and ia != ib, "a and b must be distinct members of C1")
    c2 = [c for c in range(m) if c not in c1]

    inner_candidates = candidates.subset(c1)
    pair = parity_pair(inner_candidates, candidates.label(ia), candidates.label(ib))

    differences = []
    gaps = []
    for i in range(1, m - t + 1):
        profile = embedded_profile(candidates, c1, c2, i, pair.profile)
        s = tuple(x - y for x, y in zip(pos_vector(profile, ia), pos_vector(profile, ib)))
        differences.append(s)
        gaps.append(alpha.dot(s))

    index = next((i for i, gap in enumerate(gaps, start=1) if gap != 0), None)
    if index is None:
        raise InvalidArgumentError(f"no embedded profile separates {candidates.label(ia)} and {candidates.label(ib)}")

    logger.debug(f"Separated a and b at i={index} with gap {gaps[index - 1]}")
    return SeparationCertificate(
        m=m,
        t=t,
        a=candidates.label(ia),
        b=candidates.label(ib),
        inner=[candidates.label(c) for c in c1],
        outer=[candidates.label(c) for c in c2],
        index=index,
        differences=differences,
        gaps=tuple(gaps),
        gap=gaps[index - 1],
    )
