from fractions import Fraction
from typing import List, Sequence, Tuple

from elicit.exceptions import NotComputableError
from elicit.profiles.core import Candidate, Profile, pairwise_matrix, pos_vector
from elicit.queries.session import QuerySession
from elicit.scoring.basis import span_membership
from elicit.scoring.vectors import ScoringVector
from elicit.utils.helpers import subsets_of_size
from elicit.utils.logger import get_logger
from elicit.utils.validators import require

logger = get_logger(__name__)


def _check_dimension(profile: Profile, alpha: ScoringVector):
    require(alpha.m == profile.m, f"scoring vector has {alpha.m} weights for {profile.m} candidates")


def score(profile: Profile, alpha: ScoringVector, candidate: Candidate) -> Fraction:
    """E[alpha at the candidate's position]"""
    _check_dimension(profile, alpha)
    return alpha.dot(pos_vector(profile, candidate))


def scores(profile: Profile, alpha: ScoringVector) -> Tuple[Fraction, ...]:
    """Scores of every candidate in canonical order, one pass over the support"""
    _check_dimension(profile, alpha)
    totals = [Fraction(0)] * profile.m
    for ranking, value in profile.items():
        for position, c in enumerate(ranking):
            totals[c] += value * alpha[position]
    return tuple(totals)


def argmax_labels(profile: Profile, values: Sequence[Fraction]) -> List[str]:
    best = max(values)
    return [profile.candidates.label(c) for c, v in enumerate(values) if v == best]


def winners(profile: Profile, alpha: ScoringVector) -> List[str]:
    """Full argmax set in canonical candidate order"""
    return argmax_labels(profile, scores(profile, alpha))


def borda_from_pairwise(profile: Profile) -> Tuple[Fraction, ...]:
    """Borda score of c as sum over c' != c of Pr[c above c']"""
    matrix = pairwise_matrix(profile)
    return tuple(sum(row, Fraction(0)) for row in matrix)


def _basis_scores(session: QuerySession) -> List[List[Fraction]]:
    """
    Entry [c][k] is the sum over all t-subsets S of Pr[sigma|_S(k+1) = c],
    which equals the alpha^{k+1} score of c.
    """
    t, m = session.max_size, session.m
    totals = [[Fraction(0)] * t for _ in range(m)]
    for members in subsets_of_size(m, t):
        response = session.lookup(members)
        for ranking, value in response.items():
            for k, local in enumerate(ranking):
                totals[members[local]][k] += value
    return totals


def _combined_scores(session: QuerySession, alpha: ScoringVector) -> Tuple[Fraction, ...]:
    require(alpha.m == session.m, f"scoring vector has {alpha.m} weights for {session.m} candidates")
    decision = span_membership(alpha, session.max_size)
    if not decision.member:
        raise NotComputableError(
            f"alpha=({alpha.format()}) is outside R_{{{session.m},{session.max_size}}}; "
            f"no algorithm with queries of size {session.max_size} computes its scores"
        )
    totals = _basis_scores(session)
    return tuple(
        sum((lam * basis for lam, basis in zip(decision.coefficients, totals[c])), Fraction(0))
        for c in range(session.m)
    )


def score_via_queries(session: QuerySession, alpha: ScoringVector, candidate: Candidate) -> Fraction:
    """The alpha-score of candidate using only queries of the session's size"""
    c = session.candidates.index(candidate)
    return _combined_scores(session, alpha)[c]


def winner_via_queries(session: QuerySession, alpha: ScoringVector) -> List[str]:
    values = _combined_scores(session, alpha)
    best = max(values)
    logger.debug(f"Computed scores with {session.query_count} queries of size {session.max_size}")
    return [session.candidates.label(c) for c, v in enumerate(values) if v == best]
