from fractions import Fraction

from elicit.profiles.core import CandidateSet
from elicit.profiles.generators import random_profile
from elicit.queries.session import QuerySession
from elicit.scoring.basis import BasisFamily
from elicit.scoring.scores import score_via_queries, scores, winner_via_queries, winners
from elicit.utils.helpers import binomial
from .base_verification import BaseVerification, CheckContext


class ScoreComputationVerification(BaseVerification):
    """Scores and winners recovered from t-queries agree with direct evaluation"""

    sizes = range(2, 6)

    def get_name(self) -> str:
        return "score-computation"

    def get_description(self) -> str:
        return "score_via_queries and winner_via_queries match exact scores for alpha in R_{m,t}"

    def check_size(self, m: int, context: CheckContext):
        candidates = CandidateSet.letters(m)
        most_queries = 0
        for t in range(1, m + 1):
            family = BasisFamily.build(m, t)
            for k in range(context.instances):
                profile = random_profile(candidates, seed=context.rng)
                coefficients = tuple(Fraction(int(x)) for x in context.rng.integers(-3, 4, size=t))
                alpha = family.combine(coefficients)
                session = QuerySession(profile, t)

                direct = scores(profile, alpha)
                for c in range(m):
                    via = score_via_queries(session, alpha, c)
                    context.expect(
                        via == direct[c],
                        f"m={m}, t={t}, instance {k}: score of {candidates.label(c)} is {via} via queries, "
                        f"{direct[c]} directly (alpha=({alpha.format()}))",
                    )
                found = winner_via_queries(session, alpha)
                context.expect(
                    found == winners(profile, alpha),
                    f"m={m}, t={t}, instance {k}: winners {found} via queries, {winners(profile, alpha)} directly",
                )
                context.expect(
                    session.query_count <= binomial(m, t),
                    f"m={m}, t={t}: {session.query_count} queries exceed C(m,t)={binomial(m, t)}",
                )
                most_queries = max(most_queries, session.query_count)
        context.note(f"most_queries_m{m}", most_queries)
