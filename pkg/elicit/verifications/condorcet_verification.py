from elicit.profiles.core import CandidateSet, Profile
from elicit.profiles.generators import random_profile
from elicit.queries.session import QuerySession
from elicit.rules.condorcet import condorcet_query_bound, condorcet_via_queries, condorcet_winner
from .base_verification import BaseVerification, CheckContext


def three_cycle() -> Profile:
    """a > b > c, b > c > a and c > a > b with one third each"""
    return Profile(
        CandidateSet.letters(3),
        {("a", "b", "c"): "1/3", ("b", "c", "a"): "1/3", ("c", "a", "b"): "1/3"},
    )


class CondorcetVerification(BaseVerification):
    sizes = range(2, 17)

    def get_name(self) -> str:
        return "condorcet"

    def get_description(self) -> str:
        return "knockout plus verification agrees with brute force within 2m - floor(log2 m) - 2 pairwise queries"

    def check_size(self, m: int, context: CheckContext):
        candidates = CandidateSet.letters(m)
        bound = condorcet_query_bound(m)

        profiles = [random_profile(candidates, seed=context.rng) for _ in range(context.instances)]
        # a point mass always has its top candidate as Condorcet winner
        order = tuple(int(c) for c in context.rng.permutation(m))
        profiles.append(Profile.point_mass(candidates, order))

        found_winners = 0
        for k, profile in enumerate(profiles):
            run = condorcet_via_queries(QuerySession(profile, 2))
            expected = condorcet_winner(profile)
            context.expect(run.winner == expected, f"m={m}, instance {k}: knockout found {run.winner}, brute force {expected}")
            context.expect(
                run.queries_used <= bound, f"m={m}, instance {k}: {run.queries_used} queries exceed the bound {bound}"
            )
            found_winners += expected is not None
        context.expect(
            condorcet_winner(profiles[-1]) == candidates.label(order[0]),
            f"m={m}: point mass on {candidates.format_ranking(order)} has no Condorcet winner",
        )
        context.note(f"condorcet_winners_m{m}", found_winners)

        if m == 3:
            cycle = three_cycle()
            run = condorcet_via_queries(QuerySession(cycle, 2))
            context.expect(run.winner is None, f"three-cycle reported winner {run.winner}")
