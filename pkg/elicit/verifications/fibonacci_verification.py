from collections import Counter
from fractions import Fraction
from typing import Optional

from elicit.config import settings
from elicit.constructions.fibonacci import (
    THIRD,
    TWO_THIRDS,
    WINNER_TABLE,
    fibonacci_consistent_set,
    fibonacci_instance,
    fibonacci_success_bound,
    in_event,
    shifted_fibonacci,
)
from elicit.profiles.core import restrict_profile
from elicit.rules.three_candidate import guess_success, one_query_success, two_query_success
from elicit.scoring.scores import winners
from elicit.scoring.vectors import ScoringVector
from elicit.utils.helpers import format_rational
from .base_verification import BaseVerification, CheckContext

SIGNED_BORDA = ScoringVector.of([1, 0, -1])

# restriction that exposes each margin: (pair, ranking)
MARGIN_QUERIES = ((("a", "b"), ("a", "b")), (("b", "c"), ("b", "c")), (("a", "c"), ("c", "a")))


class FibonacciVerification(BaseVerification):
    """
    Runs once per call on n = FIBONACCI_N; the candidate count is always 3,
    so max_m only gates whether it runs at all.
    """

    sizes = (3,)

    def __init__(self, n: Optional[int] = None):
        self.n = n

    def get_name(self) -> str:
        return "fibonacci"

    def get_description(self) -> str:
        return "Fibonacci instances: margins in [1/3, 2/3], declared winners, consistent sets of 6, 2 and 4"

    def check_size(self, m: int, context: CheckContext):
        n = self.n or settings.FIBONACCI_N
        big = shifted_fibonacci(n + 2)
        worst_one, worst_two = Fraction(1), Fraction(1)

        for i in range(1, n + 1):
            for s in range(n * big + 1):
                for r in WINNER_TABLE:
                    instance = fibonacci_instance(n, i, s, r)
                    label = f"n={n}, (i,s,r)=({i},{s},{r})"
                    context.expect(
                        all(THIRD <= p <= TWO_THIRDS for p in instance.margins),
                        f"{label}: margins {[format_rational(p) for p in instance.margins]} leave [1/3, 2/3]",
                    )
                    for p, (pair, ranking) in zip(instance.margins, MARGIN_QUERIES):
                        observed = restrict_profile(instance.profile, pair).mass(ranking)
                        context.expect(observed == p, f"{label}: Pr[{ranking[0]} > {ranking[1]}] is {observed}")
                    found = winners(instance.profile, SIGNED_BORDA)
                    context.expect(found == [instance.winner], f"{label}: winners {found}, declared {instance.winner}")

                    if not in_event(n, i, s):
                        continue
                    self._check_consistent_sets(n, instance, label, context)
                    if s == big:
                        worst_one = min(worst_one, one_query_success(instance.profile))
                        worst_two = min(worst_two, two_query_success(instance.profile))
                        context.expect(
                            guess_success(instance.profile) == THIRD, f"{label}: guessing does not succeed w.p. 1/3"
                        )

        context.note("worst_one_query_success", format_rational(worst_one))
        context.note("worst_two_query_success", format_rational(worst_two))

    def _check_consistent_sets(self, n: int, instance, label: str, context: CheckContext):
        p1, p2, _ = instance.scaled

        one = fibonacci_consistent_set(n, {1: p1}, i=instance.i)
        tally = Counter(p.winner for p in one)
        context.expect(
            len(one) == 6 and tally == Counter({"a": 2, "b": 2, "c": 2}),
            f"{label}: one observed margin leaves {len(one)} triples with winners {dict(tally)}",
        )
        context.expect(fibonacci_success_bound(one) == THIRD, f"{label}: one-margin success is not 1/3")

        two = fibonacci_consistent_set(n, {1: p1, 2: p2})
        tally = Counter(p.winner for p in two)
        if instance.r in (1, 2):
            expected_size, expected = 2, Counter({"a": 1, "c": 1})
        else:
            expected_size, expected = 4, Counter({"a": 1, "b": 2, "c": 1})
        context.expect(
            len(two) == expected_size and tally == expected,
            f"{label}: two observed margins leave {len(two)} triples with winners {dict(tally)}",
        )
        context.expect(fibonacci_success_bound(two) == Fraction(1, 2), f"{label}: two-margin success is not 1/2")
