from elicit.covering.designs import (
    cover_lower_bound,
    exact_cover,
    greedy_cover,
    is_cover,
    redundant_set,
    tiny_parameters,
)
from elicit.utils.helpers import binomial
from .base_verification import BaseVerification, CheckContext


class CoveringVerification(BaseVerification):
    sizes = range(1, 9)

    def get_name(self) -> str:
        return "covering"

    def get_description(self) -> str:
        return "lower bound <= exact minimum <= greedy, every cover valid and every exact cover irredundant"

    def check_size(self, m: int, context: CheckContext):
        gaps = 0
        for t in range(1, m + 1):
            context.expect(
                cover_lower_bound(m, t, t) == binomial(m, t),
                f"cov bound ({m},{t},{t}) is {cover_lower_bound(m, t, t)}, expected C({m},{t})",
            )
        for size, t, tstar in tiny_parameters(m):
            if size != m:
                continue
            label = f"(m,t,t*)=({m},{t},{tstar})"
            lower = cover_lower_bound(m, t, tstar)
            greedy = greedy_cover(m, t, tstar)
            exact = exact_cover(m, t, tstar)
            context.expect(is_cover(greedy).valid, f"{label}: greedy cover misses {is_cover(greedy).uncovered}")
            context.expect(is_cover(exact).valid, f"{label}: exact cover misses {is_cover(exact).uncovered}")
            context.expect(
                lower <= len(exact.sets) <= len(greedy.sets),
                f"{label}: bound {lower}, exact {len(exact.sets)}, greedy {len(greedy.sets)}",
            )
            context.expect(redundant_set(exact) is None, f"{label}: exact cover has a redundant set")
            gaps += len(exact.sets) > lower
        context.note(f"loose_bounds_m{m}", gaps)
