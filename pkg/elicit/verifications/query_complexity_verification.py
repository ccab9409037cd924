from fractions import Fraction
from itertools import combinations

from elicit.constructions.query_complexity import (
    bound_success_probability,
    deceive_deterministic,
    query_complexity_instance,
    uniform_grid,
)
from elicit.profiles.core import restrict_profile, uniform_profile
from elicit.rules.presets import preset
from elicit.scoring.scores import winners
from .base_verification import BaseVerification, CheckContext

GRID_STEPS = 12


class QueryComplexityVerification(BaseVerification):
    sizes = range(3, 6)

    def get_name(self) -> str:
        return "query-complexity"

    def get_description(self) -> str:
        return "Borda hard instance: uniform answers on queries missing C1, unique winner b, success bound curve"

    def check_size(self, m: int, context: CheckContext):
        alpha = preset("borda", m)
        instance = query_complexity_instance(alpha)
        candidates = instance.candidates
        profile = instance.profile
        inner = set(instance.inner)

        found = winners(profile, alpha)
        context.expect(found == [instance.b], f"m={m}: winners {found}, expected [{instance.b}]")

        checked = 0
        for size in range(1, m):
            for members in combinations(range(m), size):
                if inner <= set(members):
                    continue
                checked += 1
                uniform = uniform_profile(candidates.subset(members))
                context.expect(
                    restrict_profile(profile, members) == uniform,
                    f"m={m}: query {[candidates.label(c) for c in members]} misses C1 but is not uniform",
                )
        context.note(f"uniform_queries_m{m}", checked)

        # a deterministic algorithm that asks the lexicographically first query of size m-1 and outputs a
        issued = [tuple(range(m - 1))]
        deception = deceive_deterministic(instance, issued, candidates.label(0))
        context.expect(
            winners(deception.profile, alpha) == [deception.winner] and deception.winner != candidates.label(0),
            f"m={m}: deceiving profile has winners {winners(deception.profile, alpha)}, target {deception.winner}",
        )
        for members in issued:
            context.expect(
                restrict_profile(deception.profile, members) == uniform_profile(candidates.subset(members)),
                f"m={m}: deceiving profile is not uniform on an issued query",
            )

        tstar = instance.tstar
        previous = None
        for delta in uniform_grid(GRID_STEPS):
            bound = bound_success_probability(delta, m, tstar)
            expected = min(delta + Fraction(1, m), delta + (1 - delta) / tstar)
            context.expect(bound == expected, f"m={m}, delta={delta}: bound {bound}, expected {expected}")
            context.expect(previous is None or bound >= previous, f"m={m}: bound decreases at delta={delta}")
            previous = bound
        context.expect(bound_success_probability(1, m, tstar) == 1, f"m={m}: bound at delta=1 is not 1")
