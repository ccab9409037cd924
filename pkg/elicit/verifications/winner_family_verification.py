from itertools import combinations

from elicit.constructions.ambiguity import ambiguity_hypothesis
from elicit.constructions.parity import parity_pair
from elicit.constructions.winner_family import winner_family
from elicit.profiles.core import CandidateSet, restrict_profile, uniform_profile
from elicit.rules.presets import preset
from elicit.scoring.scores import winners
from .base_verification import BaseVerification, CheckContext


class WinnerFamilyVerification(BaseVerification):
    sizes = range(3, 6)

    def get_name(self) -> str:
        return "winner-family"

    def get_description(self) -> str:
        return "plurality winner family: m profiles, pairwise (m-1)-indistinguishable, distinct unique winners"

    def check_size(self, m: int, context: CheckContext):
        candidates = CandidateSet.letters(m)
        alpha = preset("plurality", m)
        pair = parity_pair(candidates, "a", "b")
        family = winner_family(pair.profile, pair.a, pair.b, alpha)

        context.expect(len(family.profiles) == m, f"m={m}: family has {len(family.profiles)} profiles")
        check = ambiguity_hypothesis(family.profiles, m - 1, lambda profile: winners(profile, alpha))
        context.expect(check.passed, f"m={m}: {check.witness}")

        uniform = uniform_profile(candidates)
        for name, profile in family.profiles.items():
            context.expect(profile.total() == 1, f"m={m}: profile {name} has total mass {profile.total()}")
            for members in combinations(range(m), m - 1):
                context.expect(
                    restrict_profile(profile, members) == restrict_profile(uniform, members),
                    f"m={m}: profile {name} restricted to {[candidates.label(c) for c in members]} is not uniform",
                )
        context.note(f"pairs_checked_m{m}", check.pairs_checked)
