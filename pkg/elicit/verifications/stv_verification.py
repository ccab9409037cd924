from elicit.constructions.ambiguity import ambiguity_hypothesis
from elicit.constructions.stv_family import stv_family
from elicit.profiles.core import CandidateSet
from elicit.rules.stv import stv_winners
from .base_verification import BaseVerification, CheckContext


class StvVerification(BaseVerification):
    sizes = range(3, 6)

    def get_name(self) -> str:
        return "stv"

    def get_description(self) -> str:
        return "STV family with eps = 1/m^2: pairwise (m-1)-indistinguishable, STV winner exactly c on sigma^c"

    def check_size(self, m: int, context: CheckContext):
        profiles = stv_family(CandidateSet.letters(m))
        check = ambiguity_hypothesis(profiles, m - 1, lambda profile: stv_winners(profile).winners)
        context.expect(check.passed, f"m={m}: {check.witness}")
        context.note(f"winners_m{m}", check.winners)
