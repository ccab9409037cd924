from elicit.rules.presets import preset
from elicit.scoring.basis import basis_vector, span_membership
from elicit.utils.helpers import binomial
from .base_verification import BaseVerification, CheckContext


class CharacterizationVerification(BaseVerification):
    sizes = range(2, 9)

    def get_name(self) -> str:
        return "characterization"

    def get_description(self) -> str:
        return "plurality outside R_{m,t} for t < m, Borda inside for t >= 2, triangular nested basis"

    def check_size(self, m: int, context: CheckContext):
        plurality, borda = preset("plurality", m), preset("borda", m)
        for t in range(1, m):
            decision = span_membership(plurality, t)
            context.expect(not decision.member, f"m={m}, t={t}: plurality reported inside R_{{{m},{t}}}")
        for t in range(2, m + 1):
            context.expect(span_membership(borda, t).member, f"m={m}, t={t}: Borda reported outside R_{{{m},{t}}}")

        for t in range(1, m + 1):
            for k in range(1, t + 1):
                vector = basis_vector(m, t, k)
                diagonal = vector[k - 1]
                context.expect(
                    diagonal == binomial(m - k, t - k) and diagonal > 0,
                    f"m={m}, t={t}, k={k}: diagonal entry {diagonal}, expected C({m - k},{t - k})",
                )
                context.expect(
                    all(vector[j] == 0 for j in range(k - 1)),
                    f"m={m}, t={t}, k={k}: nonzero entry above the diagonal position",
                )
                # R_{m,t} sits inside R_{m,t'} for every larger t'
                for wider in range(t, m + 1):
                    context.expect(
                        span_membership(vector, wider).member,
                        f"m={m}: basis vector k={k} of R_{{{m},{t}}} is outside R_{{{m},{wider}}}",
                    )
