from elicit.constructions.embedding import embedded_profile
from elicit.constructions.parity import parity_pair
from elicit.profiles.core import CandidateSet, pos_vector
from elicit.rules.presets import plurality_score, preset
from elicit.scoring.basis import span_membership
from elicit.scoring.separation import separating_index
from elicit.scoring.vectors import ScoringVector
from .base_verification import BaseVerification, CheckContext


class SeparationVerification(BaseVerification):
    """
    Rebuilds every embedded profile of a separation certificate and checks
    the position differences from pos_vector directly.
    """

    sizes = range(3, 7)

    def get_name(self) -> str:
        return "separation"

    def get_description(self) -> str:
        return "separating_index certificates for plurality (t = m-1) and veto are triangular with a nonzero gap"

    def check_size(self, m: int, context: CheckContext):
        candidates = CandidateSet.letters(m)
        cases = [("plurality", preset("plurality", m), m - 1)]
        veto = preset("veto", m)
        cases.extend(("veto", veto, t) for t in range(1, m) if not span_membership(veto, t).member)
        for name, alpha, t in cases:
            self._check_certificate(candidates, name, alpha, t, context)

    def _check_certificate(self, candidates: CandidateSet, name: str, alpha: ScoringVector, t: int,
                           context: CheckContext):
        m = candidates.m
        certificate = separating_index(alpha, t, candidates=candidates)
        inner = candidates.resolve_subset(certificate.inner)
        outer = [candidates.index(c) for c in certificate.outer]
        pair = parity_pair(candidates.subset(inner), certificate.a, certificate.b)
        top_gap = plurality_score(pair.profile, certificate.a) - plurality_score(pair.profile, certificate.b)

        for i in range(1, m - t + 1):
            profile = embedded_profile(candidates, inner, outer, i, pair.profile)
            s = tuple(x - y for x, y in zip(pos_vector(profile, certificate.a), pos_vector(profile, certificate.b)))
            label = f"{name}, m={m}, t={t}, i={i}"
            context.expect(s == tuple(certificate.differences[i - 1]), f"{label}: certificate differences disagree")
            context.expect(all(x == 0 for x in s[: i - 1]), f"{label}: nonzero difference before position {i}")
            context.expect(s[i - 1] == top_gap and top_gap != 0, f"{label}: s_i={s[i - 1]}, expected {top_gap}")

        context.expect(certificate.gap != 0, f"{name}, m={m}, t={t}: zero gap")
        context.expect(
            alpha.dot(certificate.differences[certificate.index - 1]) == certificate.gap,
            f"{name}, m={m}, t={t}: gap does not match alpha . s",
        )
