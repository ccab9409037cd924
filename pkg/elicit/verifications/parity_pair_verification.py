from fractions import Fraction

from elicit.constructions.parity import parity_pair
from elicit.profiles.core import CandidateSet
from elicit.queries.verifier import indistinguishable
from elicit.rules.presets import plurality_score
from elicit.utils.helpers import format_rational
from .base_verification import BaseVerification, CheckContext


class ParityPairVerification(BaseVerification):
    sizes = range(3, 7)

    def get_name(self) -> str:
        return "parity-pair"

    def get_description(self) -> str:
        return "plu(a) = 1/2^(m-2), plu(b) = 0; hidden from (m-1)-queries, exposed by the full query"

    def check_size(self, m: int, context: CheckContext):
        pair = parity_pair(CandidateSet.letters(m), "a", "b")
        expected = Fraction(1, 2 ** (m - 2))

        top_a = plurality_score(pair.profile, pair.a)
        top_b = plurality_score(pair.profile, pair.b)
        context.expect(top_a == expected, f"m={m}: plu(a)={top_a}, expected {expected}")
        context.expect(top_b == 0, f"m={m}: plu(b)={top_b}, expected 0")
        context.expect(pair.profile.total() == 1, f"m={m}: total mass {pair.profile.total()}")

        hidden = indistinguishable(pair.profile, pair.transposed, m - 1)
        context.expect(hidden.result, f"m={m}: pair differs on query {hidden.witness and hidden.witness.query}")
        exposed = indistinguishable(pair.profile, pair.transposed, m)
        context.expect(
            not exposed.result and exposed.witness is not None,
            f"m={m}: the full query does not separate the pair",
        )
        context.note(f"plurality_a_m{m}", format_rational(top_a))
