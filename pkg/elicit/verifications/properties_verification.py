from fractions import Fraction
from itertools import combinations

from elicit.constructions.parity import parity_pair
from elicit.profiles.core import CandidateSet, Permutation, mix, permute_profile, restrict_profile, transpose_profile
from elicit.profiles.generators import random_profile
from elicit.queries.verifier import indistinguishable
from elicit.scoring.scores import winners
from elicit.scoring.vectors import ScoringVector
from .base_verification import BaseVerification, CheckContext

INSTANCES_PER_SIZE = 200


class PropertiesVerification(BaseVerification):
    """Algebraic laws of the profile operations on seeded random small instances"""

    sizes = range(2, 5)

    def get_name(self) -> str:
        return "properties"

    def get_description(self) -> str:
        return "restriction composition, transposition involution, affine invariance, mass conservation, monotonicity"

    def check_size(self, m: int, context: CheckContext):
        candidates = CandidateSet.letters(m)
        rng = context.rng
        count = max(INSTANCES_PER_SIZE, context.instances)

        for k in range(count):
            profile = random_profile(candidates, seed=rng)
            other = random_profile(candidates, seed=rng)
            label = f"m={m}, instance {k}"

            outer_size = int(rng.integers(1, m + 1))
            outer = tuple(sorted(int(c) for c in rng.choice(m, size=outer_size, replace=False)))
            inner_size = int(rng.integers(1, outer_size + 1))
            inner = tuple(sorted(int(c) for c in rng.choice(outer, size=inner_size, replace=False)))
            inner_labels = [candidates.label(c) for c in inner]
            nested = restrict_profile(restrict_profile(profile, outer), inner_labels)
            context.expect(nested == restrict_profile(profile, inner), f"{label}: restriction does not compose")

            a, b = (int(c) for c in rng.choice(m, size=2, replace=False))
            twice = transpose_profile(transpose_profile(profile, a, b), a, b)
            context.expect(twice == profile, f"{label}: transposition is not an involution")

            weights = [Fraction(int(x)) for x in rng.integers(-4, 5, size=m)]
            alpha = ScoringVector(tuple(weights))
            scale = Fraction(int(rng.integers(1, 6)), int(rng.integers(1, 6)))
            shift = Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4)))
            context.expect(
                winners(profile, alpha.affine(scale, shift)) == winners(profile, alpha),
                f"{label}: winners change under x -> {scale}x + {shift}",
            )

            pi = Permutation(candidates, tuple(int(c) for c in rng.permutation(m)))
            weight = Fraction(int(rng.integers(0, 4)), 3)
            for name, derived in (
                ("restriction", restrict_profile(profile, outer)),
                ("permutation", permute_profile(profile, pi)),
                ("transposition", transpose_profile(profile, a, b)),
                ("mixture", mix([(profile, weight), (other, 1 - weight)])),
            ):
                context.expect(derived.total() == 1, f"{label}: {name} has total mass {derived.total()}")

            # distinguishable with t-queries implies distinguishable with larger ones
            for t in range(1, m):
                if not indistinguishable(profile, other, t).result:
                    context.expect(
                        not indistinguishable(profile, other, t + 1).result,
                        f"{label}: profiles differ at t={t} but agree at t={t + 1}",
                    )
                    break

        if m >= 3:
            pair = parity_pair(candidates, 0, 1)
            for t in range(1, m):
                context.expect(
                    indistinguishable(pair.profile, pair.transposed, t).result,
                    f"m={m}: parity pair is told apart with t={t} < m",
                )
