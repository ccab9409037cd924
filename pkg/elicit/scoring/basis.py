"""
The alpha^k basis of R_{m,t} and exact span membership.

alpha^k_j = C(j-1, k-1) * C(m-j, t-k) for positions j = 1..m. The family is
upper-triangular: alpha^k_j = 0 for j < k and alpha^k_k = C(m-k, t-k) > 0, so
membership is decided by forward substitution over positions 1..t followed by
a residual check over the remaining positions.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from elicit.models.results import SpanDecision
from elicit.scoring.vectors import ScoringVector
from elicit.utils.helpers import binomial
from elicit.utils.logger import get_logger
from elicit.utils.validators import require

logger = get_logger(__name__)


def basis_vector(m: int, t: int, k: int) -> ScoringVector:
    require(1 <= k <= t <= m, f"need 1 <= k <= t <= m, got m={m}, t={t}, k={k}")
    return ScoringVector(tuple(Fraction(binomial(j - 1, k - 1) * binomial(m - j, t - k)) for j in range(1, m + 1)))


@dataclass(frozen=True)
class BasisFamily:
    m: int
    t: int
    vectors: Tuple[ScoringVector, ...]

    @classmethod
    def build(cls, m: int, t: int) -> "BasisFamily":
        return cls(m, t, tuple(basis_vector(m, t, k) for k in range(1, t + 1)))

    def combine(self, coefficients: Tuple[Fraction, ...]) -> ScoringVector:
        """sum_k lambda_k alpha^k"""
        require(len(coefficients) == self.t, f"expected {self.t} coefficients, got {len(coefficients)}")
        return ScoringVector(
            tuple(
                sum((lam * vec[j] for lam, vec in zip(coefficients, self.vectors)), Fraction(0))
                for j in range(self.m)
            )
        )


def span_membership(alpha: ScoringVector, t: int) -> SpanDecision:
    """Decide alpha in R_{m,t}; coefficients reproduce alpha exactly, a residual certifies otherwise"""
    m = alpha.m
    require(1 <= t <= m, f"need 1 <= t <= m={m}, got t={t}")
    family = BasisFamily.build(m, t)

    coefficients: List[Fraction] = []
    for j in range(t):
        partial = sum((coefficients[k] * family.vectors[k][j] for k in range(j)), Fraction(0))
        coefficients.append((alpha[j] - partial) / family.vectors[j][j])

    reproduced = family.combine(tuple(coefficients))
    residual = tuple(a - r for a, r in zip(alpha, reproduced))

    if any(residual):
        logger.debug(f"alpha={alpha.format()} is outside R_{m},{t}")
        return SpanDecision(m=m, t=t, alpha=alpha.weights, member=False, residual=residual)
    return SpanDecision(m=m, t=t, alpha=alpha.weights, member=True, coefficients=tuple(coefficients))


def minimal_query_size(alpha: ScoringVector) -> int:
    """Smallest t with alpha in R_{m,t}; R_{m,m} is the whole space"""
    for t in range(1, alpha.m + 1):
        if span_membership(alpha, t).member:
            return t
    return alpha.m
