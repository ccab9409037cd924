from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Tuple

from elicit.utils.helpers import RationalLike, format_rational, parse_rational, parse_rational_list
from elicit.utils.validators import require


@dataclass(frozen=True)
class ScoringVector:
    """Weights alpha_1..alpha_m; position j of a ballot earns alpha_j points"""

    weights: Tuple[Fraction, ...]

    def __post_init__(self):
        weights = tuple(parse_rational(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        require(len(weights) >= 1, "a scoring vector needs at least one weight")

    @classmethod
    def of(cls, weights: Sequence[RationalLike]) -> "ScoringVector":
        return cls(tuple(weights))

    @classmethod
    def parse(cls, text: str) -> "ScoringVector":
        """From a comma-separated rational list such as "3,2,1,0" or "1/2,0,-1/2" """
        return cls(parse_rational_list(text))

    @property
    def m(self) -> int:
        return len(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.weights)

    def __getitem__(self, j: int) -> Fraction:
        return self.weights[j]

    def affine(self, scale: RationalLike, shift: RationalLike = 0) -> "ScoringVector":
        """scale * alpha + shift * 1"""
        c, d = parse_rational(scale), parse_rational(shift)
        return ScoringVector(tuple(c * w + d for w in self.weights))

    def dot(self, vector: Sequence[Fraction]) -> Fraction:
        require(len(vector) == self.m, f"dimension mismatch: {len(vector)} entries against m={self.m}")
        return sum((w * v for w, v in zip(self.weights, vector)), Fraction(0))

    def is_constant(self) -> bool:
        return len(set(self.weights)) == 1

    def format(self) -> str:
        return ",".join(format_rational(w) for w in self.weights)
