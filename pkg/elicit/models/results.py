from typing import Dict, List, Optional, Tuple

from pydantic import Field, model_validator

from elicit.models.common import FrozenModel, Rational, RationalVector
from elicit.models.documents import ProfileDocument


class IndistinguishabilityWitness(FrozenModel):
    """A query and restricted ranking on which two profiles disagree"""
    query: List[str]
    ranking: List[str]
    first: Rational = Field(..., description="Mass of ranking under the first profile's restriction")
    second: Rational = Field(..., description="Mass of ranking under the second profile's restriction")


class IndistinguishabilityReport(FrozenModel):
    result: bool
    t: int
    queries_checked: int = 0
    witness: Optional[IndistinguishabilityWitness] = None

    @model_validator(mode="after")
    def check_witness(self):
        if self.result == (self.witness is not None):
            raise ValueError("a witness is present exactly when the profiles are distinguishable")
        if self.witness is not None and len(self.witness.query) != self.t:
            raise ValueError("witness query must have size exactly t")
        return self


class SampleReport(FrozenModel):
    """Empirical answer of the sampled oracle to one query"""
    query: List[str]
    n: int = Field(..., ge=1)
    draw_index: int = Field(..., ge=0, description="k in the per-query stream split")
    counts: Dict[str, int]
    empirical: ProfileDocument
    tv_distance: Rational


class SpanDecision(FrozenModel):
    """Membership of alpha in R_{m,t} with coefficients or a residual certificate"""
    m: int
    t: int
    alpha: RationalVector
    member: bool
    coefficients: Optional[RationalVector] = None
    residual: Optional[RationalVector] = None

    @model_validator(mode="after")
    def check_certificate(self):
        if (self.coefficients is None) == (self.residual is None):
            raise ValueError("exactly one of coefficients or residual must be present")
        if self.member != (self.coefficients is not None):
            raise ValueError("members carry coefficients, non-members a residual")
        if self.residual is not None and not any(self.residual):
            raise ValueError("a non-membership residual must be nonzero")
        return self


class SeparationCertificate(FrozenModel):
    """Embedded profiles on which a and b receive different scores"""
    m: int
    t: int
    a: str
    b: str
    inner: List[str] = Field(..., description="C1, the t+1 candidates of the inner profile")
    outer: List[str] = Field(..., description="C2 in its fixed order")
    index: int = Field(..., ge=1, description="Smallest i with a nonzero score gap")
    differences: List[RationalVector] = Field(..., description="s^i = pos(a) - pos(b) for every i")
    gaps: RationalVector = Field(..., description="score(a) - score(b) on every embedded profile")
    gap: Rational

    @model_validator(mode="after")
    def check_gap(self):
        if self.gap == 0:
            raise ValueError("certificate score gap must be nonzero")
        return self


class SimplexRow(FrozenModel):
    alpha: RationalVector
    constant: bool
    coordinates: Optional[RationalVector] = None
    tstar: int


class EliminationStep(FrozenModel):
    eliminated: str
    plurality: Dict[str, Rational] = Field(..., description="Plurality scores of the remaining candidates")


class EliminationTrace(FrozenModel):
    """One valid elimination sequence ending in winner"""
    winner: str
    steps: List[EliminationStep] = Field(default_factory=list)


class StvResult(FrozenModel):
    winners: List[str]
    traces: List[EliminationTrace]


class CondorcetMatch(FrozenModel):
    phase: str = Field(..., description="knockout or verification")
    round: int
    first: str
    second: str
    margin: Rational = Field(..., description="Pr[first ranked above second]")
    advances: str


class CondorcetRun(FrozenModel):
    m: int
    rounds: List[List[CondorcetMatch]]
    champion: str
    verification: List[CondorcetMatch]
    winner: Optional[str] = None
    queries_used: int
    query_bound: int


class ConsistentParameters(FrozenModel):
    i: int
    s: int
    r: int
    winner: str


class FibonacciRecord(FrozenModel):
    n: int
    i: int
    s: int
    r: int
    scaled: Tuple[int, int, int]
    margins: RationalVector
    winner: str


class CoverInstance(FrozenModel):
    """A list of t-subsets of range(m) meant to cover every t*-subset"""
    m: int
    t: int
    tstar: int
    sets: List[Tuple[int, ...]] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_sets(self):
        if not 1 <= self.tstar <= self.t <= self.m:
            raise ValueError(f"need 1 <= t* <= t <= m, got m={self.m}, t={self.t}, t*={self.tstar}")
        for s in self.sets:
            if len(set(s)) != self.t or not all(0 <= c < self.m for c in s):
                raise ValueError(f"{s} is not a {self.t}-subset of range({self.m})")
        return self


class CoverCheck(FrozenModel):
    valid: bool
    uncovered: Optional[Tuple[int, ...]] = None


class BoundRow(FrozenModel):
    delta: Rational
    bound: Rational
    baseline: Rational
    optimal: Optional[Rational] = None


class CoverRow(FrozenModel):
    m: int
    t: int
    tstar: int
    lower_bound: int
    rational_bound: Rational
    greedy: int
    exact: Optional[int] = None
