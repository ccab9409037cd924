from .common import FrozenModel, Rational, RationalVector
from .documents import ProfileDocument, RankingMass, SessionTranscript, TranscriptEntry
from .reports import Outcome, RunReport, VerificationResult
from .results import (
    BoundRow,
    CondorcetMatch,
    CondorcetRun,
    ConsistentParameters,
    CoverCheck,
    CoverInstance,
    CoverRow,
    EliminationStep,
    EliminationTrace,
    FibonacciRecord,
    IndistinguishabilityReport,
    IndistinguishabilityWitness,
    SampleReport,
    SeparationCertificate,
    SimplexRow,
    SpanDecision,
    StvResult,
)

__all__ = [
    "FrozenModel",
    "Rational",
    "RationalVector",
    "ProfileDocument",
    "RankingMass",
    "SessionTranscript",
    "TranscriptEntry",
    "Outcome",
    "RunReport",
    "VerificationResult",
    "BoundRow",
    "CondorcetMatch",
    "CondorcetRun",
    "ConsistentParameters",
    "CoverCheck",
    "CoverInstance",
    "CoverRow",
    "EliminationStep",
    "EliminationTrace",
    "FibonacciRecord",
    "IndistinguishabilityReport",
    "IndistinguishabilityWitness",
    "SampleReport",
    "SeparationCertificate",
    "SimplexRow",
    "SpanDecision",
    "StvResult",
]
