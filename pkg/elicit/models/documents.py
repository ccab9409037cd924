from typing import List

from pydantic import Field

from elicit.models.common import FrozenModel, Rational


class RankingMass(FrozenModel):
    """One support entry of a profile document"""
    ranking: List[str] = Field(..., description="Candidate labels, most preferred first")
    probability: Rational = Field(..., description="Exact probability as \"p/q\"")


class ProfileDocument(FrozenModel):
    """Text form of a profile"""
    candidates: List[str] = Field(..., description="Candidate labels in canonical order")
    rankings: List[RankingMass] = Field(..., description="Support rankings in canonical lexicographic order")


class TranscriptEntry(FrozenModel):
    """One answered query of a session"""
    query: List[str] = Field(..., description="Queried candidate labels in canonical order")
    response: ProfileDocument


class SessionTranscript(FrozenModel):
    """Query log and responses of a session, in issue order"""
    candidates: List[str]
    max_size: int = Field(..., ge=1, description="Session query size limit t")
    queries: List[TranscriptEntry] = Field(default_factory=list)
