from typing import Any, Dict, List, Optional

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel, Field

from elicit.config import VERIFICATION_ORDER
from elicit.exceptions import ElicitError
from elicit.models.common import FrozenModel, Rational
from elicit.models.documents import ProfileDocument
from elicit.models.reports import VerificationResult
from elicit.models.results import SpanDecision
from elicit.profiles.io import profile_from_document
from elicit.queries.session import QuerySession
from elicit.rules.presets import resolve_vector
from elicit.scoring.basis import span_membership
from elicit.scoring.scores import scores, winner_via_queries, winners
from elicit.scoring.vectors import ScoringVector
from elicit.utils.logger import get_logger
from elicit.verifications.verification_manager import VerificationManager

logger = get_logger(__name__)

router = APIRouter(tags=["Elicitation"])


# Request/Response Models
class SpanRequest(BaseModel):
    alpha: str = Field(..., description="Preset name or comma-separated rationals")
    t: int
    m: Optional[int] = Field(default=None, description="Needed for preset names")


class WinnersRequest(BaseModel):
    profile: ProfileDocument
    alpha: str
    t: Optional[int] = Field(default=None, description="Compute through queries of this size")


class WinnersResponse(FrozenModel):
    winners: List[str]
    scores: Dict[str, Rational] = Field(default_factory=dict)
    query_count: Optional[int] = None


class VerificationRunRequest(BaseModel):
    names: Optional[List[str]] = Field(default=None, description="Defaults to every verification")
    max_m: Optional[int] = None
    seed: Optional[int] = None
    instances: Optional[int] = None


class VerificationRunResponse(BaseModel):
    success: bool
    message: str
    results: List[VerificationResult]


class VerificationListResponse(BaseModel):
    verifications: Dict[str, Dict[str, Any]]


# Initialize verification manager
verification_manager = VerificationManager()


def _vector(alpha: str, m: Optional[int]) -> ScoringVector:
    if m is None:
        return ScoringVector.parse(alpha)
    return resolve_vector(alpha, m)


@router.post("/span", response_model=SpanDecision)
async def decide_span(request: SpanRequest):
    """Decide whether alpha lies in R_{m,t}"""
    try:
        logger.info(f"API request: span membership of {request.alpha} at t={request.t}")
        return span_membership(_vector(request.alpha, request.m), request.t)
    except ElicitError as e:
        logger.error(f"Rejected span request: {str(e)}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Failed to decide span membership: {str(e)}")
        raise HTTPException(status_code=500, detail=f"Span membership failed: {str(e)}")


@router.post("/winners", response_model=WinnersResponse)
async def compute_winners(request: WinnersRequest):
    """Winners of a profile, directly or through t-queries"""
    try:
        profile = profile_from_document(request.profile)
        alpha = _vector(request.alpha, profile.m)
        labels = profile.candidates.labels
        logger.info(f"API request: winners on {profile.m} candidates, t={request.t}")

        if request.t is None:
            values = scores(profile, alpha)
            return WinnersResponse(
                winners=winners(profile, alpha),
                scores={labels[c]: v for c, v in enumerate(values)},
            )
        session = QuerySession(profile, request.t)
        found = winner_via_queries(session, alpha)
        return WinnersResponse(winners=found, query_count=session.query_count)
    except ElicitError as e:
        logger.error(f"Rejected winners request: {str(e)}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Failed to compute winners: {str(e)}")
        raise HTTPException(status_code=500, detail=f"Winner computation failed: {str(e)}")


@router.post("/verifications/run", response_model=VerificationRunResponse)
def run_verifications(request: VerificationRunRequest):
    """Run acceptance verifications; runs in the worker thread pool"""
    try:
        names = request.names or VERIFICATION_ORDER
        logger.info(f"API request: run verifications {names}")
        results = [
            verification_manager.run(name, max_m=request.max_m, seed=request.seed, instances=request.instances)
            for name in names
        ]

        passed = sum(r.passed for r in results)
        return VerificationRunResponse(
            success=passed == len(results),
            message=f"Passed {passed}/{len(results)} verifications",
            results=results,
        )
    except ElicitError as e:
        logger.error(f"Rejected verification request: {str(e)}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Failed to run verifications: {str(e)}")
        raise HTTPException(status_code=500, detail=f"Verification run failed: {str(e)}")


@router.get("/verifications", response_model=VerificationListResponse)
async def list_verifications():
    """Registered verifications in report order"""
    try:
        return VerificationListResponse(verifications=verification_manager.get_status())
    except Exception as e:
        logger.error(f"Failed to list verifications: {str(e)}")
        raise HTTPException(status_code=500, detail=f"Failed to list verifications: {str(e)}")
