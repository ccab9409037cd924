from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import Field

from elicit.models.common import FrozenModel


class Outcome(str, Enum):
    """Outcome of one command"""
    PASS = "pass"
    FAIL = "fail"
    VALUE = "value"
    ERROR = "error"


class VerificationResult(FrozenModel):
    """Result of one acceptance verification"""
    name: str
    passed: bool
    checks: int = Field(default=0, description="Number of exact assertions evaluated")
    details: Dict[str, Any] = Field(default_factory=dict)
    witness: Optional[str] = Field(default=None, description="First failing case, when any")


class RunReport(FrozenModel):
    """One record of the command-line report stream"""
    command: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    outcome: Outcome
    value: Any = None
    witnesses: List[str] = Field(default_factory=list)
    query_count: Optional[int] = None
    wall_time: Optional[float] = Field(default=None, description="Seconds; only with --timings")
    memory_mb: Optional[float] = Field(default=None, description="Resident set size; only with --timings")
