from abc import ABC, abstractmethod
from typing import Any, Dict, Iterable, List, Optional

import numpy as np

from elicit.config import settings
from elicit.exceptions import ElicitError
from elicit.models.reports import VerificationResult
from elicit.profiles.generators import make_rng
from elicit.utils.logger import get_logger

logger = get_logger(__name__)


class CheckFailed(Exception):
    """First failing exact assertion of a verification"""

    def __init__(self, witness: str):
        super().__init__(witness)
        self.witness = witness


class CheckContext:
    """Counts exact assertions and stops at the first one that fails"""

    def __init__(self, seed: int, instances: int):
        self.seed = seed
        self.instances = instances
        self.rng: np.random.Generator = make_rng(seed)
        self.checks = 0
        self.details: Dict[str, Any] = {}

    def expect(self, condition: bool, witness: str):
        self.checks += 1
        if not condition:
            raise CheckFailed(witness)

    def note(self, key: str, value: Any):
        self.details[key] = value


class BaseVerification(ABC):
    """
    One acceptance verification over a range of candidate counts.

    Subclasses declare the counts they cover and implement check_size. run()
    restricts the counts to max_m (or a single m) and reports a failed
    assertion or library error as a failed result instead of raising.
    """

    sizes: Iterable[int] = ()

    @abstractmethod
    def get_name(self) -> str:
        """Return the verification name"""
        pass

    @abstractmethod
    def get_description(self) -> str:
        """Return a one-line description"""
        pass

    @abstractmethod
    def check_size(self, m: int, context: CheckContext):
        """Run every assertion for m candidates"""
        pass

    def select_sizes(self, max_m: Optional[int] = None, m: Optional[int] = None) -> List[int]:
        if m is not None:
            return [m]
        limit = settings.VERIFY_MAX_M if max_m is None else max_m
        return [k for k in self.sizes if k <= limit]

    def run(
        self,
        max_m: Optional[int] = None,
        m: Optional[int] = None,
        seed: Optional[int] = None,
        instances: Optional[int] = None,
    ) -> VerificationResult:
        name = self.get_name()
        context = CheckContext(
            seed=settings.DEFAULT_SEED if seed is None else seed,
            instances=settings.RANDOM_INSTANCES if instances is None else instances,
        )
        sizes = self.select_sizes(max_m, m)
        context.note("sizes", sizes)
        logger.info(f"Running verification {name} on m in {sizes}")

        try:
            for size in sizes:
                self.check_size(size, context)
        except CheckFailed as e:
            logger.warning(f"Verification {name} failed after {context.checks} checks: {e.witness}")
            return VerificationResult(
                name=name, passed=False, checks=context.checks, details=context.details, witness=e.witness
            )
        except ElicitError as e:
            logger.error(f"Verification {name} raised: {str(e)}")
            return VerificationResult(
                name=name, passed=False, checks=context.checks, details=context.details,
                witness=f"{type(e).__name__}: {str(e)}",
            )

        logger.info(f"Verification {name} passed {context.checks} checks")
        return VerificationResult(name=name, passed=True, checks=context.checks, details=context.details)
