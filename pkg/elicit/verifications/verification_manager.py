from typing import Dict, List, Optional

from elicit.config import VERIFICATION_ALIASES, VERIFICATION_ORDER
from elicit.exceptions import InvalidArgumentError
from elicit.models.reports import VerificationResult
from elicit.utils.logger import get_logger
from .base_verification import BaseVerification
from .characterization_verification import CharacterizationVerification
from .condorcet_verification import CondorcetVerification
from .covering_verification import CoveringVerification
from .fibonacci_verification import FibonacciVerification
from .parity_pair_verification import ParityPairVerification
from .properties_verification import PropertiesVerification
from .query_complexity_verification import QueryComplexityVerification
from .score_computation_verification import ScoreComputationVerification
from .separation_verification import SeparationVerification
from .stv_verification import StvVerification
from .winner_family_verification import WinnerFamilyVerification

logger = get_logger(__name__)


class VerificationManager:
    def __init__(self, fibonacci_n: Optional[int] = None):
        registered = [
            ParityPairVerification(),
            ScoreComputationVerification(),
            CharacterizationVerification(),
            WinnerFamilyVerification(),
            SeparationVerification(),
            StvVerification(),
            QueryComplexityVerification(),
            FibonacciVerification(fibonacci_n),
            CondorcetVerification(),
            CoveringVerification(),
            PropertiesVerification(),
        ]
        by_name = {v.get_name(): v for v in registered}
        self.verifications: Dict[str, BaseVerification] = {name: by_name[name] for name in VERIFICATION_ORDER}

    def run_all(
        self, max_m: Optional[int] = None, seed: Optional[int] = None, instances: Optional[int] = None
    ) -> List[VerificationResult]:
        """Run every verification in report order"""
        logger.info("Starting acceptance run: all verifications")

        results = [v.run(max_m=max_m, seed=seed, instances=instances) for v in self.verifications.values()]

        passed = sum(r.passed for r in results)
        logger.info(f"Acceptance run completed: {passed}/{len(results)} verifications passed")
        return results

    def run(
        self,
        name: str,
        max_m: Optional[int] = None,
        m: Optional[int] = None,
        seed: Optional[int] = None,
        instances: Optional[int] = None,
    ) -> VerificationResult:
        """Run one verification, by name or alias"""
        name = VERIFICATION_ALIASES.get(name, name)
        if name not in self.verifications:
            logger.error(f"Unknown verification: {name}")
            raise InvalidArgumentError(f"unknown verification {name!r}; choose one of {VERIFICATION_ORDER}")

        logger.info(f"Running verification: {name}")
        return self.verifications[name].run(max_m=max_m, m=m, seed=seed, instances=instances)

    def get_status(self) -> Dict[str, Dict[str, object]]:
        """Name, description and candidate counts of every verification"""
        return {
            name: {
                "description": verification.get_description(),
                "sizes": list(verification.sizes),
            }
            for name, verification in self.verifications.items()
        }
