from itertools import combinations
from typing import Callable, Dict, List, Optional

from pydantic import Field

from elicit.models.common import FrozenModel
from elicit.profiles.core import Profile
from elicit.queries.verifier import indistinguishable

WinnerRule = Callable[[Profile], List[str]]


class AmbiguityCheck(FrozenModel):
    """
    m pairwise t-indistinguishable profiles with distinct unique winners: no
    algorithm using queries of size t can beat probability 1/m on all of them.
    """
    passed: bool
    t: int
    winners: Dict[str, List[str]] = Field(default_factory=dict)
    pairs_checked: int = 0
    witness: Optional[str] = None


def ambiguity_hypothesis(profiles: Dict[str, Profile], t: int, rule: WinnerRule) -> AmbiguityCheck:
    """Check the hypothesis for profiles keyed by their intended winner"""
    winners = {name: rule(profile) for name, profile in profiles.items()}
    for name, found in winners.items():
        if found != [name]:
            return AmbiguityCheck(
                passed=False, t=t, winners=winners,
                witness=f"profile {name} has winners {found}, expected exactly [{name}]",
            )

    checked = 0
    for (first, p), (second, q) in combinations(profiles.items(), 2):
        checked += 1
        report = indistinguishable(p, q, t)
        if not report.result:
            return AmbiguityCheck(
                passed=False, t=t, winners=winners, pairs_checked=checked,
                witness=f"profiles {first} and {second} differ on query {report.witness.query}",
            )
    return AmbiguityCheck(passed=True, t=t, winners=winners, pairs_checked=checked)
