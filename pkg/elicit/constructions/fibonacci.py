"""
Three-candidate instances whose pairwise margins differ by Fibonacci numbers.

Margins are p1 = Pr[a > b], p2 = Pr[b > c], p3 = Pr[c > a]. Under the
(1, 0, -1) scoring vector score(a) = p1 - p3, score(b) = p2 - p1 and
score(c) = p3 - p2, so the winner is decided by the margin differences alone.
With the shifted sequence F1 = 1, F2 = 2, F3 = 3, F4 = 5, ... one observed
margin, or two, leave several parameter choices with different winners.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple

from elicit.models.results import ConsistentParameters, FibonacciRecord
from elicit.profiles.core import CandidateSet, Profile
from elicit.utils.helpers import RationalLike, parse_rational
from elicit.utils.validators import require

THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)

ABC = CandidateSet(("a", "b", "c"))

# row r -> (winner, index offsets of F for p1, p2, p3; None means no offset)
WINNER_TABLE: Dict[int, Tuple[str, Tuple[Optional[int], Optional[int], Optional[int]]]] = {
    1: ("a", (2, None, 0)),
    2: ("c", (2, None, 1)),
    3: ("b", (0, 2, None)),
    4: ("a", (1, 2, None)),
    5: ("c", (None, 0, 2)),
    6: ("b", (None, 1, 2)),
}


@lru_cache(maxsize=None)
def shifted_fibonacci(k: int) -> int:
    """F_1 = 1, F_2 = 2, F_k = F_{k-1} + F_{k-2}"""
    require(k >= 1, f"shifted Fibonacci index starts at 1, got {k}")
    a, b = 1, 2
    for _ in range(k - 1):
        a, b = b, a + b
    return a


def margins_to_profile(p1: RationalLike, p2: RationalLike, p3: RationalLike) -> Profile:
    """Six-ranking profile over {a, b, c} with Pr[a>b]=p1, Pr[b>c]=p2, Pr[c>a]=p3"""
    p1, p2, p3 = (parse_rational(p) for p in (p1, p2, p3))
    for name, p in (("p1", p1), ("p2", p2), ("p3", p3)):
        require(THIRD <= p <= TWO_THIRDS, f"{name}={p} must lie in [1/3, 2/3]")
    return Profile(
        ABC,
        {
            ("a", "b", "c"): p2 - THIRD,
            ("a", "c", "b"): TWO_THIRDS - p2,
            ("b", "c", "a"): p3 - THIRD,
            ("b", "a", "c"): TWO_THIRDS - p3,
            ("c", "a", "b"): p1 - THIRD,
            ("c", "b", "a"): TWO_THIRDS - p1,
        },
    )


def scale(n: int) -> int:
    """(n+1) F_{n+2}, the largest scaled margin"""
    return (n + 1) * shifted_fibonacci(n + 2)


def scaled_margins(n: int, i: int, s: int, r: int) -> Tuple[int, int, int]:
    _check_parameters(n, i, s, r)
    _, offsets = WINNER_TABLE[r]
    return tuple(s + (shifted_fibonacci(i + o) if o is not None else 0) for o in offsets)


def _check_parameters(n: int, i: int, s: int, r: int):
    require(n >= 1, f"n must be positive, got {n}")
    require(1 <= i <= n, f"i must lie in 1..{n}, got {i}")
    require(0 <= s <= n * shifted_fibonacci(n + 2), f"s must lie in 0..{n * shifted_fibonacci(n + 2)}, got {s}")
    require(r in WINNER_TABLE, f"r must lie in 1..6, got {r}")


@dataclass(frozen=True)
class FibonacciInstance:
    n: int
    i: int
    s: int
    r: int
    scaled: Tuple[int, int, int]
    margins: Tuple[Fraction, Fraction, Fraction]
    profile: Profile
    winner: str

    def record(self) -> FibonacciRecord:
        return FibonacciRecord(
            n=self.n, i=self.i, s=self.s, r=self.r, scaled=self.scaled, margins=self.margins, winner=self.winner
        )


def fibonacci_instance(n: int, i: int, s: int, r: int) -> FibonacciInstance:
    scaled = scaled_margins(n, i, s, r)
    denominator = 3 * scale(n)
    margins = tuple(THIRD + Fraction(p, denominator) for p in scaled)
    return FibonacciInstance(
        n=n, i=i, s=s, r=r,
        scaled=scaled,
        margins=margins,
        profile=margins_to_profile(*margins),
        winner=WINNER_TABLE[r][0],
    )


def in_event(n: int, i: int, s: int) -> bool:
    """3 <= i <= n-2 and F_{n+2} <= s <= (n-2) F_{n+2}; every scaled margin then lies in [F_{n+2}, (n-1) F_{n+2}]"""
    big = shifted_fibonacci(n + 2)
    return 3 <= i <= n - 2 and big <= s <= (n - 2) * big


def fibonacci_consistent_set(
    n: int, observed: Mapping[int, int], i: Optional[int] = None
) -> List[ConsistentParameters]:
    """
    Every (i, s, r) reproducing the observed scaled margins, keyed 1..3.

    For each (i, r) the offset of an observed margin is fixed, so s is pinned
    by any one observation; this covers the whole (i, s, r) grid exactly.
    """
    require(1 <= len(observed) <= 3 and all(j in (1, 2, 3) for j in observed), "observe margins among 1, 2, 3")
    top = scale(n)
    require(all(0 <= v <= top for v in observed.values()), f"scaled margins must lie in 0..{top}")
    s_max = n * shifted_fibonacci(n + 2)
    indices = range(1, n + 1) if i is None else [i]

    found = []
    for candidate_i in indices:
        require(1 <= candidate_i <= n, f"i must lie in 1..{n}, got {candidate_i}")
        for r, (winner, offsets) in WINNER_TABLE.items():
            shifts = {
                j: (shifted_fibonacci(candidate_i + offsets[j - 1]) if offsets[j - 1] is not None else 0)
                for j in observed
            }
            solutions = {observed[j] - shifts[j] for j in observed}
            if len(solutions) != 1:
                continue
            s = solutions.pop()
            if 0 <= s <= s_max:
                found.append(ConsistentParameters(i=candidate_i, s=s, r=r, winner=winner))
    return found


def fibonacci_success_bound(consistent: List[ConsistentParameters]) -> Fraction:
    """Best-guess success probability when every consistent parameter choice is equally likely"""
    require(len(consistent) >= 1, "no parameter choice is consistent with the observation")
    counts = Counter(p.winner for p in consistent)
    return Fraction(max(counts.values()), len(consistent))
