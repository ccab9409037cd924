"""
Condorcet winner with pairwise queries.

Phase one is a knockout: with k = floor(log2 m), a play-in round pairs the
first 2(m - 2^k) candidates in canonical order and everyone else gets a bye,
after which 2^k players remain and are paired in canonical order each round.
Every champion has played at least k matches. Phase two compares the champion
with every candidate it has not met. At most 2m - floor(log2 m) - 2 queries.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Set

from elicit.models.results import CondorcetMatch, CondorcetRun
from elicit.profiles.core import Profile, pairwise_matrix
from elicit.queries.session import QuerySession, pairwise_preference
from elicit.utils.helpers import floor_log2
from elicit.utils.logger import get_logger
from elicit.utils.validators import require

logger = get_logger(__name__)

HALF = Fraction(1, 2)


def condorcet_query_bound(m: int) -> int:
    return 2 * m - floor_log2(m) - 2


def condorcet_via_queries(session: QuerySession) -> CondorcetRun:
    require(session.max_size >= 2, f"pairwise queries need t >= 2, got t={session.max_size}")
    labels = session.candidates.labels
    m = session.m
    start = session.query_count

    met: Dict[int, Set[int]] = {c: set() for c in range(m)}
    beaten_strictly: Dict[int, bool] = {c: True for c in range(m)}
    rounds: List[List[CondorcetMatch]] = []

    def play(x: int, y: int, round_no: int) -> int:
        margin = pairwise_preference(session, x, y)
        winner = x if margin >= HALF else y
        met[x].add(y)
        met[y].add(x)
        # a tie at exactly one half is a strict win for nobody
        if winner == x and margin == HALF:
            beaten_strictly[x] = False
        rounds[-1].append(
            CondorcetMatch(
                phase="knockout", round=round_no, first=labels[x], second=labels[y],
                margin=margin, advances=labels[winner],
            )
        )
        return winner

    current = list(range(m))
    if m > 1:
        k = floor_log2(m)
        play_in = 2 * (m - 2 ** k)
        round_no = 1
        if play_in:
            rounds.append([])
            advancing = [play(current[j], current[j + 1], round_no) for j in range(0, play_in, 2)]
            current = sorted(advancing + current[play_in:])
            round_no += 1
        while len(current) > 1:
            rounds.append([])
            current = [play(current[j], current[j + 1], round_no) for j in range(0, len(current), 2)]
            round_no += 1

    champion = current[0]
    verification: List[CondorcetMatch] = []
    strict = beaten_strictly[champion]
    for other in range(m):
        if other == champion or other in met[champion]:
            continue
        margin = pairwise_preference(session, champion, other)
        strict = strict and margin > HALF
        verification.append(
            CondorcetMatch(
                phase="verification", round=len(rounds) + 1, first=labels[champion], second=labels[other],
                margin=margin, advances=labels[champion] if margin > HALF else labels[other],
            )
        )

    used = session.query_count - start
    logger.debug(f"Condorcet run on m={m}: champion {labels[champion]}, {used} queries")
    return CondorcetRun(
        m=m,
        rounds=rounds,
        champion=labels[champion],
        verification=verification,
        winner=labels[champion] if strict else None,
        queries_used=used,
        query_bound=condorcet_query_bound(m),
    )


def condorcet_winner(profile: Profile) -> Optional[str]:
    """Brute-force check over all pairs"""
    matrix = pairwise_matrix(profile)
    for x in range(profile.m):
        if all(matrix[x][y] > HALF for y in range(profile.m) if y != x):
            return profile.candidates.label(x)
    return None
