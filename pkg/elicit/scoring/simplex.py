from fractions import Fraction
from itertools import combinations
from typing import Iterator, List, Optional, Tuple

from elicit.models.results import SimplexRow
from elicit.scoring.basis import minimal_query_size
from elicit.scoring.vectors import ScoringVector
from elicit.utils.validators import require


def simplex_coordinates(alpha: ScoringVector) -> Optional[Tuple[Fraction, ...]]:
    """Translate by the minimum entry and scale to sum 1; None for constant vectors"""
    low = min(alpha)
    shifted = [w - low for w in alpha]
    total = sum(shifted, Fraction(0))
    if total == 0:
        return None
    return tuple(w / total for w in shifted)


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Nonnegative integer vectors of length parts summing to total (stars and bars order)"""
    for bars in combinations(range(total + parts - 1), parts - 1):
        previous = -1
        vector = []
        for bar in bars + (total + parts - 1,):
            vector.append(bar - previous - 1)
            previous = bar
        yield tuple(vector)


def simplex_grid(m: int, resolution: int) -> List[SimplexRow]:
    """Every grid point alpha = composition / resolution with its simplex coordinates and t*"""
    require(m >= 1 and resolution >= 1, "need m >= 1 and a positive grid resolution")
    rows = []
    for point in compositions(resolution, m):
        alpha = ScoringVector(tuple(Fraction(x, resolution) for x in point))
        coordinates = simplex_coordinates(alpha)
        rows.append(
            SimplexRow(
                alpha=alpha.weights,
                constant=coordinates is None,
                coordinates=coordinates,
                tstar=minimal_query_size(alpha),
            )
        )
    return rows
