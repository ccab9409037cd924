from .basis import BasisFamily, basis_vector, minimal_query_size, span_membership
from .scores import (
    borda_from_pairwise,
    score,
    score_via_queries,
    scores,
    winner_via_queries,
    winners,
)
from .separation import separating_index
from .simplex import simplex_coordinates, simplex_grid
from .vectors import ScoringVector

__all__ = [
    "BasisFamily",
    "ScoringVector",
    "basis_vector",
    "borda_from_pairwise",
    "minimal_query_size",
    "score",
    "score_via_queries",
    "scores",
    "separating_index",
    "simplex_coordinates",
    "simplex_grid",
    "span_membership",
    "winner_via_queries",
    "winners",
]
