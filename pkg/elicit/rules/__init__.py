from .condorcet import condorcet_query_bound, condorcet_via_queries, condorcet_winner
from .presets import PRESETS, plurality_score, preset, resolve_vector
from .stv import plurality_on, stv_winners
from .three_candidate import guess_success, one_query_success, two_query_success

__all__ = [
    "PRESETS",
    "condorcet_query_bound",
    "condorcet_via_queries",
    "condorcet_winner",
    "guess_success",
    "one_query_success",
    "plurality_on",
    "plurality_score",
    "preset",
    "resolve_vector",
    "stv_winners",
    "two_query_success",
]
