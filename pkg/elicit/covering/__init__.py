from .designs import (
    cover_lower_bound,
    cover_row,
    cover_rows,
    exact_cover,
    exact_cover_size,
    greedy_cover,
    is_cover,
    rational_cover_bound,
    redundant_set,
    tiny_parameters,
)

__all__ = [
    "cover_lower_bound",
    "cover_row",
    "cover_rows",
    "exact_cover",
    "exact_cover_size",
    "greedy_cover",
    "is_cover",
    "rational_cover_bound",
    "redundant_set",
    "tiny_parameters",
]
