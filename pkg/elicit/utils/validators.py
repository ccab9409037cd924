"""Argument checks shared by every module."""

from elicit.config import settings
from elicit.exceptions import InvalidArgumentError, RefusedError


def require(condition: bool, message: str):
    """Raise InvalidArgumentError with message unless condition holds"""
    if not condition:
        raise InvalidArgumentError(message)


def validate_candidate_count(m: int):
    """m must be positive and within the configured cap"""
    require(isinstance(m, int) and m >= 1, f"candidate count must be a positive integer, got {m!r}")
    if m > settings.MAX_CANDIDATES:
        raise RefusedError(
            f"m={m} exceeds MAX_CANDIDATES={settings.MAX_CANDIDATES} "
            f"(override with ELICIT_MAX_CANDIDATES)"
        )


def validate_query_size(t: int, m: int):
    require(isinstance(t, int) and 1 <= t <= m, f"query size t must satisfy 1 <= t <= m={m}, got {t!r}")
