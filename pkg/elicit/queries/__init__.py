from .session import Query, QuerySession, SampledSession, open_session, pairwise_preference, query, query_count
from .verifier import indistinguishable

__all__ = [
    "Query",
    "QuerySession",
    "SampledSession",
    "open_session",
    "pairwise_preference",
    "query",
    "query_count",
    "indistinguishable",
]
