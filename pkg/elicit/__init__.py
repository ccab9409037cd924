"""Voting with incomplete votes: exact profiles, size-limited queries and verified hard instances."""

__version__ = "1.0.0"
