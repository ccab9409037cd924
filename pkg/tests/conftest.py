from fractions import Fraction

import pytest

from elicit.config import settings
from elicit.profiles.core import CandidateSet, Profile


@pytest.fixture
def abc() -> CandidateSet:
    return CandidateSet.letters(3)


@pytest.fixture
def three_cycle(abc) -> Profile:
    """a > b > c, b > c > a, c > a > b with one third each; no Condorcet winner"""
    third = Fraction(1, 3)
    return Profile(abc, {("a", "b", "c"): third, ("b", "c", "a"): third, ("c", "a", "b"): third})


@pytest.fixture
def split_profile(abc) -> Profile:
    """Half a > b > c, half c > b > a"""
    return Profile(abc, {("a", "b", "c"): "1/2", ("c", "b", "a"): "1/2"})


@pytest.fixture
def small_caps(monkeypatch):
    """Lower the desk-scale caps for refusal tests"""
    monkeypatch.setattr(settings, "MAX_CANDIDATES", 4)
    monkeypatch.setattr(settings, "EXHAUSTIVE_COVER_CAP", 6)
    return settings
