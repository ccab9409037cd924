from fractions import Fraction
from typing import Callable, Dict

from elicit.config import PRESET_NAMES
from elicit.exceptions import InvalidArgumentError
from elicit.profiles.core import Candidate, Profile, pos_vector
from elicit.scoring.vectors import ScoringVector
from elicit.utils.validators import require


def _plurality(m: int) -> ScoringVector:
    return ScoringVector(tuple(Fraction(1 if j == 0 else 0) for j in range(m)))


def _veto(m: int) -> ScoringVector:
    return ScoringVector(tuple(Fraction(-1 if j == m - 1 else 0) for j in range(m)))


def _borda(m: int) -> ScoringVector:
    return ScoringVector(tuple(Fraction(m - 1 - j) for j in range(m)))


def _antiborda(m: int) -> ScoringVector:
    return _borda(m).affine(-1)


PRESETS: Dict[str, Callable[[int], ScoringVector]] = {
    "plurality": _plurality,
    "veto": _veto,
    "borda": _borda,
    "antiborda": _antiborda,
}


def preset(name: str, m: int) -> ScoringVector:
    """Named scoring vector for m candidates"""
    require(m >= 1, f"candidate count must be positive, got {m}")
    key = name.strip().lower()
    if key not in PRESETS:
        raise InvalidArgumentError(f"unknown preset {name!r}; choose one of {PRESET_NAMES}")
    return PRESETS[key](m)


def resolve_vector(text: str, m: int) -> ScoringVector:
    """A preset name or a comma-separated rational list"""
    if text.strip().lower() in PRESETS:
        return preset(text, m)
    alpha = ScoringVector.parse(text)
    require(alpha.m == m, f"scoring vector has {alpha.m} weights for {m} candidates")
    return alpha


def plurality_score(profile: Profile, candidate: Candidate) -> Fraction:
    """Pr[candidate ranked first]"""
    return pos_vector(profile, candidate)[0]
