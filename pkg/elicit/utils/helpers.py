"""Small shared helpers: exact rational text form and canonical subset enumeration."""

from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterator, Tuple, Union

from elicit.exceptions import InvalidArgumentError

RationalLike = Union[Fraction, int, str]


def format_rational(value: Fraction) -> str:
    """Render a rational as "p/q" in lowest terms"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(value: RationalLike) -> Fraction:
    """Parse "p/q", an integer or a decimal string into an exact Fraction"""
    if isinstance(value, bool):
        raise InvalidArgumentError(f"not a rational: {value!r}")
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidArgumentError(f"not a rational: {value!r}") from e
    # floats are rejected: their binary expansion is rarely what was meant
    raise InvalidArgumentError(f"not a rational: {value!r}")


def parse_rational_list(text: str) -> Tuple[Fraction, ...]:
    """Parse a comma-separated list of rationals, e.g. "3,2,1,0" or "1/2,0,-1/2" """
    parts = [p for p in text.split(",")]
    if not text.strip() or any(not p.strip() for p in parts):
        raise InvalidArgumentError(f"malformed rational list: {text!r}")
    return tuple(parse_rational(p) for p in parts)


def subsets_of_size(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """All k-subsets of range(n), lexicographic over indices"""
    return combinations(range(n), k)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n"""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def floor_log2(n: int) -> int:
    if n < 1:
        raise InvalidArgumentError("floor_log2 needs n >= 1")
    return n.bit_length() - 1
