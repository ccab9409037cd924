from fractions import Fraction
from typing import Annotated, Tuple

from pydantic import BaseModel, ConfigDict, PlainSerializer, PlainValidator, WithJsonSchema

from elicit.utils.helpers import format_rational, parse_rational

# Exact rational carried as a Fraction, written as "p/q" in every document
Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
    WithJsonSchema({"type": "string", "pattern": r"^-?\d+(/\d+)?$", "examples": ["1/2"]}),
]

RationalVector = Tuple[Rational, ...]


class FrozenModel(BaseModel):
    """Base for immutable result records"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)
