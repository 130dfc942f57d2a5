"""
Extended integers and binomials.

reg(0) = -inf and indeg(0) = +inf are carried as float infinities; every
other quantity is an exact Python int. In JSON the infinities become the
strings "-inf" / "+inf" so reports never contain floating point.
"""

import math
from typing import Annotated, Iterable, Union

from pydantic import BeforeValidator, PlainSerializer

NEG_INF = -math.inf
POS_INF = math.inf


def _decode_extended(value):
    if isinstance(value, str):
        text = value.strip().lower()
        if text in ("-inf", "-infinity"):
            return NEG_INF
        if text in ("inf", "+inf", "infinity", "+infinity"):
            return POS_INF
        return int(text)
    return value


def _encode_extended(value):
    if isinstance(value, float):
        if value == POS_INF:
            return "+inf"
        if value == NEG_INF:
            return "-inf"
        return int(value)
    return value


def _encode_decimal(value):
    encoded = _encode_extended(value)
    return encoded if isinstance(encoded, str) else str(encoded)


ExtendedInt = Annotated[
    Union[int, float],
    BeforeValidator(_decode_extended),
    PlainSerializer(_encode_extended, when_used="json"),
]

# Right-hand sides of bounds can have thousands of digits.
DecimalInt = Annotated[
    Union[int, float],
    BeforeValidator(_decode_extended),
    PlainSerializer(_encode_decimal, when_used="json"),
]


def is_finite(value: Union[int, float]) -> bool:
    return not isinstance(value, float)


def binomial(top: int, bottom: int) -> int:
    """C(top, bottom) with C(a, b) = 0 whenever a < b or b < 0."""
    if bottom < 0 or top < bottom:
        return 0
    return math.comb(top, bottom)


def extended_max(values: Iterable[Union[int, float]]) -> Union[int, float]:
    result: Union[int, float] = NEG_INF
    for value in values:
        if value > result:
            result = value
    return result


def extended_min(values: Iterable[Union[int, float]]) -> Union[int, float]:
    result: Union[int, float] = POS_INF
    for value in values:
        if value < result:
            result = value
    return result
