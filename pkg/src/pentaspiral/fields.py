"""Scalar field helpers: exact rationals (Fraction) and 64-bit floats.

Every geometric routine in this package is generic over the two scalar
types.  Exact values compare with ``==``; floats compare against the
module tolerance ``EPS``, which is an absolute bound on canonicalized
(O(1)-sized) coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, float]

# Absolute tolerance for float comparisons on canonical coordinates.
EPS = 1e-10

RATIONAL = "rational"
FLOAT = "float"


def is_exact(x: Scalar) -> bool:
    return isinstance(x, (Fraction, int))


def near_zero(x: Scalar) -> bool:
    if is_exact(x):
        return x == 0
    return abs(x) <= EPS


def scalars_close(a: Scalar, b: Scalar, tol: float = EPS) -> bool:
    if is_exact(a) and is_exact(b):
        return a == b
    return abs(a - b) <= tol


def field_of(x: Scalar) -> str:
    return RATIONAL if is_exact(x) else FLOAT


def parse_scalar(value, field: str) -> Scalar:
    """Parse a JSON number or "p/q" string into the requested field."""
    if field == RATIONAL:
        if isinstance(value, str):
            return Fraction(value)
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, float):
            # floats are accepted but converted exactly
            return Fraction(value).limit_denominator(10**12)
        raise ValueError(f"cannot parse rational from {value!r}")
    if isinstance(value, str):
        num = Fraction(value)
        return num.numerator / num.denominator
    return float(value)


def dump_scalar(x: Scalar):
    """Serialize a scalar for JSON: rationals as "p/q", floats as numbers."""
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return f"{x}/1"
    return float(x)


def as_float(x: Scalar) -> float:
    if isinstance(x, Fraction):
        return x.numerator / x.denominator
    return float(x)
