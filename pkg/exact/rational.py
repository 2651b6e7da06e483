"""
Rational helpers -- parsing and formatting of exact rationals, and ``Phase``.

Scalars are plain ``fractions.Fraction`` values everywhere; this module only
adds the text conventions ("p/q") and the phase group Q/Z used by gradings.
"""

from __future__ import annotations

import dataclasses
import math
from fractions import Fraction
from typing import Iterable

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"-3"`` (or an int / Fraction) into a Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    s = str(text).strip()
    if not s:
        raise ValueError("empty rational literal")
    return Fraction(s)


def parse_rational_list(text: str) -> tuple[Fraction, ...]:
    """Parse a comma-separated list such as ``"1/2,0,-1/3"``."""
    s = text.strip()
    if not s:
        return ()
    return tuple(parse_rational(part) for part in s.split(","))


def format_rational(x) -> str:
    return str(Fraction(x))


def format_rationals(values: Iterable) -> list[str]:
    return [format_rational(v) for v in values]


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if it is irrational."""
    x = Fraction(x)
    if x < 0:
        return None
    num = math.isqrt(x.numerator)
    den = math.isqrt(x.denominator)
    if num * num == x.numerator and den * den == x.denominator:
        return Fraction(num, den)
    return None


@dataclasses.dataclass(frozen=True, order=True)
class Phase:
    """An element of Q/Z, stored by its representative in [0, 1)."""

    value: Fraction

    def __post_init__(self):
        v = Fraction(self.value)
        object.__setattr__(self, "value", v - math.floor(v))

    def __add__(self, other: "Phase") -> "Phase":
        return Phase(self.value + other.value)

    def __neg__(self) -> "Phase":
        return Phase(-self.value)

    def __sub__(self, other: "Phase") -> "Phase":
        return Phase(self.value - other.value)

    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def __str__(self):
        return format_rational(self.value)


PHASE_ZERO = Phase(ZERO)
