"""
VerificationReport -- the outcome of checking one identity on one algebra.

Both sides are exact: a rational for scalar identities, a coordinate tuple for
vector identities.  JSON output writes every rational as "p/q".
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from typing import Any, Union

from exact.errors import SpecParseError
from exact.rational import format_rational, parse_rational

Side = Union[Fraction, tuple[Fraction, ...]]


def _side_to_json(x: Side):
    if isinstance(x, tuple):
        return [format_rational(v) for v in x]
    return format_rational(x)


def _side_from_json(x) -> Side:
    if isinstance(x, list):
        return tuple(parse_rational(v) for v in x)
    return parse_rational(x)


def _jsonable(value: Any):
    """Context values: rationals to "p/q", containers recursively."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


@dataclasses.dataclass(frozen=True)
class VerificationReport:
    formula: str
    algebra: str
    lhs: Side
    rhs: Side
    torus: str | None = None
    order: int | None = None
    context: dict = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "context", _jsonable(self.context))
        if isinstance(self.lhs, (list, tuple)):
            object.__setattr__(self, "lhs", tuple(Fraction(x) for x in self.lhs))
        if isinstance(self.rhs, (list, tuple)):
            object.__setattr__(self, "rhs", tuple(Fraction(x) for x in self.rhs))

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        return {
            "formula": self.formula,
            "algebra": self.algebra,
            "torus": self.torus,
            "m": self.order,
            "lhs": _side_to_json(self.lhs),
            "rhs": _side_to_json(self.rhs),
            "pass": self.passed,
            "context": _jsonable(self.context),
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        try:
            report = cls(
                formula=d["formula"],
                algebra=d["algebra"],
                lhs=_side_from_json(d["lhs"]),
                rhs=_side_from_json(d["rhs"]),
                torus=d.get("torus"),
                order=d.get("m"),
                context=dict(d.get("context", {})),
            )
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise SpecParseError(f"malformed report record: {exc}") from exc
        if "pass" in d and bool(d["pass"]) != report.passed:
            raise SpecParseError(f"report pass flag {d['pass']!r} contradicts lhs/rhs")
        return report

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise SpecParseError(f"invalid JSON: {exc}") from exc

    def summary_row(self) -> dict:
        """Flat row for CSV / console tables."""
        return {
            "formula": self.formula,
            "algebra": self.algebra,
            "torus": self.torus or "",
            "order": self.order if self.order is not None else "",
            "lhs": _side_to_json(self.lhs) if not isinstance(self.lhs, tuple) else "vector",
            "rhs": _side_to_json(self.rhs) if not isinstance(self.rhs, tuple) else "vector",
            "verdict": self.verdict,
        }
