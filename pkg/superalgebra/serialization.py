"""
JSON round-trip for LieSuperalgebra.

Rationals are written as "p/q" strings so files stay exact; structure
constants are stored as a list of {"i", "j", "coeffs"} records with i <= j.
"""

from __future__ import annotations

import json

from exact.errors import SpecParseError
from exact.matrix import QMatrix
from exact.rational import format_rational, parse_rational
from superalgebra.algebra import LieSuperalgebra

FORMAT_VERSION = 1


def to_dict(L: LieSuperalgebra) -> dict:
    return {
        "format": FORMAT_VERSION,
        "name": L.name,
        "labels": list(L.labels),
        "parity": list(L.parity),
        "cartan": list(L.cartan),
        "structure": [
            {"i": i, "j": j, "coeffs": {str(k): format_rational(v) for k, v in sorted(coeffs.items())}}
            for (i, j), coeffs in sorted(L.structure.items())
        ],
        "form": [[format_rational(x) for x in row] for row in L.form.to_rows()],
    }


def from_dict(d: dict) -> LieSuperalgebra:
    try:
        if d.get("format", FORMAT_VERSION) != FORMAT_VERSION:
            raise SpecParseError(f"unsupported algebra format {d.get('format')!r}")
        n = len(d["parity"])
        structure = {
            (int(rec["i"]), int(rec["j"])): {int(k): parse_rational(v) for k, v in rec["coeffs"].items()}
            for rec in d["structure"]
        }
        form = QMatrix.from_rows([[parse_rational(x) for x in row] for row in d["form"]], cols=n)
        return LieSuperalgebra(
            name=d["name"],
            labels=tuple(d["labels"]),
            parity=tuple(int(p) for p in d["parity"]),
            structure=structure,
            form=form,
            cartan=tuple(int(c) for c in d["cartan"]),
        )
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise SpecParseError(f"malformed algebra record: {exc}") from exc


def to_json(L: LieSuperalgebra, indent: int | None = None) -> str:
    return json.dumps(to_dict(L), indent=indent)


def from_json(text: str) -> LieSuperalgebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"invalid JSON: {exc}") from exc
    return from_dict(data)
