"""
Catalog -- the algebra spec grammar and the list of supported families.

Grammar::

    spec    := summand ("+" summand)*
    summand := family "(" int ["|" int] ")"
    family  := gl | sl | osp | C | so | sp

    gl(m|n), sl(m|n) with m != n, osp(m|2n), C(0|2k),
    gl(n) = gl(n|0), sl(n) = sl(n|0), so(m) = osp(m|0), sp(2n) = osp(0|2n)

Exceptional types are not supported.
"""

from __future__ import annotations

import logging
import re
from typing import Callable, NamedTuple

from exact.errors import SpecParseError
from superalgebra.algebra import LieSuperalgebra, direct_sum
from superalgebra.constructors import build_glmn, build_odd_symplectic, build_ospm2n, build_slmn

logger = logging.getLogger(__name__)

_SUMMAND = re.compile(r"^\s*([A-Za-z]+)\s*\(\s*(\d+)\s*(?:\|\s*(\d+)\s*)?\)\s*$")


class CatalogFamily(NamedTuple):
    pattern: str
    description: str
    bounds: str


FAMILIES = (
    CatalogFamily("gl(m|n)", "general linear superalgebra, form str(XY)", "1 <= m+n <= 5"),
    CatalogFamily("sl(m|n) m≠n", "special linear superalgebra, form str(XY)", "2 <= m+n <= 5"),
    CatalogFamily("osp(m|2n)", "orthosymplectic superalgebra, form 1/2 str(XY)", "dim <= 40"),
    CatalogFamily("C(0|2k)", "purely odd abelian with symplectic form", "k >= 1"),
    CatalogFamily("gl(n)", "alias of gl(n|0)", "1 <= n <= 5"),
    CatalogFamily("sl(n)", "alias of sl(n|0)", "2 <= n <= 5"),
    CatalogFamily("so(m)", "alias of osp(m|0)", "dim <= 40"),
    CatalogFamily("sp(2n)", "alias of osp(0|2n)", "dim <= 40"),
    CatalogFamily("A+B", "orthogonal direct sum of any of the above", ""),
)


def _even_param(family: str, value: int) -> int:
    if value % 2:
        raise SpecParseError(f"{family}: the symplectic dimension must be even, got {value}")
    return value // 2


def _build(family: str, a: int, b: int | None) -> LieSuperalgebra:
    two = b is not None
    builders: dict[tuple[str, bool], Callable[[], LieSuperalgebra]] = {
        ("gl", True): lambda: build_glmn(a, b),
        ("sl", True): lambda: build_slmn(a, b),
        ("osp", True): lambda: build_ospm2n(a, _even_param("osp", b)),
        ("c", True): lambda: _odd_symplectic(a, b),
        ("gl", False): lambda: build_glmn(a, 0),
        ("sl", False): lambda: build_slmn(a, 0),
        ("so", False): lambda: build_ospm2n(a, 0),
        ("sp", False): lambda: build_ospm2n(0, _even_param("sp", a)),
    }
    builder = builders.get((family.lower(), two))
    if builder is None:
        raise SpecParseError(f"unknown algebra family {family!r} with {2 if two else 1} parameter(s)")
    try:
        return builder()
    except ValueError as exc:
        raise SpecParseError(str(exc)) from None


def _odd_symplectic(a: int, b: int) -> LieSuperalgebra:
    if a != 0:
        raise SpecParseError(f"C({a}|{b}): only the purely odd C(0|2k) is supported")
    return build_odd_symplectic(_even_param("C", b))


def parse_algebra_spec(text: str) -> LieSuperalgebra:
    """Build the algebra named by ``text``; raises SpecParseError on bad input."""
    if not text or not text.strip():
        raise SpecParseError("empty algebra spec")
    parts = text.split("+")
    algebras = []
    for part in parts:
        match = _SUMMAND.match(part)
        if not match:
            raise SpecParseError(f"cannot parse algebra spec {part.strip()!r}")
        family, a, b = match.group(1), int(match.group(2)), match.group(3)
        algebras.append(_build(family, a, int(b) if b is not None else None))
    if len(algebras) == 1:
        return algebras[0]
    name = "+".join(p.strip() for p in parts)
    logger.debug("direct sum %s of %d summands", name, len(algebras))
    return direct_sum(*algebras, name=name)


def osp_dim(m: int, n: int) -> int:
    return m * (m - 1) // 2 + n * (2 * n + 1) + 2 * m * n


def catalog_entries(max_rank: int = 5, max_dim: int = 40) -> list[str]:
    """Spec strings of every catalog algebra, smallest first within a family."""
    entries = []
    for size in range(1, max_rank + 1):
        for m in range(size, -1, -1):
            entries.append(f"gl({m}|{size - m})")
    for size in range(2, max_rank + 1):
        for m in range(size, -1, -1):
            if m != size - m:
                entries.append(f"sl({m}|{size - m})")
    osp = [(osp_dim(m, n), m, n) for m in range(0, 10) for n in range(0, 5)
           if 0 < osp_dim(m, n) <= max_dim]
    entries += [f"osp({m}|{2 * n})" for _, m, n in sorted(osp)]
    entries.append("C(0|2)")
    return entries


def catalog_listing() -> list[dict]:
    return [family._asdict() for family in FAMILIES]
