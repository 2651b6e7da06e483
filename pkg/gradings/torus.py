"""
Torus gradings -- sigma = exp(2 pi i ad h_s) for a rational Cartan element h_s.

The phase of a basis vector is its weight evaluated at h_s, taken mod 1.
Gradings are attached to basis vectors, so they are always parity-compatible.

Usage::

    t = TorusElement.parse("1/3")
    G = grading_from_torus(build_slmn(2, 0), t)
    print(G.order, {str(p): len(ix) for p, ix in G.eigenspaces.items()})
"""

from __future__ import annotations

import dataclasses
import logging
import math
import random
from fractions import Fraction
from typing import Mapping, Sequence

from exact.errors import SpecParseError
from exact.matrix import QMatrix, solve
from exact.rational import PHASE_ZERO, Phase, format_rational, parse_rational_list
from structure.roots import Root, RootDatum, basis_weights, marks, simple_roots
from superalgebra.algebra import LieSuperalgebra

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class TorusElement:
    """h_s given by its coordinates in the Cartan basis."""

    coords: tuple[Fraction, ...]

    @classmethod
    def parse(cls, text: str) -> "TorusElement":
        try:
            return cls(parse_rational_list(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise SpecParseError(f"bad torus element {text!r}: {exc}") from None

    @classmethod
    def zero(cls, rank: int) -> "TorusElement":
        return cls(tuple(Fraction(0) for _ in range(rank)))

    def __str__(self) -> str:
        return ",".join(format_rational(c) for c in self.coords)


@dataclasses.dataclass(frozen=True, eq=False)
class Grading:
    torus: TorusElement
    phases: tuple[Phase, ...]
    parity: tuple[int, ...]
    eigenspaces: Mapping[Phase, tuple[int, ...]]
    order: int

    def sdim(self, phase: Phase) -> int:
        return sum(-1 if self.parity[i] else 1 for i in self.eigenspaces.get(phase, ()))

    def dim(self, phase: Phase) -> int:
        return len(self.eigenspaces.get(phase, ()))

    def sorted_phases(self) -> list[Phase]:
        return sorted(self.eigenspaces)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1


def grading_from_torus(L: LieSuperalgebra, torus: TorusElement) -> Grading:
    if len(torus.coords) != len(L.cartan):
        raise SpecParseError(
            f"torus element has {len(torus.coords)} coordinates, {L.name} has rank {len(L.cartan)}")
    weights = basis_weights(L)
    phases = tuple(Phase(w(torus.coords)) for w in weights)
    spaces: dict[Phase, list[int]] = {}
    for i, p in enumerate(phases):
        spaces.setdefault(p, []).append(i)
    order = math.lcm(*(p.denominator for p in phases)) if phases else 1
    logger.debug("%s at %s: order %d, %d eigenspaces", L.name, torus, order, len(spaces))
    return Grading(
        torus=torus,
        phases=phases,
        parity=L.parity,
        eigenspaces={p: tuple(ix) for p, ix in sorted(spaces.items())},
        order=order,
    )


def trivial_grading(L: LieSuperalgebra) -> Grading:
    return grading_from_torus(L, TorusElement.zero(len(L.cartan)))


def grading_check(L: LieSuperalgebra, G: Grading) -> list[str]:
    """Violations of [g^j, g^k] in g^{j+k} and (g^j, g^k) = 0 unless j + k = 0."""
    problems = []
    if G.parity != L.parity:
        problems.append("grading was built for a different parity assignment")
    for (i, j), coeffs in L.structure.items():
        target = G.phases[i] + G.phases[j]
        for k in coeffs:
            if G.phases[k] != target:
                problems.append(f"bracket: [{L.labels[i]}, {L.labels[j]}] -> {L.labels[k]}")
                break
    for i in range(L.dim):
        for j in range(L.dim):
            if L.form[i, j] and not (G.phases[i] + G.phases[j]).is_zero():
                problems.append(f"form: ({L.labels[i]}, {L.labels[j]}) != 0 across phases")
    return problems


def sample_tori(L: LieSuperalgebra, count: int, seed: int = 0) -> list[TorusElement]:
    """Seeded random torus elements: numerators in [-3, 3], denominators in 1..6."""
    rng = random.Random(seed)
    rank = len(L.cartan)
    out = []
    for _ in range(count):
        coords = tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 6)) for _ in range(rank))
        out.append(TorusElement(coords))
    return out


def torus_from_simple_values(rd: RootDatum, simple: Sequence[Root], values: Sequence) -> TorusElement:
    """The h_s with alpha_i(h_s) = values[i] for the given simple roots."""
    rows = [r.weight.coords for r in simple]
    m = QMatrix.from_rows(rows, cols=rd.rank)
    return TorusElement(solve(m, [Fraction(v) for v in values]))


def zero_phase_indices(G: Grading) -> tuple[int, ...]:
    return G.eigenspaces.get(PHASE_ZERO, ())


def torus_from_labels(rd: RootDatum, s_labels: Sequence[int]) -> tuple[TorusElement, int]:
    """h_s of type (s_0, ..., s_n; 1): alpha_i(h_s) = s_i / m with m = sum a_i s_i."""
    simple = simple_roots(rd)
    a = marks(rd, simple)
    if len(s_labels) != len(a):
        raise SpecParseError(f"{rd.algebra.name} needs {len(a)} labels, got {len(s_labels)}")
    if any(s < 0 for s in s_labels):
        raise SpecParseError("labels must be non-negative")
    m = sum(ai * si for ai, si in zip(a, s_labels))
    if m < 1:
        raise SpecParseError("labels give an automorphism of order 0")
    return torus_from_simple_values(rd, simple, [Fraction(s, m) for s in s_labels[1:]]), m
