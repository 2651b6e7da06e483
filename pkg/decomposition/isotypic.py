"""
Isotypic decomposition of g_1 under g_0, and the derived tower g^(1), g^(2).

Highest-weight vectors of weight mu are the odd vectors of weight mu killed by
every positive even root vector; each one generates a g_0-module under the
negative even root vectors.  Components of dimension one form M_triv.
"""

from __future__ import annotations

import dataclasses
import logging
from fractions import Fraction
from typing import Mapping, Sequence

from exact.errors import NotCompletelyReducible
from exact.matrix import EchelonSpan, QMatrix, Vector, kernel
from structure.roots import RootDatum, Weight, positive_root_datum
from superalgebra.algebra import LieSuperalgebra, to_dense, to_sparse

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class IsotypicComponent:
    highest_weight: Weight
    highest_vectors: tuple[Vector, ...]
    module_dim: int
    span: tuple[Vector, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.highest_vectors)

    @property
    def is_trivial(self) -> bool:
        return self.module_dim == 1


@dataclasses.dataclass(frozen=True, eq=False)
class IsotypicDecomposition:
    components: tuple[IsotypicComponent, ...]
    trivial_part: Mapping[Weight, tuple[Vector, ...]]
    lambda_plus: tuple[Weight, ...]
    lambda_minus: tuple[Weight, ...]
    balanced: bool

    @property
    def m_triv(self) -> tuple[Vector, ...]:
        return tuple(v for vs in self.trivial_part.values() for v in vs)

    def m_of(self, weight: Weight) -> tuple[Vector, ...]:
        return self.trivial_part.get(weight, ())


def _even_root_indices(rd: RootDatum, positive: bool) -> list[int]:
    L = rd.algebra
    roots = rd.positive_roots() if positive else rd.negative_roots()
    return [i for r in roots for i in r.indices if L.parity[i] == 0]


def _generate_module(L: LieSuperalgebra, start: Vector, lowering: Sequence[int]) -> EchelonSpan:
    span = EchelonSpan(L.dim, [start])
    queue = [to_sparse(start)]
    while queue:
        w = queue.pop()
        for f in lowering:
            u = L.bracket_sparse({f: Fraction(1)}, w)
            if u and span.add(to_dense(u, L.dim)):
                queue.append(u)
    return span


def isotypic_g1(L: LieSuperalgebra, rd: RootDatum | None = None) -> IsotypicDecomposition:
    rd = rd or positive_root_datum(L)
    raising = _even_root_indices(rd, positive=True)
    lowering = _even_root_indices(rd, positive=False)

    by_weight: dict[Weight, list[int]] = {}
    for i in L.odd_indices:
        by_weight.setdefault(rd.weights[i], []).append(i)

    components = []
    total = EchelonSpan(L.dim)
    summed = 0
    for mu in sorted(by_weight):
        group = by_weight[mu]
        rows: dict[tuple[int, int], list[Fraction]] = {}
        for e in raising:
            for col, i in enumerate(group):
                for k, c in L.bracket_basis(e, i).items():
                    rows.setdefault((e, k), [Fraction(0)] * len(group))[col] = c
        m = QMatrix.from_rows(list(rows.values()), cols=len(group))
        hw = []
        for coeffs in kernel(m):
            v = [Fraction(0)] * L.dim
            for c, i in zip(coeffs, group):
                v[i] = c
            hw.append(tuple(v))
        if not hw:
            continue
        modules = [_generate_module(L, v, lowering) for v in hw]
        dims = {s.rank for s in modules}
        if len(dims) != 1:
            raise NotCompletelyReducible(
                f"{L.name}: highest-weight vectors of weight {mu} generate modules of dimensions {sorted(dims)}")
        span = tuple(v for s in modules for v in s.basis)
        for v in span:
            total.add(v)
        summed += len(span)
        components.append(IsotypicComponent(
            highest_weight=mu, highest_vectors=tuple(hw), module_dim=dims.pop(), span=span))

    odd_dim = len(L.odd_indices)
    if total.rank != odd_dim or summed != odd_dim:
        raise NotCompletelyReducible(
            f"{L.name}: modules span {total.rank} (sum of dimensions {summed}) of dim g_1 = {odd_dim}")

    trivial = {c.highest_weight: c.highest_vectors for c in components if c.is_trivial}
    plus = tuple(w for w in trivial if not w.is_zero() and rd.sign_of(w) > 0)
    minus = tuple(w for w in trivial if not w.is_zero() and rd.sign_of(w) < 0)
    balanced = set(minus) == {-w for w in plus}
    if not balanced:
        logger.warning("%s: trivial weights are not symmetric under negation", L.name)
    logger.debug("%s: %d isotypic components, |M_triv| = %d",
                 L.name, len(components), sum(len(v) for v in trivial.values()))
    return IsotypicDecomposition(
        components=tuple(components),
        trivial_part=trivial,
        lambda_plus=plus,
        lambda_minus=minus,
        balanced=balanced,
    )


def derived_towers(L: LieSuperalgebra) -> tuple[tuple[Vector, ...], tuple[Vector, ...]]:
    """Bases of g^(1) = [g, g] and g^(2) = [g^(1), g^(1)]."""
    g1 = EchelonSpan(L.dim)
    for coeffs in L.structure.values():
        g1.add(to_dense(coeffs, L.dim))
    basis1 = [to_sparse(v) for v in g1.basis]
    g2 = EchelonSpan(L.dim)
    for a, u in enumerate(basis1):
        for v in basis1[a:]:
            w = L.bracket_sparse(u, v)
            if w:
                g2.add(to_dense(w, L.dim))
    return g1.basis, g2.basis
