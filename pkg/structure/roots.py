"""
Roots -- weights of the basis, root spaces, positivity and the Weyl vector.

Weights are recorded by their values on the Cartan basis elements.  The form
induced on h* is the inverse of the Gram matrix of the form on h, so
(lambda, mu) = lambda^T G^{-1} mu  and  h_lambda = sum_k (G^{-1} lambda)_k h_k.

Usage::

    rd = choose_positive(root_decomposition(L))
    print(rd.rho, rd.norm2(rd.rho))
"""

from __future__ import annotations

import dataclasses
import functools
import logging
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from exact.errors import (
    DegenerateForm,
    NotDiagonalizable,
    NotWeightBasis,
    SingularMatrix,
    SpectrumNotRational,
)
from exact.matrix import QMatrix, Vector, inverse, kernel, rational_spectrum_split, solve
from exact.rational import format_rational
from superalgebra.algebra import LieSuperalgebra

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, order=True)
class Weight:
    """Linear functional on h, given by its values on the Cartan basis."""

    coords: tuple[Fraction, ...]

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls(tuple(Fraction(0) for _ in range(rank)))

    @classmethod
    def of(cls, values: Iterable) -> "Weight":
        return cls(tuple(Fraction(v) for v in values))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, c) -> "Weight":
        c = Fraction(c)
        return Weight(tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def __call__(self, h_coords: Sequence) -> Fraction:
        """Value on the Cartan element sum_k h_coords[k] h_k."""
        return sum((a * b for a, b in zip(self.coords, h_coords)), Fraction(0))

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational(c) for c in self.coords) + ")"


@dataclasses.dataclass(frozen=True)
class Root:
    weight: Weight
    indices: tuple[int, ...]
    even: int
    odd: int

    @property
    def sdim(self) -> int:
        return self.even - self.odd

    @property
    def dim(self) -> int:
        return self.even + self.odd


# ---------------------------------------------------------------------------
# Weights of the basis
# ---------------------------------------------------------------------------

def _diagnose(L: LieSuperalgebra, h: int, j: int):
    ad_h = L.ad_matrix(h)
    n = L.dim
    try:
        spaces = rational_spectrum_split(ad_h)
    except SpectrumNotRational as exc:
        raise NotDiagonalizable(f"{L.name}: ad {L.labels[h]} has irrational spectrum ({exc})") from None
    ident = QMatrix.identity(n)
    for space in spaces:
        if len(kernel(ad_h - ident * space.value)) < len(space.basis):
            raise NotDiagonalizable(
                f"{L.name}: ad {L.labels[h]} is not semisimple (eigenvalue {space.value})")
    raise NotWeightBasis(f"{L.name}: {L.labels[j]} is not a weight vector for {L.labels[h]}")


@functools.lru_cache(maxsize=128)
def basis_weights(L: LieSuperalgebra) -> tuple[Weight, ...]:
    """Weight of every basis vector; ad(h_k) x_j must be a multiple of x_j."""
    values = [[Fraction(0)] * len(L.cartan) for _ in range(L.dim)]
    for k, h in enumerate(L.cartan):
        for j in range(L.dim):
            coeffs = L.bracket_basis(h, j)
            if any(idx != j for idx in coeffs):
                _diagnose(L, h, j)
            values[j][k] = coeffs.get(j, Fraction(0))
    return tuple(Weight(tuple(v)) for v in values)


# ---------------------------------------------------------------------------
# Root datum
# ---------------------------------------------------------------------------

def _lex_sign(weight: Weight, functional: Sequence | None) -> int:
    keys = []
    if functional is not None:
        keys.append(weight(functional))
    keys.extend(weight.coords)
    for k in keys:
        if k:
            return 1 if k > 0 else -1
    return 0


@dataclasses.dataclass(frozen=True, eq=False)
class RootDatum:
    algebra: LieSuperalgebra
    weights: tuple[Weight, ...]
    roots: tuple[Root, ...]
    zero_space: tuple[int, ...]
    form_on_hstar: QMatrix
    functional: tuple[Fraction, ...] | None = None
    positive: frozenset[Weight] | None = None
    rho: Weight | None = None

    @property
    def rank(self) -> int:
        return len(self.algebra.cartan)

    # ── Form on h* ────────────────────────────────────────────────────────

    def pairing(self, a: Weight, b: Weight) -> Fraction:
        return Weight(self.form_on_hstar.apply(b.coords))(a.coords)

    def norm2(self, a: Weight) -> Fraction:
        return self.pairing(a, a)

    def h_coords(self, a: Weight) -> Vector:
        """Coordinates of h_a in the Cartan basis."""
        return self.form_on_hstar.apply(a.coords)

    def h_vector(self, a: Weight) -> Vector:
        """h_a as a vector of the whole algebra."""
        out = [Fraction(0)] * self.algebra.dim
        for c, idx in zip(self.h_coords(a), self.algebra.cartan):
            out[idx] = c
        return tuple(out)

    def evaluate(self, a: Weight, vector: Sequence) -> Fraction:
        """a(h) for h given as a vector of the algebra (only Cartan coordinates are read)."""
        return a(tuple(vector[idx] for idx in self.algebra.cartan))

    # ── Roots ─────────────────────────────────────────────────────────────

    def root(self, weight: Weight) -> Root | None:
        for r in self.roots:
            if r.weight == weight:
                return r
        return None

    def is_positive(self, weight: Weight) -> bool:
        if self.positive is None:
            raise ValueError("no positive system chosen")
        return weight in self.positive

    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if self.is_positive(r.weight))

    def negative_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if not self.is_positive(r.weight))

    def sign_of(self, weight: Weight) -> int:
        return _lex_sign(weight, self.functional)


@functools.lru_cache(maxsize=128)
def root_decomposition(L: LieSuperalgebra) -> RootDatum:
    weights = basis_weights(L)
    grouped: dict[Weight, list[int]] = {}
    zero = []
    for j, w in enumerate(weights):
        if w.is_zero():
            zero.append(j)
        else:
            grouped.setdefault(w, []).append(j)
    roots = tuple(
        Root(weight=w, indices=tuple(idx),
             even=sum(1 for i in idx if L.parity[i] == 0),
             odd=sum(1 for i in idx if L.parity[i] == 1))
        for w, idx in grouped.items()
    )
    cartan_gram = L.form.submatrix(L.cartan, L.cartan)
    try:
        hstar = inverse(cartan_gram)
    except SingularMatrix:
        raise DegenerateForm(f"{L.name}: form restricted to h is degenerate") from None
    logger.debug("%s: %d roots, rank %d", L.name, len(roots), len(L.cartan))
    return RootDatum(
        algebra=L,
        weights=weights,
        roots=roots,
        zero_space=tuple(zero),
        form_on_hstar=hstar,
    )


def choose_positive(rd: RootDatum, functional: Sequence | None = None) -> RootDatum:
    """Positive system: sign of the first nonzero of (f(alpha), alpha_1, alpha_2, ...)."""
    f = tuple(Fraction(x) for x in functional) if functional is not None else None
    if f is not None and len(f) != rd.rank:
        raise ValueError(f"functional has {len(f)} entries, rank is {rd.rank}")
    positive = frozenset(r.weight for r in rd.roots if _lex_sign(r.weight, f) > 0)
    chosen = dataclasses.replace(rd, functional=f, positive=positive, rho=None)
    return dataclasses.replace(chosen, rho=weyl_vector(chosen))


def weyl_vector(rd: RootDatum) -> Weight:
    """rho = 1/2 sum over positive roots of sdim(g_alpha) alpha."""
    rho = Weight.zero(rd.rank)
    for r in rd.positive_roots():
        rho = rho + r.weight * r.sdim
    return rho * Fraction(1, 2)


@functools.lru_cache(maxsize=128)
def positive_root_datum(L: LieSuperalgebra) -> RootDatum:
    """Root datum with the default lexicographic positive system."""
    return choose_positive(root_decomposition(L))


# ---------------------------------------------------------------------------
# Simple roots, highest root, marks (even algebras)
# ---------------------------------------------------------------------------

def simple_roots(rd: RootDatum, include: Callable[[Root], bool] | None = None) -> tuple[Root, ...]:
    """Positive roots (among those passing ``include``) that are not sums of two others."""
    pos = [r for r in rd.positive_roots() if include is None or include(r)]
    weights = {r.weight for r in pos}
    simple = []
    for r in pos:
        if not any((r.weight - other.weight) in weights for other in pos if other is not r):
            simple.append(r)
    return tuple(sorted(simple, key=lambda r: r.indices[0]))


def simple_root_coordinates(simple: Sequence[Root], weight: Weight) -> Vector:
    """Coefficients of ``weight`` in the simple roots."""
    m = QMatrix.from_columns([r.weight.coords for r in simple], rows=weight.rank)
    return solve(m, weight.coords)


def highest_root(rd: RootDatum, simple: Sequence[Root] | None = None) -> Root:
    simple = simple if simple is not None else simple_roots(rd)
    best, best_height = None, None
    for r in rd.positive_roots():
        height = sum(simple_root_coordinates(simple, r.weight))
        if best_height is None or height > best_height:
            best, best_height = r, height
    if best is None:
        raise ValueError(f"{rd.algebra.name} has no positive roots")
    return best


def marks(rd: RootDatum, simple: Sequence[Root] | None = None) -> tuple[int, ...]:
    """Marks (a_0 = 1, a_1, ..., a_n): theta = sum_{i >= 1} a_i alpha_i."""
    simple = simple if simple is not None else simple_roots(rd)
    coords = simple_root_coordinates(simple, highest_root(rd, simple).weight)
    if any(c.denominator != 1 or c <= 0 for c in coords):
        raise ValueError(f"{rd.algebra.name}: highest root has coordinates {coords}")
    return (1,) + tuple(int(c) for c in coords)
