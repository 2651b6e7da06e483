"""
Isotropy -- polarization of odd subspaces, isotropic extension inside h and the
maximal-isotropy certificate for n + h+.
"""

from __future__ import annotations

import dataclasses
import logging
from fractions import Fraction
from typing import Sequence

from exact.errors import DegenerateForm, IsotropicSeedInvalid, SingularMatrix
from exact.matrix import EchelonSpan, QMatrix, Vector, inverse, kernel
from exact.rational import rational_sqrt
from superalgebra.algebra import LieSuperalgebra

logger = logging.getLogger(__name__)


def _comb(coeffs: Sequence[Fraction], vectors: Sequence[Vector], dim: int) -> Vector:
    out = [Fraction(0)] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                if x:
                    out[i] += c * x
    return tuple(out)


def _axpy(a: Fraction, x: Vector, y: Vector) -> Vector:
    """y + a x."""
    return tuple(yi + a * xi for xi, yi in zip(x, y))


# ---------------------------------------------------------------------------
# Odd polarization
# ---------------------------------------------------------------------------

def polarize(L: LieSuperalgebra, vectors: Sequence[Vector]) -> tuple[tuple[Vector, ...], tuple[Vector, ...]]:
    """Split an odd space with skew form into W+ and W- with (w+_i, w-_j) = delta_ij.

    Symplectic Gram-Schmidt: pick u, a partner w with omega(u, w) = 1, project
    every other vector off span(u, w) and repeat.
    """
    pool = list(vectors)
    plus, minus = [], []
    while pool:
        u = pool.pop(0)
        partner = next((k for k, w in enumerate(pool) if L.pair(u, w) != 0), None)
        if partner is None:
            raise DegenerateForm(f"{L.name}: odd vector has no partner under the form")
        w = pool.pop(partner)
        scale = L.pair(u, w)
        w = tuple(x / scale for x in w)
        projected = []
        for v in pool:
            b = L.pair(v, u)
            a = -L.pair(v, w)
            # omega(u, w) = 1 = -omega(w, u); v + a u + b w is orthogonal to both.
            projected.append(_axpy(b, w, _axpy(a, u, v)))
        pool = projected
        plus.append(u)
        minus.append(w)
    return tuple(plus), tuple(minus)


# ---------------------------------------------------------------------------
# Isotropic extension in h
# ---------------------------------------------------------------------------

def _orthogonal_basis(L: LieSuperalgebra, vectors: list[Vector]) -> list[tuple[Vector, Fraction]]:
    """Diagonalize a symmetric form on span(vectors); drops radical directions."""
    pool = list(vectors)
    out = []
    while pool:
        idx = next((k for k, v in enumerate(pool) if L.pair(v, v) != 0), None)
        if idx is None:
            pair = next(((a, b) for a in range(len(pool)) for b in range(a + 1, len(pool))
                         if L.pair(pool[a], pool[b]) != 0), None)
            if pair is None:
                logger.debug("dropping %d radical directions", len(pool))
                break
            a, b = pair
            pool[a] = tuple(x + y for x, y in zip(pool[a], pool[b]))
            idx = a
        v = pool.pop(idx)
        q = L.pair(v, v)
        pool = [_axpy(-L.pair(u, v) / q, v, u) for u in pool]
        out.append((v, q))
    return out


def isotropic_extension(
    L: LieSuperalgebra, seed: Sequence[Vector], space: Sequence[Vector]
) -> tuple[tuple[Vector, ...], bool]:
    """Extend an isotropic ``seed`` inside span(space) using hyperbolic pairs over Q.

    Returns (basis, certified); certified means the result has the maximal
    dimension floor(dim space / 2).
    """
    dim = L.dim
    seed = list(EchelonSpan(dim, seed).basis)
    space = list(EchelonSpan(dim, space).basis)
    inside = EchelonSpan(dim, space)
    for w in seed:
        if not inside.contains(w):
            raise IsotropicSeedInvalid(f"{L.name}: seed vector is not inside the given space")
        if any(L.pair(w, v) != 0 for v in seed):
            raise IsotropicSeedInvalid(f"{L.name}: seed is not isotropic")

    # seed^perp inside span(space), then a complement of seed in it.
    if seed:
        m = QMatrix.from_rows([[L.pair(w, s) for s in space] for w in seed], cols=len(space))
        perp = [_comb(c, space, dim) for c in kernel(m)]
    else:
        perp = list(space)
    complement_span = EchelonSpan(dim, seed)
    complement = [v for v in perp if complement_span.add(v)]

    ortho = _orthogonal_basis(L, complement)
    used = set()
    extra = []
    for a, (u, qa) in enumerate(ortho):
        if a in used:
            continue
        for b in range(a + 1, len(ortho)):
            if b in used:
                continue
            v, qb = ortho[b]
            t = rational_sqrt(-qa / qb)
            if t is None:
                continue
            extra.append(_axpy(t, v, u))
            used.update((a, b))
            break
    result = tuple(seed + extra)
    certified = len(result) == len(space) // 2
    if not certified:
        logger.info("%s: isotropic subspace of h has dim %d < %d over Q",
                    L.name, len(result), len(space) // 2)
    return result, certified


# ---------------------------------------------------------------------------
# Certificate
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class IsotropyCertificate:
    isotropic: bool
    contained_in_perp: bool
    dimension: int
    target_dimension: int
    maximal: bool
    pairing_nondegenerate: bool | None
    note: str

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


def isotropy_certificate(L: LieSuperalgebra, W: Sequence[Vector], triangular=None) -> IsotropyCertificate:
    """Check that W is isotropic and whether it reaches the maximal dimension.

    The target is floor(dim g_0 / 2) + dim g_1 / 2; a TriangularData, when
    given, adds the check that the form pairs n with n_- nondegenerately.
    """
    dim = L.dim
    basis = list(EchelonSpan(dim, W).basis)
    gram = L.gram(basis, basis) if basis else QMatrix.zeros(0, 0)
    isotropic = gram.is_zero()
    if basis:
        form_t = L.form.T
        perp = kernel(QMatrix.from_rows([form_t.apply(w) for w in basis], cols=dim))
        perp_span = EchelonSpan(dim, perp)
        contained = all(perp_span.contains(w) for w in basis)
    else:
        contained = True
    target = len(L.even_indices) // 2 + len(L.odd_indices) // 2
    dimension = len(basis)

    pairing = None
    if triangular is not None:
        g = L.gram(triangular.n_basis, triangular.n_minus_basis)
        try:
            inverse(g)
            pairing = True
        except SingularMatrix:
            pairing = False

    maximal = isotropic and dimension == target
    if not isotropic:
        note = "not isotropic"
    elif maximal:
        note = "maximal isotropic"
    elif triangular is not None and not triangular.h_plus_certified:
        note = "isotropic; maximality not certified over Q"
    else:
        note = f"not maximal: dim {dimension} < {target}"
    return IsotropyCertificate(
        isotropic=isotropic,
        contained_in_perp=contained,
        dimension=dimension,
        target_dimension=target,
        maximal=maximal,
        pairing_nondegenerate=pairing,
        note=note,
    )
