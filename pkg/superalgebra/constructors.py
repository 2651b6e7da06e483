"""
Constructors -- matrix realizations of gl(m|n), sl(m|n), osp(m|2n) and C(0|2k).

Each family is built from sparse supermatrices; brackets are supercommutators,
re-expanded in the chosen basis through a left inverse on a set of pivot
positions, and the form is a fixed multiple of the supertrace str(XY).

Usage::

    from superalgebra.constructors import build_glmn, build_slmn, build_ospm2n

    gl11 = build_glmn(1, 1)      # dim 4, sdim 0
    osp12 = build_ospm2n(1, 1)   # dim 5, sdim 1
"""

from __future__ import annotations

import functools
import logging
from fractions import Fraction
from typing import Sequence

from exact.errors import DegenerateForm
from exact.matrix import EchelonSpan, QMatrix, inverse, rank
from superalgebra.algebra import LieSuperalgebra

logger = logging.getLogger(__name__)

SparseMatrix = dict[tuple[int, int], Fraction]


def _matmul(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    by_row: dict[int, list[tuple[int, Fraction]]] = {}
    for (k, j), v in b.items():
        by_row.setdefault(k, []).append((j, v))
    out: SparseMatrix = {}
    for (i, k), u in a.items():
        for j, v in by_row.get(k, ()):
            out[(i, j)] = out.get((i, j), 0) + u * v
    return {key: v for key, v in out.items() if v != 0}


def _supercommutator(a: SparseMatrix, pa: int, b: SparseMatrix, pb: int) -> SparseMatrix:
    ab = _matmul(a, b)
    ba = _matmul(b, a)
    s = -1 if pa and pb else 1
    out = dict(ab)
    for key, v in ba.items():
        out[key] = out.get(key, 0) - s * v
    return {key: v for key, v in out.items() if v != 0}


def _supertrace(a: SparseMatrix, row_parity: Sequence[int]) -> Fraction:
    return sum((-v if row_parity[i] else v for (i, j), v in a.items() if i == j), Fraction(0))


class _MatrixRealization:
    """Turns a list of homogeneous supermatrices into a LieSuperalgebra."""

    def __init__(self, matrices: Sequence[SparseMatrix], parities: Sequence[int],
                 row_parity: Sequence[int]):
        self.matrices = list(matrices)
        self.parities = list(parities)
        self.row_parity = list(row_parity)
        d = len(self.matrices)
        positions = sorted({pos for m in self.matrices for pos in m})
        chosen, span = [], EchelonSpan(d)
        for pos in positions:
            if span.add([m.get(pos, Fraction(0)) for m in self.matrices]):
                chosen.append(pos)
            if span.rank == d:
                break
        if span.rank < d:
            raise ValueError("basis matrices are linearly dependent")
        self._pivots = chosen
        self._left_inverse = inverse(QMatrix.from_rows(span.basis, cols=d))

    def coordinates(self, m: SparseMatrix) -> dict[int, Fraction]:
        values = [m.get(pos, Fraction(0)) for pos in self._pivots]
        if not any(values):
            if m:
                raise ValueError("supercommutator left the span of the basis")
            return {}
        coords = self._left_inverse.apply(values)
        result = {k: c for k, c in enumerate(coords) if c != 0}
        rebuilt: SparseMatrix = {}
        for k, c in result.items():
            for pos, v in self.matrices[k].items():
                rebuilt[pos] = rebuilt.get(pos, 0) + c * v
        if {p: v for p, v in rebuilt.items() if v != 0} != m:
            raise ValueError("supercommutator left the span of the basis")
        return result

    def build(self, name: str, labels: Sequence[str], form_scale: Fraction,
              cartan: Sequence[int]) -> LieSuperalgebra:
        d = len(self.matrices)
        table = {}
        gram = [[Fraction(0)] * d for _ in range(d)]
        for i in range(d):
            for j in range(i, d):
                comm = _supercommutator(self.matrices[i], self.parities[i],
                                        self.matrices[j], self.parities[j])
                if comm:
                    table[(i, j)] = self.coordinates(comm)
                if self.parities[i] == self.parities[j]:
                    v = form_scale * _supertrace(_matmul(self.matrices[i], self.matrices[j]),
                                                 self.row_parity)
                    gram[i][j] = v
                    gram[j][i] = v if self.parities[i] == 0 else -v
        logger.debug("built %s: dim %d, %d nonzero brackets", name, d, len(table))
        return LieSuperalgebra(
            name=name,
            labels=tuple(labels),
            parity=tuple(self.parities),
            structure=table,
            form=QMatrix.from_rows(gram, cols=d),
            cartan=tuple(cartan),
        )


def _elementary_label(a: int, b: int, size: int) -> str:
    return f"E{a + 1}{b + 1}" if size < 10 else f"E{a + 1},{b + 1}"


def _gl_row_parity(m: int, n: int) -> list[int]:
    return [0] * m + [1] * n


# ---------------------------------------------------------------------------
# gl(m|n), sl(m|n)
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=32)
def build_glmn(m: int, n: int) -> LieSuperalgebra:
    """gl(m|n) with basis E_ab, form str(XY) and Cartan spanned by E_aa."""
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError(f"gl({m}|{n}) needs m, n >= 0 and m + n >= 1")
    size = m + n
    rp = _gl_row_parity(m, n)
    matrices, parities, labels = [], [], []
    for a in range(size):
        matrices.append({(a, a): Fraction(1)})
        parities.append(0)
        labels.append(_elementary_label(a, a, size))
    for a in range(size):
        for b in range(size):
            if a != b:
                matrices.append({(a, b): Fraction(1)})
                parities.append((rp[a] + rp[b]) % 2)
                labels.append(_elementary_label(a, b, size))
    name = f"gl({m}|{n})"
    return _MatrixRealization(matrices, parities, rp).build(
        name, labels, Fraction(1), cartan=range(size))


@functools.lru_cache(maxsize=32)
def build_slmn(m: int, n: int) -> LieSuperalgebra:
    """sl(m|n), m != n, with Cartan H_a = s_a E_aa - s_{a+1} E_{a+1,a+1}."""
    if m < 0 or n < 0 or m + n < 2:
        raise ValueError(f"sl({m}|{n}) needs m, n >= 0 and m + n >= 2")
    size = m + n
    rp = _gl_row_parity(m, n)
    signs = [-1 if p else 1 for p in rp]
    matrices, parities, labels = [], [], []
    for a in range(size - 1):
        matrices.append({(a, a): Fraction(signs[a]), (a + 1, a + 1): Fraction(-signs[a + 1])})
        parities.append(0)
        labels.append(f"H{a + 1}")
    for a in range(size):
        for b in range(size):
            if a != b:
                matrices.append({(a, b): Fraction(1)})
                parities.append((rp[a] + rp[b]) % 2)
                labels.append(_elementary_label(a, b, size))
    L = _MatrixRealization(matrices, parities, rp).build(
        f"sl({m}|{n})", labels, Fraction(1), cartan=range(size - 1))
    r = rank(L.form)
    if r < L.dim:
        raise DegenerateForm(f"sl({m}|{n}): supertrace form has rank {r} < {L.dim}")
    return L


# ---------------------------------------------------------------------------
# osp(m|2n)
# ---------------------------------------------------------------------------

def _osp_space(m: int, n: int):
    """Bilinear form J on C^{m|2n}, row parities and weights of the basis.

    Weights are given in the coordinates of the Cartan basis: the first m//2
    entries for the even block, then n entries for the odd block.
    """
    rank_even = m // 2
    size = m + 2 * n
    parity = [0] * m + [1] * (2 * n)
    j_form: dict[tuple[int, int], Fraction] = {}
    for i in range(m):
        j_form[(i, m - 1 - i)] = Fraction(1)
    for i in range(n):
        j_form[(m + i, m + n + i)] = Fraction(1)
        j_form[(m + n + i, m + i)] = Fraction(-1)
    weights = []
    for i in range(size):
        w = [0] * (rank_even + n)
        if i < m:
            if i < rank_even:
                w[i] = 1
            elif m - 1 - i < rank_even:
                w[m - 1 - i] = -1
        elif i < m + n:
            w[rank_even + i - m] = 1
        else:
            w[rank_even + i - m - n] = -1
        weights.append(tuple(w))
    return size, parity, j_form, weights


def _osp_generator(u: int, v: int, parity, j_form) -> SparseMatrix:
    """T_{u,v}(w) = u J(v, w) - (-1)^{|u||v|} v J(u, w)."""
    s = -1 if parity[u] and parity[v] else 1
    out: SparseMatrix = {}
    for (a, w), val in j_form.items():
        if a == v:
            out[(u, w)] = out.get((u, w), 0) + val
        if a == u:
            out[(v, w)] = out.get((v, w), 0) - s * val
    return {key: x for key, x in out.items() if x != 0}


@functools.lru_cache(maxsize=32)
def build_ospm2n(m: int, n: int) -> LieSuperalgebra:
    """osp(m|2n) with form 1/2 str(XY); the Cartan is diagonal in this realization."""
    if m < 0 or n < 0:
        raise ValueError(f"osp({m}|{2 * n}) needs m, n >= 0")
    size, parity, j_form, weights = _osp_space(m, n)
    rank_even = m // 2
    matrices, parities, labels = [], [], []
    for i in range(rank_even):
        matrices.append({(i, i): Fraction(1), (m - 1 - i, m - 1 - i): Fraction(-1)})
        parities.append(0)
        labels.append(f"h{i + 1}")
    for i in range(n):
        matrices.append({(m + i, m + i): Fraction(1), (m + n + i, m + n + i): Fraction(-1)})
        parities.append(0)
        labels.append(f"h{rank_even + i + 1}")
    cartan = list(range(len(matrices)))

    def vec_label(i: int) -> str:
        return f"e{i + 1}" if i < m else f"f{i - m + 1}"

    for u in range(size):
        for v in range(u, size):
            if u == v and parity[u] == 0:
                continue
            if all(a + b == 0 for a, b in zip(weights[u], weights[v])):
                continue
            t = _osp_generator(u, v, parity, j_form)
            if not t:
                continue
            matrices.append(t)
            parities.append((parity[u] + parity[v]) % 2)
            labels.append(f"T({vec_label(u)},{vec_label(v)})")
    if not matrices:
        raise ValueError(f"osp({m}|{2 * n}) is zero-dimensional")
    return _MatrixRealization(matrices, parities, parity).build(
        f"osp({m}|{2 * n})", labels, Fraction(1, 2), cartan=cartan)


# ---------------------------------------------------------------------------
# C(0|2k)
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=8)
def build_odd_symplectic(k: int) -> LieSuperalgebra:
    """Purely odd abelian algebra C(0|2k) with (p_i, q_i) = 1 = -(q_i, p_i)."""
    if k < 1:
        raise ValueError("C(0|2k) needs k >= 1")
    d = 2 * k
    gram = [[Fraction(0)] * d for _ in range(d)]
    for i in range(k):
        gram[i][k + i] = Fraction(1)
        gram[k + i][i] = Fraction(-1)
    return LieSuperalgebra(
        name=f"C(0|{d})",
        labels=tuple([f"p{i + 1}" for i in range(k)] + [f"q{i + 1}" for i in range(k)]),
        parity=(1,) * d,
        structure={},
        form=QMatrix.from_rows(gram, cols=d),
        cartan=(),
    )
