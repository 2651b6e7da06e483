"""
QMatrix -- immutable dense matrices over Q and the exact algorithms on them.

Entries live in a numpy object array of ``fractions.Fraction``; numpy gives
us slicing, transposition and ``@`` while Fraction keeps every step exact.

Usage::

    from exact.matrix import QMatrix, kernel, rational_spectrum_split

    m = QMatrix.from_rows([[2, 0, 0], [0, 2, 0], [0, 0, 0]])
    for eigenvalue, basis in rational_spectrum_split(m):
        print(eigenvalue, len(basis))
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from exact.errors import SingularMatrix, SpectrumNotRational

logger = logging.getLogger(__name__)

Vector = tuple[Fraction, ...]

# Object-dtype matmul over an empty inner dimension yields int 0; every array
# is passed through this before it is wrapped.
_TO_FRACTION = np.frompyfunc(Fraction, 1, 1)


def _as_fraction_array(arr: np.ndarray) -> np.ndarray:
    if arr.size == 0:
        return np.empty(arr.shape, dtype=object)
    return _TO_FRACTION(arr).astype(object)


class QMatrix:
    """Immutable rectangular matrix with rational entries."""

    __slots__ = ("_a",)

    def __init__(self, array: np.ndarray):
        if array.ndim != 2:
            raise ValueError(f"QMatrix needs a 2-d array, got shape {array.shape}")
        a = _as_fraction_array(array)
        a.setflags(write=False)
        self._a = a

    # ── Constructors ──────────────────────────────────────────────────────

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: int | None = None) -> "QMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(np.empty((0, cols or 0), dtype=object))
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        arr = np.empty((len(rows), width), dtype=object)
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                arr[i, j] = Fraction(x)
        return cls(arr)

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence], rows: int) -> "QMatrix":
        columns = [list(c) for c in columns]
        if not columns:
            return cls(np.empty((rows, 0), dtype=object))
        return cls.from_rows(columns).T

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(np.full((rows, cols), Fraction(0), dtype=object))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        arr = np.full((n, n), Fraction(0), dtype=object)
        for i in range(n):
            arr[i, i] = Fraction(1)
        return cls(arr)

    @classmethod
    def diagonal(cls, values: Sequence) -> "QMatrix":
        n = len(values)
        arr = np.full((n, n), Fraction(0), dtype=object)
        for i, v in enumerate(values):
            arr[i, i] = Fraction(v)
        return cls(arr)

    # ── Accessors ─────────────────────────────────────────────────────────

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the underlying object array."""
        return self._a

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self._a[i, j]

    def row(self, i: int) -> Vector:
        return tuple(self._a[i, :])

    def column(self, j: int) -> Vector:
        return tuple(self._a[:, j])

    def to_rows(self) -> tuple[Vector, ...]:
        return tuple(tuple(r) for r in self._a)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "QMatrix":
        return QMatrix(self._a[np.ix_(list(row_idx), list(col_idx))]
                       if row_idx and col_idx
                       else np.empty((len(row_idx), len(col_idx)), dtype=object))

    # ── Arithmetic ────────────────────────────────────────────────────────

    @property
    def T(self) -> "QMatrix":
        return QMatrix(self._a.T.copy())

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if self.cols == 0:
            return QMatrix.zeros(self.rows, other.cols)
        return QMatrix(self._a @ other._a)

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._check_same_shape(other)
        return QMatrix(self._a + other._a)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._check_same_shape(other)
        return QMatrix(self._a - other._a)

    def __neg__(self) -> "QMatrix":
        return QMatrix(-self._a)

    def __mul__(self, scalar) -> "QMatrix":
        return QMatrix(self._a * Fraction(scalar))

    __rmul__ = __mul__

    def apply(self, vector: Sequence) -> Vector:
        if len(vector) != self.cols:
            raise ValueError(f"vector of length {len(vector)} for {self.shape} matrix")
        if self.cols == 0:
            return tuple(Fraction(0) for _ in range(self.rows))
        out = self._a @ np.array([Fraction(x) for x in vector], dtype=object)
        return tuple(Fraction(x) for x in out)

    def power(self, k: int) -> "QMatrix":
        if k < 0:
            raise ValueError("negative matrix power")
        result = QMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def trace(self) -> Fraction:
        return sum((self._a[i, i] for i in range(min(self.shape))), Fraction(0))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._a.flat)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def _check_same_shape(self, other: "QMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._a == other._a))

    __hash__ = None

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._a)
        return f"QMatrix({self.rows}x{self.cols}: [{body}])"


# ---------------------------------------------------------------------------
# Vector helpers
# ---------------------------------------------------------------------------

def zero_vector(n: int) -> Vector:
    return tuple(Fraction(0) for _ in range(n))


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(n))


def add_vectors(a: Sequence, b: Sequence) -> Vector:
    return tuple(Fraction(x) + y for x, y in zip(a, b))


def sub_vectors(a: Sequence, b: Sequence) -> Vector:
    return tuple(Fraction(x) - y for x, y in zip(a, b))


def scale_vector(c, a: Sequence) -> Vector:
    c = Fraction(c)
    return tuple(c * x for x in a)


def is_zero_vector(a: Sequence) -> bool:
    return all(x == 0 for x in a)


def dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((Fraction(x) * y for x, y in zip(a, b)), Fraction(0))


# ---------------------------------------------------------------------------
# Row reduction
# ---------------------------------------------------------------------------

def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Gauss-Jordan elimination; returns the nonzero reduced rows and pivot columns."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def row_reduce(m: QMatrix) -> tuple[QMatrix, tuple[int, ...]]:
    reduced, pivots = _rref([list(r) for r in m.array], m.cols)
    return QMatrix.from_rows(reduced, cols=m.cols), tuple(pivots)


def rank(m: QMatrix) -> int:
    return len(_rref([list(r) for r in m.array], m.cols)[1])


def kernel(m: QMatrix) -> tuple[Vector, ...]:
    """Basis of {v : M v = 0}, one vector per free column."""
    reduced, pivots = _rref([list(r) for r in m.array], m.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[free]
        basis.append(tuple(v))
    return tuple(basis)


def solve(m: QMatrix, b: Sequence) -> Vector:
    """One solution of M x = b; raises ValueError if the system is inconsistent."""
    if len(b) != m.rows:
        raise ValueError("right-hand side has the wrong length")
    aug = [list(r) + [Fraction(x)] for r, x in zip(m.array, b)]
    reduced, pivots = _rref(aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        raise ValueError("inconsistent linear system")
    x = [Fraction(0)] * m.cols
    for row, p in zip(reduced, pivots):
        x[p] = row[m.cols]
    return tuple(x)


def inverse(m: QMatrix) -> QMatrix:
    if not m.is_square():
        raise SingularMatrix(f"cannot invert non-square {m.shape} matrix")
    n = m.rows
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m.array)]
    reduced, pivots = _rref(aug, n)
    if len(pivots) < n:
        raise SingularMatrix(f"matrix of rank {len(pivots)} < {n}")
    return QMatrix.from_rows([row[n:] for row in reduced], cols=n)


class EchelonSpan:
    """Incrementally maintained span of vectors in Q^dim.

    Accepted vectors are kept verbatim in ``basis``; a private echelon copy
    answers membership queries.
    """

    def __init__(self, dim: int, vectors: Iterable[Sequence] = ()):
        self.dim = dim
        self._rows: list[list[Fraction]] = []
        self._pivots: list[int] = []
        self._basis: list[Vector] = []
        for v in vectors:
            self.add(v)

    def _reduce(self, v: Sequence) -> list[Fraction]:
        w = [Fraction(x) for x in v]
        if len(w) != self.dim:
            raise ValueError(f"vector of length {len(w)} in a span of Q^{self.dim}")
        for row, p in zip(self._rows, self._pivots):
            f = w[p]
            if f != 0:
                w = [a - f * b for a, b in zip(w, row)]
        return w

    def add(self, v: Sequence) -> bool:
        """Add ``v``; returns False when it was already in the span."""
        w = self._reduce(v)
        p = next((i for i, x in enumerate(w) if x != 0), None)
        if p is None:
            return False
        inv = 1 / w[p]
        self._rows.append([x * inv for x in w])
        self._pivots.append(p)
        self._basis.append(tuple(Fraction(x) for x in v))
        return True

    def contains(self, v: Sequence) -> bool:
        return all(x == 0 for x in self._reduce(v))

    @property
    def rank(self) -> int:
        return len(self._basis)

    @property
    def basis(self) -> tuple[Vector, ...]:
        return tuple(self._basis)


def span_rank(vectors: Iterable[Sequence], dim: int) -> int:
    return EchelonSpan(dim, vectors).rank


def intersect_spans(dim: int, a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple[Vector, ...]:
    """Basis of span(a) cap span(b), from the kernel of [a | -b]."""
    a = EchelonSpan(dim, a).basis
    b = EchelonSpan(dim, b).basis
    if not a or not b:
        return ()
    cols = list(a) + [tuple(-x for x in v) for v in b]
    out = EchelonSpan(dim)
    for coeffs in kernel(QMatrix.from_columns(cols, rows=dim)):
        v = [Fraction(0)] * dim
        for c, u in zip(coeffs[:len(a)], a):
            if c:
                for i, x in enumerate(u):
                    v[i] += c * x
        out.add(v)
    return out.basis


# ---------------------------------------------------------------------------
# Characteristic polynomial and rational spectrum
# ---------------------------------------------------------------------------

def char_poly(m: QMatrix) -> tuple[Fraction, ...]:
    """Coefficients of det(tI - M), leading first: (1, c_{n-1}, ..., c_0).

    Faddeev-LeVerrier recursion; exact because the only divisions are by k.
    """
    if not m.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    coeffs = [Fraction(1)]
    ident = QMatrix.identity(n)
    mk = ident
    for k in range(1, n + 1):
        amk = m @ mk
        c = -amk.trace() / k
        coeffs.append(c)
        mk = amk + ident * c
    return tuple(coeffs)


def poly_at_matrix(coeffs: Sequence, m: QMatrix) -> QMatrix:
    """Horner evaluation of a leading-first coefficient list at M."""
    ident = QMatrix.identity(m.rows)
    acc = QMatrix.zeros(m.rows, m.cols)
    for c in coeffs:
        acc = acc @ m + ident * c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    divs = [1]
    for prime, exp in factors.items():
        divs = [d * prime ** e for d in divs for e in range(exp + 1)]
    return divs


def _deflate(coeffs: list[Fraction], root: Fraction) -> tuple[list[Fraction], Fraction]:
    """Synthetic division by (t - root); returns (quotient, remainder)."""
    out = []
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * root + c
        out.append(acc)
    return out[:-1], out[-1]


def rational_roots(coeffs: Sequence) -> dict[Fraction, int]:
    """Rational roots with multiplicity of a leading-first polynomial."""
    poly = [Fraction(c) for c in coeffs]
    while poly and poly[0] == 0:
        poly.pop(0)
    roots: dict[Fraction, int] = {}
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
        roots[Fraction(0)] = roots.get(Fraction(0), 0) + 1
    if len(poly) <= 1:
        return roots
    denom = math.lcm(*(c.denominator for c in poly))
    ints = [int(c * denom) for c in poly]
    candidates = set()
    for p in _divisors(ints[-1]):
        for q in _divisors(ints[0]):
            candidates.add(Fraction(p, q))
            candidates.add(Fraction(-p, q))
    for cand in sorted(candidates):
        while len(poly) > 1:
            quotient, remainder = _deflate(poly, cand)
            if remainder != 0:
                break
            roots[cand] = roots.get(cand, 0) + 1
            poly = quotient
    return roots


class Eigenspace(NamedTuple):
    value: Fraction
    basis: tuple[Vector, ...]


def rational_spectrum_split(m: QMatrix) -> list[Eigenspace]:
    """Generalized eigenspaces of M, ordered by decreasing eigenvalue.

    Raises SpectrumNotRational when the rational eigenvalues do not account
    for the whole space.
    """
    if not m.is_square():
        raise ValueError("spectrum of a non-square matrix")
    n = m.rows
    if n == 0:
        return []
    ident = QMatrix.identity(n)
    first = m[0, 0]
    if (m - ident * first).is_zero():
        return [Eigenspace(first, tuple(unit_vector(n, i) for i in range(n)))]

    roots = rational_roots(char_poly(m))
    found = sum(roots.values())
    if found != n:
        raise SpectrumNotRational(
            f"rational eigenvalues cover {found} of {n} dimensions"
        )
    spaces = []
    for value in sorted(roots, reverse=True):
        mult = roots[value]
        basis = kernel((m - ident * value).power(mult))
        if len(basis) != mult:
            raise SpectrumNotRational(
                f"generalized eigenspace for {value} has dimension {len(basis)}, expected {mult}"
            )
        spaces.append(Eigenspace(value, basis))
    logger.debug("spectrum split: %s", [(str(s.value), len(s.basis)) for s in spaces])
    return spaces
