"""
LieSuperalgebra -- a finite-dimensional Lie superalgebra over Q.

Stores a homogeneous basis, its parities, sparse structure constants, the Gram
matrix of an invariant supersymmetric form and the indices of the Cartan
basis elements.  Only the pairs (i, j) with i <= j are stored; the rest follow
from super-skew-symmetry  c_ji = -(-1)^{p_i p_j} c_ij.

Usage::

    from superalgebra.constructors import build_glmn

    L = build_glmn(1, 1)
    e12 = L.index("E12")
    print(L.bracket_basis(e12, L.index("E21")))
"""

from __future__ import annotations

import dataclasses
import functools
import logging
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Sequence

from exact.errors import DegenerateForm, SingularMatrix
from exact.matrix import EchelonSpan, QMatrix, Vector, inverse, kernel, rank
from exact.rational import PHASE_ZERO

logger = logging.getLogger(__name__)

SparseVector = dict[int, Fraction]

_EMPTY: Mapping[int, Fraction] = MappingProxyType({})


def to_sparse(vector: Sequence) -> SparseVector:
    return {i: Fraction(x) for i, x in enumerate(vector) if x != 0}


def to_dense(sparse: Mapping[int, Fraction], dim: int) -> Vector:
    out = [Fraction(0)] * dim
    for i, x in sparse.items():
        out[i] = Fraction(x)
    return tuple(out)


def _accumulate(out: dict, key, value):
    total = out.get(key, 0) + value
    if total == 0:
        out.pop(key, None)
    else:
        out[key] = total


@dataclasses.dataclass(frozen=True, eq=False)
class LieSuperalgebra:
    name: str
    labels: tuple[str, ...]
    parity: tuple[int, ...]
    structure: Mapping[tuple[int, int], Mapping[int, Fraction]]
    form: QMatrix
    cartan: tuple[int, ...]

    def __post_init__(self):
        n = len(self.parity)
        if len(self.labels) != n:
            raise ValueError(f"{self.name}: {len(self.labels)} labels for {n} basis vectors")
        if any(p not in (0, 1) for p in self.parity):
            raise ValueError(f"{self.name}: parities must be 0 or 1")
        if self.form.shape != (n, n):
            raise ValueError(f"{self.name}: form has shape {self.form.shape}, expected {(n, n)}")
        if any(not 0 <= c < n for c in self.cartan):
            raise ValueError(f"{self.name}: Cartan index out of range")
        clean = {}
        for (i, j), coeffs in self.structure.items():
            if i > j:
                raise ValueError(f"{self.name}: structure key ({i}, {j}) must have i <= j")
            kept = {k: Fraction(v) for k, v in coeffs.items() if v != 0}
            if kept:
                clean[(i, j)] = MappingProxyType(kept)
        object.__setattr__(self, "structure", MappingProxyType(clean))
        object.__setattr__(self, "_index", {label: i for i, label in enumerate(self.labels)})

    # ── Basic data ────────────────────────────────────────────────────────

    @property
    def dim(self) -> int:
        return len(self.parity)

    @property
    def sdim(self) -> int:
        return sum(-1 if p else 1 for p in self.parity)

    @property
    def even_indices(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.parity) if p == 0)

    @property
    def odd_indices(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.parity) if p == 1)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"{self.name} has no basis vector {label!r}") from None

    def sign(self, i: int, j: int) -> int:
        """(-1)^{p_i p_j}."""
        return -1 if self.parity[i] and self.parity[j] else 1

    # ── Bracket ───────────────────────────────────────────────────────────

    def bracket_basis(self, i: int, j: int) -> Mapping[int, Fraction]:
        if i <= j:
            return self.structure.get((i, j), _EMPTY)
        coeffs = self.structure.get((j, i))
        if not coeffs:
            return _EMPTY
        s = -self.sign(i, j)
        return {k: s * v for k, v in coeffs.items()}

    def bracket_sparse(self, a: Mapping[int, Fraction], b: Mapping[int, Fraction]) -> SparseVector:
        out: SparseVector = {}
        for i, ai in a.items():
            for j, bj in b.items():
                for k, c in self.bracket_basis(i, j).items():
                    _accumulate(out, k, ai * bj * c)
        return out

    def bracket(self, a: Sequence, b: Sequence) -> Vector:
        return to_dense(self.bracket_sparse(to_sparse(a), to_sparse(b)), self.dim)

    def ad_matrix(self, x: Sequence | int) -> QMatrix:
        """Matrix of ad x in the basis: column j holds [x, x_j]."""
        sx = {x: Fraction(1)} if isinstance(x, int) else to_sparse(x)
        cols = [to_dense(self.bracket_sparse(sx, {j: Fraction(1)}), self.dim) for j in range(self.dim)]
        return QMatrix.from_columns(cols, self.dim)

    # ── Form ──────────────────────────────────────────────────────────────

    def pair_sparse(self, a: Mapping[int, Fraction], b: Mapping[int, Fraction]) -> Fraction:
        total = Fraction(0)
        for i, ai in a.items():
            for j, bj in b.items():
                g = self.form[i, j]
                if g:
                    total += ai * bj * g
        return total

    def pair(self, a: Sequence, b: Sequence) -> Fraction:
        return self.pair_sparse(to_sparse(a), to_sparse(b))

    def gram(self, left: Sequence[Sequence], right: Sequence[Sequence]) -> QMatrix:
        ls = [to_sparse(v) for v in left]
        rs = [to_sparse(v) for v in right]
        return QMatrix.from_rows([[self.pair_sparse(a, b) for b in rs] for a in ls], cols=len(rs))

    def parity_of(self, vector: Sequence) -> int | None:
        """Parity of a homogeneous vector; None for zero or mixed vectors."""
        ps = {self.parity[i] for i, x in enumerate(vector) if x != 0}
        return ps.pop() if len(ps) == 1 else None

    # ── Derived algebras ──────────────────────────────────────────────────

    def with_form(self, form: QMatrix, name: str | None = None) -> "LieSuperalgebra":
        return dataclasses.replace(self, form=form, name=name or self.name)

    def rescaled(self, c) -> "LieSuperalgebra":
        c = Fraction(c)
        if c == 0:
            raise ValueError("cannot rescale the form by zero")
        return self.with_form(self.form * c, name=f"{self.name}*{c}")

    def with_structure_constant(self, i: int, j: int, k: int, value) -> "LieSuperalgebra":
        """Copy with c_ij^k replaced; used to build deliberately broken inputs."""
        if i > j:
            i, j = j, i
            value = -self.sign(i, j) * Fraction(value)
        table = {key: dict(coeffs) for key, coeffs in self.structure.items()}
        table.setdefault((i, j), {})[k] = Fraction(value)
        return dataclasses.replace(self, structure=table, name=f"{self.name}~")

    def __repr__(self) -> str:
        return f"LieSuperalgebra({self.name}, dim={self.dim}, sdim={self.sdim})"


def structure_from_brackets(
    dim: int, bracket: Callable[[int, int], Mapping[int, Fraction]]
) -> dict[tuple[int, int], dict[int, Fraction]]:
    """Tabulate bracket(i, j) -> sparse vector for every i <= j."""
    table = {}
    for i in range(dim):
        for j in range(i, dim):
            coeffs = bracket(i, j)
            if coeffs:
                table[(i, j)] = coeffs
    return table


# ---------------------------------------------------------------------------
# Form-derived data
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class DualBasis:
    """x^j with (x_i, x^j) = delta_ij, in coordinates and sparse form."""

    vectors: tuple[Vector, ...]
    sparse: tuple[Mapping[int, Fraction], ...]


@functools.lru_cache(maxsize=128)
def dual_basis(L: LieSuperalgebra) -> DualBasis:
    """Dual basis for the form: row j of (B^{-1})^T gives the coordinates of x^j.

    (x_i, x^j) = sum_l D[j,l] B[i,l] = (B D^T)_{ij}, so D = (B^{-1})^T.
    """
    try:
        b_inv = inverse(L.form)
    except SingularMatrix as exc:
        raise DegenerateForm(f"{L.name}: form is degenerate ({exc})") from None
    d = b_inv.T
    vectors = d.to_rows()
    for j, v in enumerate(vectors):
        if L.parity_of(v) not in (L.parity[j], None):
            raise DegenerateForm(f"{L.name}: form mixes parities at x^{j}")
    return DualBasis(vectors=vectors, sparse=tuple(MappingProxyType(dict(
        (k, x) for k, x in enumerate(v) if x != 0)) for v in vectors))


def killing_form(L: LieSuperalgebra) -> QMatrix:
    """kappa(x_i, x_j) = str(ad x_i ad x_j)."""
    n = L.dim
    cols = [[L.bracket_basis(i, l) for l in range(n)] for i in range(n)]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            total = Fraction(0)
            for l in range(n):
                for k, c in cols[i][l].items():
                    other = cols[j][k].get(l)
                    if other:
                        total += (-c if L.parity[k] else c) * other
            row.append(total)
        rows.append(row)
    return QMatrix.from_rows(rows, cols=n)


def form_rank(L: LieSuperalgebra) -> int:
    return rank(L.form)


def center(L: LieSuperalgebra) -> tuple[Vector, ...]:
    """Basis of {z : [x_i, z] = 0 for all i}."""
    n = L.dim
    rows = EchelonSpan(n)
    for i in range(n):
        ad_rows: dict[int, list[Fraction]] = {}
        for j in range(n):
            for k, c in L.bracket_basis(i, j).items():
                ad_rows.setdefault(k, [Fraction(0)] * n)[j] = c
        for row in ad_rows.values():
            rows.add(row)
    return kernel(QMatrix.from_rows(rows.basis, cols=n))


def direct_sum(*algebras: LieSuperalgebra, name: str | None = None) -> LieSuperalgebra:
    """Orthogonal direct sum; labels get an ``A<k>.`` prefix."""
    if not algebras:
        raise ValueError("direct sum of no algebras")
    labels, parity, cartan = [], [], []
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    total = sum(a.dim for a in algebras)
    gram = [[Fraction(0)] * total for _ in range(total)]
    offset = 0
    for k, a in enumerate(algebras, start=1):
        labels += [f"A{k}.{lab}" for lab in a.labels]
        parity += list(a.parity)
        cartan += [offset + c for c in a.cartan]
        for (i, j), coeffs in a.structure.items():
            table[(offset + i, offset + j)] = {offset + m: v for m, v in coeffs.items()}
        for i in range(a.dim):
            for j in range(a.dim):
                gram[offset + i][offset + j] = a.form[i, j]
        offset += a.dim
    return LieSuperalgebra(
        name=name or "+".join(a.name for a in algebras),
        labels=tuple(labels),
        parity=tuple(parity),
        structure=table,
        form=QMatrix.from_rows(gram, cols=total),
        cartan=tuple(cartan),
    )


def restrict_to_indices(L: LieSuperalgebra, indices: Iterable[int], name: str) -> LieSuperalgebra:
    """Subalgebra spanned by a set of basis vectors (must be closed under the bracket)."""
    idx = sorted(set(indices))
    pos = {old: new for new, old in enumerate(idx)}
    table = {}
    for a, i in enumerate(idx):
        for j in idx[a:]:
            coeffs = L.bracket_basis(i, j)
            if not coeffs:
                continue
            if any(k not in pos for k in coeffs):
                raise ValueError(f"{name}: span of the chosen basis vectors is not a subalgebra")
            table[(pos[i], pos[j])] = {pos[k]: v for k, v in coeffs.items()}
    missing = [c for c in L.cartan if c not in pos]
    if missing:
        raise ValueError(f"{name}: subalgebra does not contain the Cartan elements {missing}")
    return LieSuperalgebra(
        name=name,
        labels=tuple(L.labels[i] for i in idx),
        parity=tuple(L.parity[i] for i in idx),
        structure=table,
        form=L.form.submatrix(idx, idx),
        cartan=tuple(pos[c] for c in L.cartan),
    )


def fixed_point_subalgebra(L: LieSuperalgebra, grading) -> LieSuperalgebra:
    """g^0 for a grading whose phases are attached to basis vectors."""
    indices = grading.eigenspaces.get(PHASE_ZERO, ())
    sub = restrict_to_indices(L, indices, name=f"{L.name}^0[{grading.torus}]")
    logger.debug("fixed-point subalgebra of %s: dim %d", L.name, sub.dim)
    return sub
