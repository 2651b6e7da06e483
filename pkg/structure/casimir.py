"""
Casimir -- the quadratic super-Casimir operator acting on the adjoint module.

    Omega(y) = sum_i [x^i, [x_i, y]],   (x_i, x^j) = delta_ij

Omega commutes with ad g and is self-adjoint for the form.  Its generalized
eigenspaces are mutually orthogonal ideals; on each of them
Omega = 2g + C with C nilpotent.

Usage::

    data = casimir(build_ospm2n(1, 1))
    print(data.g_value)

    for block in casimir_blocks(build_glmn(2, 0)):
        print(block.eigenvalue, block.sdim)
"""

from __future__ import annotations

import dataclasses
import functools
import logging
from fractions import Fraction
from typing import Sequence

from exact.errors import DecomposableAlgebra
from exact.matrix import QMatrix, Vector, inverse, rank, rational_spectrum_split
from structure.roots import RootDatum, highest_root, positive_root_datum, simple_roots
from superalgebra.algebra import LieSuperalgebra, dual_basis, to_dense

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class CasimirBlock:
    """One generalized eigenspace of Omega."""

    eigenvalue: Fraction
    basis: tuple[Vector, ...]
    even_dim: int
    odd_dim: int

    @property
    def g_value(self) -> Fraction:
        return self.eigenvalue / 2

    @property
    def dim(self) -> int:
        return self.even_dim + self.odd_dim

    @property
    def sdim(self) -> int:
        return self.even_dim - self.odd_dim


@dataclasses.dataclass(frozen=True, eq=False)
class CasimirData:
    omega: QMatrix
    g_value: Fraction
    c_g: QMatrix

    @property
    def nilpotent(self) -> bool:
        return not self.c_g.is_zero()


def projection_rank(vectors: Sequence[Vector], indices: Sequence[int]) -> int:
    """Rank of the vectors restricted to the given coordinates."""
    if not vectors or not indices:
        return 0
    return rank(QMatrix.from_rows([[v[i] for i in indices] for v in vectors], cols=len(indices)))


@functools.lru_cache(maxsize=128)
def casimir_matrix(L: LieSuperalgebra) -> QMatrix:
    """Matrix of Omega: column k is Omega(x_k)."""
    duals = dual_basis(L).sparse
    n = L.dim
    cols = []
    for k in range(n):
        acc: dict[int, Fraction] = {}
        for i in range(n):
            inner = L.bracket_basis(i, k)
            if not inner:
                continue
            for m, v in L.bracket_sparse(duals[i], inner).items():
                acc[m] = acc.get(m, 0) + v
        cols.append(to_dense(acc, n))
    return QMatrix.from_columns(cols, n)


@functools.lru_cache(maxsize=128)
def casimir_blocks(L: LieSuperalgebra) -> tuple[CasimirBlock, ...]:
    """Generalized eigenspaces of Omega, largest eigenvalue first."""
    omega = casimir_matrix(L)
    even, odd = L.even_indices, L.odd_indices
    blocks = []
    for space in rational_spectrum_split(omega):
        blocks.append(CasimirBlock(
            eigenvalue=space.value,
            basis=space.basis,
            even_dim=projection_rank(space.basis, even),
            odd_dim=projection_rank(space.basis, odd),
        ))
    logger.debug("%s: Casimir eigenvalues %s", L.name, [str(b.eigenvalue) for b in blocks])
    return tuple(blocks)


def nilpotent_part(L: LieSuperalgebra) -> QMatrix:
    """C = Omega - S, where S acts by the eigenvalue on each generalized eigenspace."""
    omega = casimir_matrix(L)
    blocks = casimir_blocks(L)
    if len(blocks) == 1:
        return omega - QMatrix.identity(L.dim) * blocks[0].eigenvalue
    basis = [v for b in blocks for v in b.basis]
    values = [b.eigenvalue for b in blocks for _ in b.basis]
    p = QMatrix.from_columns(basis, L.dim)
    s = p @ QMatrix.diagonal(values) @ inverse(p)
    return omega - s


def casimir(L: LieSuperalgebra) -> CasimirData:
    """Omega with its single eigenvalue 2g and nilpotent part C_g."""
    blocks = casimir_blocks(L)
    if len(blocks) != 1:
        raise DecomposableAlgebra(
            f"{L.name}: Casimir has eigenvalues {[str(b.eigenvalue) for b in blocks]}")
    block = blocks[0]
    omega = casimir_matrix(L)
    c_g = omega - QMatrix.identity(L.dim) * block.eigenvalue
    if not c_g.is_zero() and not c_g.power(L.dim).is_zero():
        raise DecomposableAlgebra(f"{L.name}: Omega - 2g is not nilpotent")
    return CasimirData(omega=omega, g_value=block.g_value, c_g=c_g)


# ---------------------------------------------------------------------------
# Sanity checks
# ---------------------------------------------------------------------------

def casimir_symmetry_check(L: LieSuperalgebra) -> bool:
    """(Omega a, b) = (a, Omega b), i.e. Omega^T B = B Omega."""
    omega = casimir_matrix(L)
    return omega.T @ L.form == L.form @ omega


def casimir_commutation_scan(L: LieSuperalgebra) -> list[int]:
    """Basis indices i for which Omega fails to commute with ad x_i."""
    omega = casimir_matrix(L)
    blocks = casimir_blocks(L)
    if len(blocks) == 1 and (omega - QMatrix.identity(L.dim) * blocks[0].eigenvalue).is_zero():
        return []
    bad = []
    for i in range(L.dim):
        ad = L.ad_matrix(i)
        if omega @ ad != ad @ omega:
            bad.append(i)
    return bad


@dataclasses.dataclass(frozen=True)
class DualCoxeterCheck:
    g_value: Fraction
    theta_norm2: Fraction
    normalized: Fraction
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def dual_coxeter_check(L: LieSuperalgebra, rd: RootDatum | None = None) -> DualCoxeterCheck:
    """2g = (theta, theta + 2 rho) for a simple even algebra, in any scale.

    ``normalized`` is g measured against (theta, theta) = 2, i.e. the dual
    Coxeter number.
    """
    rd = rd or positive_root_datum(L)
    g = casimir(L).g_value
    theta = highest_root(rd, simple_roots(rd)).weight
    t = rd.norm2(theta)
    rhs = rd.pairing(theta, theta + rd.rho * 2)
    return DualCoxeterCheck(
        g_value=g,
        theta_norm2=t,
        normalized=g / (t / 2) if t else Fraction(0),
        lhs=2 * g,
        rhs=rhs,
    )
