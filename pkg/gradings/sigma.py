"""
Sigma-twisted Weyl data for a torus grading, and the indecomposability screen.

For the eigenspaces g^j (j in [0, 1)):

    rho^0     Weyl vector of the fixed-point subalgebra g^0
    rho^j     1/2 sum over basis vectors of phase j of (-1)^p weight
    rho_sigma sum over j in [0, 1/2] of (1 - 2j) rho^j
    z(g, s)   1/2 sum_j j(1 - j)/2 sdim g^j
"""

from __future__ import annotations

import dataclasses
import logging
from fractions import Fraction
from typing import Mapping, Sequence

from exact.matrix import Vector
from exact.rational import HALF, PHASE_ZERO, Phase
from gradings.torus import Grading, grading_check
from structure.casimir import CasimirBlock, casimir_blocks, projection_rank
from structure.roots import RootDatum, Weight, choose_positive, root_decomposition
from superalgebra.algebra import LieSuperalgebra, fixed_point_subalgebra

logger = logging.getLogger(__name__)


def z_from_sdims(sdims: Mapping[Phase, int]) -> Fraction:
    return sum((p.value * (1 - p.value) * s for p, s in sdims.items()), Fraction(0)) / 4


@dataclasses.dataclass(frozen=True, eq=False)
class SigmaWeylData:
    grading: Grading
    root_datum: RootDatum
    fixed_point: LieSuperalgebra
    rho_parts: Mapping[Phase, Weight]
    rho_sigma: Weight
    z_value: Fraction

    def rho(self, phase: Phase) -> Weight:
        return self.rho_parts.get(phase, Weight.zero(self.root_datum.rank))


def sigma_weyl_data(L: LieSuperalgebra, G: Grading, functional: Sequence | None = None) -> SigmaWeylData:
    rd = choose_positive(root_decomposition(L), functional)
    sub = fixed_point_subalgebra(L, G)
    rho0 = choose_positive(root_decomposition(sub), functional).rho

    parts: dict[Phase, Weight] = {PHASE_ZERO: rho0}
    for phase, indices in G.eigenspaces.items():
        if phase.is_zero():
            continue
        acc = Weight.zero(rd.rank)
        for i in indices:
            w = rd.weights[i]
            acc = acc - w if L.parity[i] else acc + w
        parts[phase] = acc * HALF

    rho_sigma = Weight.zero(rd.rank)
    for phase, rho_j in parts.items():
        if phase.value <= HALF:
            rho_sigma = rho_sigma + rho_j * (1 - 2 * phase.value)

    z = z_from_sdims({p: G.sdim(p) for p in G.eigenspaces})
    logger.debug("%s at %s: rho_sigma=%s z=%s", L.name, G.torus, rho_sigma, z)
    return SigmaWeylData(
        grading=G,
        root_datum=rd,
        fixed_point=sub,
        rho_parts=parts,
        rho_sigma=rho_sigma,
        z_value=z,
    )


def block_sdims(L: LieSuperalgebra, G: Grading, block: CasimirBlock) -> dict[Phase, int]:
    """sdim(V cap g^j) for a sigma-stable, parity-stable subspace V."""
    out = {}
    for phase, indices in G.eigenspaces.items():
        even = [i for i in indices if L.parity[i] == 0]
        odd = [i for i in indices if L.parity[i] == 1]
        out[phase] = projection_rank(block.basis, even) - projection_rank(block.basis, odd)
    return out


def block_z(L: LieSuperalgebra, G: Grading, block: CasimirBlock) -> Fraction:
    return z_from_sdims(block_sdims(L, G, block))


# ---------------------------------------------------------------------------
# Indecomposability screen
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class ScreenReport:
    single_casimir_eigenvalue: bool
    form_compatible: bool
    no_basis_ideal_split: bool

    @property
    def passed(self) -> bool:
        return self.single_casimir_eigenvalue and self.form_compatible and self.no_basis_ideal_split

    @property
    def violated(self) -> list[str]:
        return [name for name, ok in dataclasses.asdict(self).items() if not ok]


def _basis_components(L: LieSuperalgebra) -> int:
    parent = list(range(L.dim))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int):
        parent[find(a)] = find(b)

    for (i, j), coeffs in L.structure.items():
        union(i, j)
        for k in coeffs:
            union(i, k)
    for i in range(L.dim):
        for j in range(L.dim):
            if L.form[i, j]:
                union(i, j)
    return len({find(i) for i in range(L.dim)})


def indecomposability_screen(L: LieSuperalgebra, G: Grading) -> ScreenReport:
    """Necessary conditions for indecomposability; never a proof of it."""
    form_problems = [p for p in grading_check(L, G) if p.startswith("form")]
    return ScreenReport(
        single_casimir_eigenvalue=len(casimir_blocks(L)) == 1,
        form_compatible=not form_problems,
        no_basis_ideal_split=_basis_components(L) == 1,
    )


def rho_sigma_vector(data: SigmaWeylData) -> Vector:
    """h_{rho_sigma} as a vector of the algebra."""
    return data.root_datum.h_vector(data.rho_sigma)


def rho_pairing_violations(data: SigmaWeylData) -> list[str]:
    """Phases j != 0 with rho^j + rho^(1-j) != 0."""
    problems = []
    for phase, rho_j in data.rho_parts.items():
        if phase.is_zero():
            continue
        if not (rho_j + data.rho(-phase)).is_zero():
            problems.append(f"rho^{phase} + rho^{-phase} = {rho_j + data.rho(-phase)}")
    return problems


def sdim_accounting(L: LieSuperalgebra, G: Grading) -> bool:
    return sum(G.sdim(p) for p in G.eigenspaces) == L.sdim
