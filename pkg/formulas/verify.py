"""
Formula checks -- the strange and very strange identities and their companions.

Every right-hand side is evaluated block by block over the generalized
eigenspaces V_i of the Casimir operator (orthogonal ideals), with g_i half the
eigenvalue on V_i:

    strange       |rho|^2       = sum_i g_i sdim V_i / 12
    very strange  |rho_sigma|^2 = sum_i g_i (sdim V_i / 12 - 2 z(V_i, sigma))

For an indecomposable algebra there is a single block and these reduce to the
familiar one-term formulas.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Sequence

from exact.rational import HALF, format_rational
from formulas.report import VerificationReport
from gradings.sigma import block_z, indecomposability_screen, sigma_weyl_data
from gradings.torus import Grading
from structure.casimir import casimir_blocks, nilpotent_part
from structure.roots import choose_positive, root_decomposition
from superalgebra.algebra import LieSuperalgebra, center, dual_basis, killing_form, to_dense

logger = logging.getLogger(__name__)


def _block_context(blocks) -> list[dict]:
    return [{"g": b.g_value, "dim": b.dim, "sdim": b.sdim} for b in blocks]


def verify_strange(L: LieSuperalgebra, killing: bool = False,
                   functional: Sequence | None = None) -> VerificationReport:
    """|rho|^2 = sum_i g_i sdim V_i / 12 (g measured against the algebra's own form)."""
    if killing:
        L = L.with_form(killing_form(L), name=f"{L.name}[killing]")
    rd = choose_positive(root_decomposition(L), functional)
    blocks = casimir_blocks(L)
    lhs = rd.norm2(rd.rho)
    rhs = sum((b.g_value * b.sdim for b in blocks), Fraction(0)) / 12
    report = VerificationReport(
        formula="strange",
        algebra=L.name,
        lhs=lhs,
        rhs=rhs,
        context={
            "form": "killing" if killing else "given",
            "rho": str(rd.rho),
            "sdim": L.sdim,
            "blocks": _block_context(blocks),
            "functional": list(rd.functional) if rd.functional else None,
        },
    )
    _log(report)
    return report


def verify_very_strange(L: LieSuperalgebra, G: Grading,
                        functional: Sequence | None = None) -> VerificationReport:
    data = sigma_weyl_data(L, G, functional)
    rd = data.root_datum
    blocks = casimir_blocks(L)
    if len(blocks) == 1:
        z_values = [data.z_value]
    else:
        z_values = [block_z(L, G, b) for b in blocks]
    rhs = sum((b.g_value * (Fraction(b.sdim, 12) - 2 * z) for b, z in zip(blocks, z_values)), Fraction(0))
    lhs = rd.norm2(data.rho_sigma)
    screen = indecomposability_screen(L, G)
    report = VerificationReport(
        formula="very-strange",
        algebra=L.name,
        lhs=lhs,
        rhs=rhs,
        torus=str(G.torus),
        order=G.order,
        context={
            "rho_sigma": str(data.rho_sigma),
            "z": data.z_value,
            "c0": data.z_value - Fraction(L.sdim, 16),
            "c0_note": "z - sdim/16, not verified",
            "sdims": {str(p): G.sdim(p) for p in G.sorted_phases()},
            "blocks": [dict(ctx, z=z) for ctx, z in zip(_block_context(blocks), z_values)],
            "screen": {"passed": screen.passed, "violated": screen.violated},
        },
    )
    _log(report)
    return report


def verify_sumsixixi(L: LieSuperalgebra, G: Grading,
                     functional: Sequence | None = None) -> VerificationReport:
    """sum_i s_i [x^i, x_i] = sum_{0<j<1/2} 2(1 - 2j) h_{rho^j}, s_i the phase of x_i."""
    data = sigma_weyl_data(L, G, functional)
    rd = data.root_datum
    duals = dual_basis(L).sparse
    acc: dict[int, Fraction] = {}
    for i, phase in enumerate(G.phases):
        if phase.is_zero():
            continue
        for k, v in L.bracket_sparse(duals[i], {i: Fraction(1)}).items():
            acc[k] = acc.get(k, 0) + phase.value * v
    lhs = to_dense(acc, L.dim)

    rhs = [Fraction(0)] * L.dim
    for phase, rho_j in data.rho_parts.items():
        if 0 < phase.value < HALF:
            for k, v in enumerate(rd.h_vector(rho_j)):
                rhs[k] += 2 * (1 - 2 * phase.value) * v
    report = VerificationReport(
        formula="sum-s-i",
        algebra=L.name,
        lhs=lhs,
        rhs=tuple(rhs),
        torus=str(G.torus),
        order=G.order,
        context={"labels": list(L.labels)},
    )
    _log(report)
    return report


def verify_cg_orthogonality(L: LieSuperalgebra, G: Grading,
                            functional: Sequence | None = None) -> VerificationReport:
    """rho_sigma(C_g h_{rho_sigma}) = 0 for the nilpotent Casimir part C_g."""
    data = sigma_weyl_data(L, G, functional)
    rd = data.root_datum
    c = nilpotent_part(L)
    image = c.apply(rd.h_vector(data.rho_sigma))
    lhs = rd.evaluate(data.rho_sigma, image)
    report = VerificationReport(
        formula="cg-orthogonality",
        algebra=L.name,
        lhs=lhs,
        rhs=Fraction(0),
        torus=str(G.torus),
        order=G.order,
        context={"cg_zero": c.is_zero()},
    )
    _log(report)
    return report


def verify_isotropy_remark(L: LieSuperalgebra, G: Grading,
                           functional: Sequence | None = None) -> VerificationReport | None:
    """|rho_sigma|^2 = 0 when g is indecomposable with nonzero center.

    Returns None when the remark does not apply.
    """
    z = center(L)
    if not z or len(casimir_blocks(L)) != 1:
        return None
    data = sigma_weyl_data(L, G, functional)
    report = VerificationReport(
        formula="isotropy-remark",
        algebra=L.name,
        lhs=data.root_datum.norm2(data.rho_sigma),
        rhs=Fraction(0),
        torus=str(G.torus),
        order=G.order,
        context={"center_dim": len(z)},
    )
    _log(report)
    return report


def scale_invariance_check(L: LieSuperalgebra, c, grading: Grading | None = None) -> bool:
    """Rescaling the form by c divides both sides by c and keeps the verdict."""
    c = Fraction(c)
    scaled = L.rescaled(c)
    if grading is None:
        before, after = verify_strange(L), verify_strange(scaled)
    else:
        before, after = verify_very_strange(L, grading), verify_very_strange(scaled, grading)
    ok = (before.passed == after.passed
          and after.lhs == before.lhs / c
          and after.rhs == before.rhs / c)
    if not ok:
        logger.warning("%s: rescaling by %s changed the verdict", L.name, format_rational(c))
    return ok


def _log(report: VerificationReport):
    if report.passed:
        logger.info("%s %s%s: pass", report.formula, report.algebra,
                    f" @ {report.torus}" if report.torus else "")
    else:
        logger.warning("%s %s%s: FAIL lhs=%s rhs=%s", report.formula, report.algebra,
                       f" @ {report.torus}" if report.torus else "", report.lhs, report.rhs)
