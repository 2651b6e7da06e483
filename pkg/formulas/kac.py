"""
Even very strange formula -- the classical statement for a simple Lie algebra
with Killing form kappa and an automorphism of order m given by labels.

    labels s_0, ..., s_n >= 0,   m = sum_i a_i s_i   (a_0 = 1, a_i the marks)
    alpha_i(h_s) = s_i / m,      kappa(lambda_s, alpha_i) = s_i / (2m)

    kappa(rho - lambda_s, rho - lambda_s)
        = dim g / 24 - 1/(4 m^2) sum_{j=1}^{m-1} j (m - j) dim g^{j/m}

Usage::

    report = verify_even_vsf(build_slmn(3, 0), (1, 1, 1))
    assert report.passed
"""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from typing import Iterator, Sequence

from exact.errors import SingularCartanSystem, SingularMatrix
from exact.matrix import QMatrix, inverse
from exact.rational import Phase
from formulas.report import VerificationReport
from gradings.torus import grading_from_torus, torus_from_labels
from structure.roots import RootDatum, Weight, marks, positive_root_datum, simple_roots
from superalgebra.algebra import LieSuperalgebra, killing_form

logger = logging.getLogger(__name__)


def killing_root_datum(L: LieSuperalgebra) -> tuple[LieSuperalgebra, RootDatum]:
    if L.odd_indices:
        raise ValueError(f"{L.name} is not purely even")
    Lk = L.with_form(killing_form(L), name=f"{L.name}[killing]")
    return Lk, positive_root_datum(Lk)


def verify_even_vsf(L: LieSuperalgebra, s_labels: Sequence[int], m: int | None = None) -> VerificationReport:
    Lk, rd = killing_root_datum(L)
    simple = simple_roots(rd)
    labels = tuple(int(s) for s in s_labels)
    torus, order = torus_from_labels(rd, labels)
    if m is not None and m != order:
        raise ValueError(f"m = {m} does not match sum a_i s_i = {order}")
    G = grading_from_torus(Lk, torus)

    # kappa(lambda, alpha_i) = alpha_i^T F lambda with F the form on h*.
    rows = [rd.form_on_hstar.apply(r.weight.coords) for r in simple]
    try:
        lam = inverse(QMatrix.from_rows(rows, cols=rd.rank)).apply(
            [Fraction(s, 2 * order) for s in labels[1:]])
    except SingularMatrix:
        raise SingularCartanSystem(f"{L.name}: simple-root Gram system is singular") from None
    lam_s = Weight.of(lam)

    shifted = rd.rho - lam_s
    lhs = rd.norm2(shifted)
    tail = sum((j * (order - j) * G.dim(Phase(Fraction(j, order))) for j in range(1, order)), 0)
    rhs = Fraction(L.dim, 24) - Fraction(tail, 4 * order * order)
    report = VerificationReport(
        formula="even-very-strange",
        algebra=L.name,
        lhs=lhs,
        rhs=rhs,
        torus=str(torus),
        order=order,
        context={
            "labels": list(labels),
            "marks": list(marks(rd, simple)),
            "lambda_s": str(lam_s),
            "dims": {str(p): G.dim(p) for p in G.sorted_phases()},
        },
    )
    if not report.passed:
        logger.warning("even very strange formula fails for %s at %s", L.name, labels)
    return report


def even_vsf_labels(rd: RootDatum, max_m: int) -> Iterator[tuple[int, ...]]:
    """All label tuples (s_0, ..., s_n) with 1 <= sum a_i s_i <= max_m."""
    a = marks(rd)
    for labels in itertools.product(*(range(max_m // ai + 1) for ai in a)):
        total = sum(ai * si for ai, si in zip(a, labels))
        if 1 <= total <= max_m:
            yield labels
