"""
Sweep -- run every formula check over a list of algebras and sampled gradings.

Each algebra is one unit of work for the thread pool.  Reports are recorded
under (algebra position, step number) so the collected stream comes out in the
same order whatever the scheduling.

Per algebra:
    strange formula
    triangular decomposition checks
    for the trivial grading and each sampled torus:
        very strange formula, sum s_i [x^i, x_i], C_g orthogonality,
        isotropy remark (when it applies), triangular checks on g^0
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Sequence

from cli.catalog import parse_algebra_spec
from cli.collector import ReportCollector
from decomposition.triangular import triangular, triangular_checks
from exact.errors import AlgebraError
from formulas.report import VerificationReport
from formulas.verify import (
    verify_cg_orthogonality,
    verify_isotropy_remark,
    verify_sumsixixi,
    verify_strange,
    verify_very_strange,
)
from gradings.torus import grading_from_torus, sample_tori, trivial_grading
from superalgebra.algebra import LieSuperalgebra, fixed_point_subalgebra

logger = logging.getLogger(__name__)


def structural_report(L: LieSuperalgebra, parent: str | None = None, torus: str | None = None,
                      order: int | None = None) -> VerificationReport:
    """Triangular checks as a report: lhs counts the failed checks.

    When L is a fixed-point subalgebra the report is filed under `parent`;
    the subalgebra name goes into the context.
    """
    checks = triangular_checks(L, triangular(L))
    failed = sorted(name for name, ok in checks.items() if not ok)
    context = {"failed": failed, "checks": checks}
    if parent is not None:
        context["subalgebra"] = L.name
    return VerificationReport(
        formula="triangular",
        algebra=parent or L.name,
        lhs=Fraction(len(failed)),
        rhs=Fraction(0),
        torus=torus,
        order=order,
        context=context,
    )


class _Steps:
    """Numbers the steps of one algebra and routes results to the collector."""

    def __init__(self, collector: ReportCollector, position: int, algebra: str):
        self.collector = collector
        self.position = position
        self.algebra = algebra
        self.count = 0

    def run(self, stage: str, fn: Callable[[], VerificationReport | None]):
        key = (self.position, self.count)
        self.count += 1
        try:
            report = fn()
        except AlgebraError as exc:
            logger.warning("%s: %s failed: %s", self.algebra, stage, exc)
            self.collector.record_error(key, self.algebra, stage, str(exc))
            return
        if report is not None:
            self.collector.record(key, report)


def sweep_algebra(spec: str, position: int, collector: ReportCollector,
                  samples: int, seed: int, structural: bool = True):
    try:
        L = parse_algebra_spec(spec)
    except AlgebraError as exc:
        collector.register_algebra(spec, position)
        collector.record_error((position, 0), spec, "build", str(exc))
        return
    collector.register_algebra(L.name, position)
    steps = _Steps(collector, position, L.name)

    steps.run("strange", lambda: verify_strange(L))
    if structural:
        steps.run("triangular", lambda: structural_report(L))

    gradings = [trivial_grading(L)] + [grading_from_torus(L, t) for t in sample_tori(L, samples, seed)]
    for G in gradings:
        steps.run(f"very-strange @ {G.torus}", lambda: verify_very_strange(L, G))
        steps.run(f"sum-s-i @ {G.torus}", lambda: verify_sumsixixi(L, G))
        steps.run(f"cg-orthogonality @ {G.torus}", lambda: verify_cg_orthogonality(L, G))
        steps.run(f"isotropy-remark @ {G.torus}", lambda: verify_isotropy_remark(L, G))
        if structural and not G.is_trivial:
            steps.run(f"triangular g^0 @ {G.torus}",
                      lambda: structural_report(fixed_point_subalgebra(L, G), L.name, str(G.torus), G.order))


def run_sweep(specs: Sequence[str], samples: int = 20, seed: int = 0, workers: int = 4,
              structural: bool = True) -> ReportCollector:
    collector = ReportCollector()

    def work(position: int, spec: str):
        try:
            sweep_algebra(spec, position, collector, samples, seed, structural)
        except Exception as exc:
            logger.error("%s: sweep aborted: %s", spec, exc)
            collector.record_error((position, -1), spec, "sweep", f"{type(exc).__name__}: {exc}")

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        for position, spec in enumerate(specs):
            pool.submit(work, position, spec)
    return collector
