"""
Axiom checks for a LieSuperalgebra.

``validate`` never raises for a failing axiom; it reports each one with the
first counterexample it found so the CLI can print a table.
"""

from __future__ import annotations

import dataclasses
import logging
from fractions import Fraction

from exact.matrix import rank
from superalgebra.algebra import LieSuperalgebra

logger = logging.getLogger(__name__)

AXIOMS = (
    "parity",
    "super-skew",
    "super-jacobi",
    "form-supersymmetric",
    "form-invariant",
    "form-nondegenerate",
    "cartan",
)


@dataclasses.dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    witness: str = ""


@dataclasses.dataclass(frozen=True)
class ValidationReport:
    algebra: str
    checks: tuple[AxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> AxiomCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "passed": self.passed,
            "checks": [dataclasses.asdict(c) for c in self.checks],
        }


def _check_parity(L: LieSuperalgebra) -> AxiomCheck:
    for (i, j), coeffs in L.structure.items():
        for k in coeffs:
            if L.parity[k] != (L.parity[i] + L.parity[j]) % 2:
                return AxiomCheck("parity", False, f"[{L.labels[i]}, {L.labels[j]}] has a {L.labels[k]} term")
    return AxiomCheck("parity", True)


def _check_skew(L: LieSuperalgebra) -> AxiomCheck:
    # Only the diagonal can contradict the stored half: [x, x] = 0 for even x.
    for i in range(L.dim):
        if L.parity[i] == 0 and L.bracket_basis(i, i):
            return AxiomCheck("super-skew", False, f"[{L.labels[i]}, {L.labels[i]}] != 0")
    return AxiomCheck("super-skew", True)


def _check_jacobi(L: LieSuperalgebra) -> AxiomCheck:
    """[a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]] on basis triples."""
    n = L.dim
    for a in range(n):
        ea = {a: Fraction(1)}
        for b in range(n):
            eb = {b: Fraction(1)}
            ab = L.bracket_basis(a, b)
            s = L.sign(a, b)
            for c in range(n):
                ec = {c: Fraction(1)}
                lhs = L.bracket_sparse(ea, L.bracket_basis(b, c))
                rhs = L.bracket_sparse(ab, ec)
                for k, v in L.bracket_sparse(eb, L.bracket_basis(a, c)).items():
                    rhs[k] = rhs.get(k, 0) + s * v
                rhs = {k: v for k, v in rhs.items() if v != 0}
                if lhs != rhs:
                    return AxiomCheck(
                        "super-jacobi", False,
                        f"({L.labels[a]}, {L.labels[b]}, {L.labels[c]})")
    return AxiomCheck("super-jacobi", True)


def _check_supersymmetric(L: LieSuperalgebra) -> AxiomCheck:
    for i in range(L.dim):
        for j in range(L.dim):
            g = L.form[i, j]
            if g and L.parity[i] != L.parity[j]:
                return AxiomCheck("form-supersymmetric", False,
                                  f"({L.labels[i]}, {L.labels[j]}) pairs opposite parities")
            if g != L.sign(i, j) * L.form[j, i]:
                return AxiomCheck("form-supersymmetric", False,
                                  f"({L.labels[i]}, {L.labels[j]}) vs ({L.labels[j]}, {L.labels[i]})")
    return AxiomCheck("form-supersymmetric", True)


def _check_invariant(L: LieSuperalgebra) -> AxiomCheck:
    """([x_i, x_j], x_k) = (x_i, [x_j, x_k])."""
    n = L.dim
    for i in range(n):
        for j in range(n):
            ij = L.bracket_basis(i, j)
            for k in range(n):
                left = sum((v * L.form[m, k] for m, v in ij.items()), Fraction(0))
                right = sum((v * L.form[i, m] for m, v in L.bracket_basis(j, k).items()), Fraction(0))
                if left != right:
                    return AxiomCheck("form-invariant", False,
                                      f"({L.labels[i]}, {L.labels[j]}, {L.labels[k]})")
    return AxiomCheck("form-invariant", True)


def _check_nondegenerate(L: LieSuperalgebra) -> AxiomCheck:
    r = rank(L.form)
    if r < L.dim:
        return AxiomCheck("form-nondegenerate", False, f"rank {r} < {L.dim}")
    return AxiomCheck("form-nondegenerate", True)


def _check_cartan(L: LieSuperalgebra) -> AxiomCheck:
    for h in L.cartan:
        if L.parity[h]:
            return AxiomCheck("cartan", False, f"{L.labels[h]} is odd")
        for h2 in L.cartan:
            if L.bracket_basis(h, h2):
                return AxiomCheck("cartan", False, f"[{L.labels[h]}, {L.labels[h2]}] != 0")
        for j in range(L.dim):
            if any(k != j for k in L.bracket_basis(h, j)):
                return AxiomCheck("cartan", False,
                                  f"{L.labels[j]} is not a weight vector for {L.labels[h]}")
    return AxiomCheck("cartan", True)


def validate(L: LieSuperalgebra) -> ValidationReport:
    checks = (
        _check_parity(L),
        _check_skew(L),
        _check_jacobi(L),
        _check_supersymmetric(L),
        _check_invariant(L),
        _check_nondegenerate(L),
        _check_cartan(L),
    )
    report = ValidationReport(algebra=L.name, checks=checks)
    if not report.passed:
        logger.warning("%s fails %s", L.name, ", ".join(c.name for c in report.failures()))
    return report
