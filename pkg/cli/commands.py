"""
Command handlers for main.py.

Each ``cmd_*`` takes a RunConfig, prints to stdout and returns the exit
status: 0 when everything asked for holds, 1 when a verification or check
fails (or the algebra is rejected by the library), 2 on bad input.

Usage::

    python main.py catalog --json
    python main.py verify strange --algebra "osp(1|2)"
    python main.py verify very-strange --algebra "sl(2|1)" --torus "1/2,0"
    python main.py verify even-vsf --algebra "sl(2)" --labels "1,1"
    python main.py decompose --algebra "gl(1|1)"
    python main.py verify strange --algebra-file my_algebra.json
"""

import json
import logging
import sys
from fractions import Fraction
from typing import Iterable, Sequence

import run_batch
from cli.catalog import catalog_listing, parse_algebra_spec
from cli.config import RunConfig, build_config_from_args
from decomposition.isotropy import isotropy_certificate
from decomposition.triangular import triangular, triangular_checks
from exact.errors import AlgebraError, SpecParseError
from exact.rational import format_rational
from formulas.kac import even_vsf_labels, killing_root_datum, verify_even_vsf
from formulas.report import VerificationReport
from formulas.verify import (
    verify_cg_orthogonality,
    verify_isotropy_remark,
    verify_sumsixixi,
    verify_strange,
    verify_very_strange,
)
from gradings.torus import Grading, grading_from_torus, sample_tori, trivial_grading
from superalgebra.algebra import LieSuperalgebra
from superalgebra.serialization import from_json
from superalgebra.validation import validate

logger = logging.getLogger(__name__)

_GRADED = {
    "very-strange": verify_very_strange,
    "sum-s-i": verify_sumsixixi,
    "cg-orthogonality": verify_cg_orthogonality,
    "isotropy-remark": verify_isotropy_remark,
}


# ── Output helpers ───────────────────────────────────────────────────

def format_vector(L: LieSuperalgebra, v: Sequence[Fraction]) -> str:
    """Render a coordinate vector as a combination of basis labels."""
    terms = []
    for c, label in zip(v, L.labels):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = label if mag == 1 else f"{format_rational(mag)}*{label}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _vectors(L: LieSuperalgebra, vectors: Iterable[Sequence[Fraction]]) -> list[str]:
    return [format_vector(L, v) for v in vectors]


def _emit_report(report: VerificationReport, config: RunConfig):
    if config.output == "json":
        print(report.to_json())
        return
    where = f" @ {report.torus} (m={report.order})" if report.torus else ""
    d = report.to_dict()
    print(f"{report.verdict.upper():4}  {report.formula:16} {report.algebra}{where}  "
          f"lhs={d['lhs']}  rhs={d['rhs']}")


def _algebra(config: RunConfig) -> LieSuperalgebra:
    if config.algebra and config.algebra_file:
        raise SpecParseError("give either --algebra or --algebra-file, not both")
    if config.algebra_file:
        try:
            with open(config.algebra_file) as f:
                text = f.read()
        except OSError as exc:
            raise SpecParseError(f"cannot read {config.algebra_file}: {exc.strerror}") from exc
        return from_json(text)
    if not config.algebra:
        raise SpecParseError("--algebra or --algebra-file is required")
    return parse_algebra_spec(config.algebra)


def _gradings(L: LieSuperalgebra, config: RunConfig) -> list[Grading]:
    torus = config.parsed_torus()
    if torus is not None:
        if len(torus.coords) != len(L.cartan):
            raise SpecParseError(
                f"{L.name}: torus needs {len(L.cartan)} coordinates, got {len(torus.coords)}")
        return [grading_from_torus(L, torus)]
    sampled = sample_tori(L, config.samples, config.seed)
    return [trivial_grading(L)] + [grading_from_torus(L, t) for t in sampled]


# ── Commands ─────────────────────────────────────────────────────────

def cmd_catalog(config: RunConfig) -> int:
    families = catalog_listing()
    if config.output == "json":
        print(json.dumps(families))
        return 0
    width = max(len(f["pattern"]) for f in families)
    for f in families:
        bounds = f"  [{f['bounds']}]" if f["bounds"] else ""
        print(f"{f['pattern']:<{width}}  {f['description']}{bounds}")
    return 0


def cmd_validate(config: RunConfig) -> int:
    L = _algebra(config)
    report = validate(L)
    if config.output == "json":
        print(json.dumps(report.to_dict()))
    else:
        print(f"{L.name}: dim {L.dim}, sdim {L.sdim}")
        for check in report.checks:
            witness = f"  ({check.witness})" if check.witness else ""
            print(f"  {'PASS' if check.passed else 'FAIL':4}  {check.name}{witness}")
    return 0 if report.passed else 1


def _verify_reports(L: LieSuperalgebra, config: RunConfig) -> Iterable[VerificationReport]:
    formula = config.formula
    if formula == "even-vsf":
        labels = config.parsed_labels()
        if labels is not None:
            yield verify_even_vsf(L, labels)
            return
        _, rd = killing_root_datum(L)
        for labels in even_vsf_labels(rd, config.max_m):
            yield verify_even_vsf(L, labels)
        return

    if formula in ("strange", "all"):
        yield verify_strange(L, killing=config.killing)
    if formula == "strange":
        return

    checks = list(_GRADED.values()) if formula == "all" else [_GRADED[formula]]
    for G in _gradings(L, config):
        for check in checks:
            report = check(L, G)
            if report is not None:
                yield report


def cmd_verify(config: RunConfig) -> int:
    L = _algebra(config)
    ok = True
    count = 0
    for report in _verify_reports(L, config):
        _emit_report(report, config)
        ok = ok and report.passed
        count += 1
    if count == 0 and config.output == "text":
        print(f"{config.formula} does not apply to {L.name}")
    return 0 if ok else 1


def cmd_decompose(config: RunConfig) -> int:
    L = _algebra(config)
    T = triangular(L)
    checks = triangular_checks(L, T)
    cert = isotropy_certificate(L, T.isotropic_subspace, T)
    g1, g2 = T.derived
    dump = {
        "algebra": L.name,
        "n": _vectors(L, T.n_basis),
        "h": _vectors(L, T.h_basis),
        "n_minus": _vectors(L, T.n_minus_basis),
        "h_plus": _vectors(L, T.h_plus),
        "h_plus_certified": T.h_plus_certified,
        "m_triv": {str(w): _vectors(L, vs) for w, vs in T.isotypic.trivial_part.items()},
        "lambda_plus": [str(w) for w in T.isotypic.lambda_plus],
        "components": [
            {"highest_weight": str(c.highest_weight), "dim": c.module_dim, "multiplicity": c.multiplicity}
            for c in T.isotypic.components
        ],
        "g1": _vectors(L, g1),
        "g2": _vectors(L, g2),
        "checks": checks,
        "certificate": cert.to_dict(),
    }
    if config.output == "json":
        print(json.dumps(dump))
    else:
        print(f"{L.name}: dim {L.dim}, sdim {L.sdim}")
        for key in ("n", "h", "n_minus", "h_plus", "g1", "g2"):
            print(f"  {key:8} = {{{', '.join(dump[key])}}}")
        print("  M_triv   = " + (", ".join(f"M({w}) = {{{', '.join(vs)}}}"
                                            for w, vs in dump["m_triv"].items()) or "0"))
        for c in dump["components"]:
            print(f"  V({c['highest_weight']}): dim {c['dim']} x {c['multiplicity']}")
        print(f"  h+ + n   : {cert.note}")
        for name, ok in checks.items():
            print(f"  {'PASS' if ok else 'FAIL':4}  {name}")
    return 0 if all(checks.values()) else 1


def cmd_sweep(config: RunConfig) -> int:
    return 0 if run_batch.run_from_config(config) else 1


COMMAND_HANDLERS = {
    "catalog": cmd_catalog,
    "validate": cmd_validate,
    "verify": cmd_verify,
    "decompose": cmd_decompose,
    "sweep": cmd_sweep,
}


def main(argv=None) -> int:
    try:
        config = build_config_from_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    logging.basicConfig(
        level=config.log_level_value(),
        format="[%(name)s] %(levelname)s %(message)s",
    )
    try:
        return COMMAND_HANDLERS[config.command](config)
    except (SpecParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AlgebraError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
