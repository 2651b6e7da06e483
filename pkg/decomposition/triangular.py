"""
Triangular decomposition g = n_- + h + n with a maximal isotropic h+ in h.

    n   = positive root spaces + M+   (M+ / M- polarize M(0), then the rest of the odd zero-weight space)
    h   = even zero-weight space
    n_- = negative root spaces + M-

h+ is seeded by the image of the nilpotent Casimir part (or a caller-supplied
isotropic seed) and extended by hyperbolic pairs over Q.

Usage::

    T = triangular(build_glmn(1, 1))
    print(len(T.n_basis), len(T.h_basis), T.h_plus_certified)
"""

from __future__ import annotations

import dataclasses
import logging
from fractions import Fraction
from typing import Sequence

from exact.errors import IsotropicSeedInvalid, SingularMatrix
from exact.matrix import EchelonSpan, Vector, intersect_spans, inverse, kernel, unit_vector
from structure.casimir import nilpotent_part
from structure.roots import RootDatum, Weight, choose_positive, root_decomposition, simple_roots
from superalgebra.algebra import LieSuperalgebra, center, to_dense, to_sparse
from decomposition.isotypic import IsotypicDecomposition, derived_towers, isotypic_g1
from decomposition.isotropy import isotropic_extension, polarize

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class GeneratorPair:
    kind: str          # "root" or "triv"
    weight: Weight
    e: Vector
    f: Vector
    h: Vector


@dataclasses.dataclass(frozen=True, eq=False)
class TriangularData:
    root_datum: RootDatum
    isotypic: IsotypicDecomposition
    derived: tuple[tuple[Vector, ...], tuple[Vector, ...]]
    n_basis: tuple[Vector, ...]
    h_basis: tuple[Vector, ...]
    n_minus_basis: tuple[Vector, ...]
    odd_zero_plus: tuple[Vector, ...]
    odd_zero_minus: tuple[Vector, ...]
    h_plus: tuple[Vector, ...]
    h_plus_certified: bool
    generator_pairs: tuple[GeneratorPair, ...]

    @property
    def isotropic_subspace(self) -> tuple[Vector, ...]:
        """n + h+, the candidate maximal isotropic subspace."""
        return self.n_basis + self.h_plus


# ---------------------------------------------------------------------------
# h+ seed
# ---------------------------------------------------------------------------

def casimir_seed(L: LieSuperalgebra, h_basis: Sequence[Vector]) -> tuple[Vector, ...]:
    """Image of the nilpotent part of Omega, if it is an isotropic subspace of h."""
    c = nilpotent_part(L)
    if c.is_zero():
        return ()
    image = EchelonSpan(L.dim)
    for k in range(L.dim):
        col = c.column(k)
        if any(col):
            image.add(col)
    h_span = EchelonSpan(L.dim, h_basis)
    seed = image.basis
    if not all(h_span.contains(v) for v in seed):
        logger.warning("%s: image of C_g leaves h; starting h+ from zero", L.name)
        return ()
    if not L.gram(seed, seed).is_zero():
        logger.warning("%s: image of C_g is not isotropic; starting h+ from zero", L.name)
        return ()
    return seed


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def _dual_in(L: LieSuperalgebra, E: Sequence[Vector], F: Sequence[Vector]) -> tuple[Vector, ...] | None:
    """Basis f_k of span(F) with (e_i, f_k) = delta_ik, or None if the pairing is singular."""
    if len(E) != len(F):
        return None
    g = L.gram(E, F)
    try:
        x = inverse(g).T
    except SingularMatrix:
        return None
    out = []
    for row in x.to_rows():
        v = [Fraction(0)] * L.dim
        for c, f in zip(row, F):
            if c:
                for i, val in enumerate(f):
                    if val:
                        v[i] += c * val
        out.append(tuple(v))
    return tuple(out)


def _odd_part_in_root(L: LieSuperalgebra, g2_odd: Sequence[Vector], indices: Sequence[int]) -> list[Vector]:
    span = EchelonSpan(L.dim)
    idx = [i for i in indices if L.parity[i] == 1]
    for v in g2_odd:
        proj = [Fraction(0)] * L.dim
        for i in idx:
            proj[i] = v[i]
        if any(proj):
            span.add(proj)
    return list(span.basis)


def generator_pairs(L: LieSuperalgebra, rd: RootDatum, iso: IsotypicDecomposition,
                    g2: Sequence[Vector]) -> tuple[GeneratorPair, ...]:
    g2_odd = [v for v in g2 if L.parity_of(v) == 1]
    core: dict[Weight, list[Vector]] = {}
    for r in rd.roots:
        vecs = [unit_vector(L.dim, i) for i in r.indices if L.parity[i] == 0]
        vecs += _odd_part_in_root(L, g2_odd, r.indices)
        if vecs:
            core[r.weight] = vecs

    pairs = []
    for alpha in simple_roots(rd, include=lambda r: r.weight in core):
        E = core[alpha.weight]
        F = _dual_in(L, E, core.get(-alpha.weight, []))
        if F is None:
            logger.warning("%s: root spaces for %s and its negative do not pair", L.name, alpha.weight)
            continue
        h = rd.h_vector(alpha.weight)
        pairs += [GeneratorPair("root", alpha.weight, e, f, h) for e, f in zip(E, F)]

    for lam in iso.lambda_plus:
        E = list(iso.m_of(lam))
        F = _dual_in(L, E, iso.m_of(-lam))
        if F is None:
            logger.warning("%s: M(%s) and M(-%s) do not pair", L.name, lam, lam)
            continue
        h = rd.h_vector(lam)
        pairs += [GeneratorPair("triv", lam, e, f, h) for e, f in zip(E, F)]

    zero = Weight.zero(rd.rank)
    if iso.m_of(zero):
        plus, minus = polarize(L, iso.m_of(zero))
        h = tuple(Fraction(0) for _ in range(L.dim))
        pairs += [GeneratorPair("triv", zero, e, f, h) for e, f in zip(plus, minus)]
    return tuple(pairs)


def generator_relations(L: LieSuperalgebra, T: TriangularData) -> list[str]:
    """Violations of [e_i, f_j] = delta_ij h_i over all generator pairs."""
    problems = []
    for a, p in enumerate(T.generator_pairs):
        se = to_sparse(p.e)
        for b, q in enumerate(T.generator_pairs):
            got = L.bracket_sparse(se, to_sparse(q.f))
            want = to_sparse(p.h) if a == b else {}
            if got != want:
                problems.append(f"[e_{a} ({p.kind} {p.weight}), f_{b} ({q.kind} {q.weight})]")
    return problems


# ---------------------------------------------------------------------------
# Decomposition
# ---------------------------------------------------------------------------

def polarize_odd_zero(L: LieSuperalgebra, odd_zero: Sequence[Vector],
                      m_zero: Sequence[Vector]) -> tuple[tuple[Vector, ...], tuple[Vector, ...]]:
    """M+ / M- for the odd zero-weight space: M(0) first, then its orthogonal complement.

    The complement holds zero-weight vectors of nontrivial g_0-modules; it is
    empty for every catalog algebra.
    """
    plus, minus = polarize(L, m_zero)
    if len(m_zero) == len(odd_zero):
        return plus, minus
    if m_zero:
        coeffs = kernel(L.gram(odd_zero, m_zero).T)
        rest = [tuple(sum((c * u[i] for c, u in zip(cs, odd_zero)), Fraction(0)) for i in range(L.dim))
                for cs in coeffs]
    else:
        rest = list(odd_zero)
    more_plus, more_minus = polarize(L, rest)
    return plus + more_plus, minus + more_minus


def triangular(
    L: LieSuperalgebra,
    h_plus_seed: Sequence[Vector] | None = None,
    functional: Sequence | None = None,
) -> TriangularData:
    rd = choose_positive(root_decomposition(L), functional)
    iso = isotypic_g1(L, rd)
    g1, g2 = derived_towers(L)
    n = L.dim

    h_idx = [i for i in rd.zero_space if L.parity[i] == 0]
    odd_zero = [unit_vector(n, i) for i in rd.zero_space if L.parity[i] == 1]
    h_basis = tuple(unit_vector(n, i) for i in h_idx)
    plus, minus = polarize_odd_zero(L, odd_zero, iso.m_of(Weight.zero(rd.rank)))

    pos = [i for r in rd.positive_roots() for i in r.indices]
    neg = [i for r in rd.negative_roots() for i in r.indices]
    n_basis = tuple(unit_vector(n, i) for i in sorted(pos)) + plus
    n_minus = tuple(unit_vector(n, i) for i in sorted(neg)) + minus

    if h_plus_seed is None:
        seed = casimir_seed(L, h_basis)
    else:
        seed = tuple(h_plus_seed)
        h_span = EchelonSpan(n, h_basis)
        if not all(h_span.contains(v) for v in seed):
            raise IsotropicSeedInvalid(f"{L.name}: seed for h+ is not inside h")
    h_plus, certified = isotropic_extension(L, seed, h_basis)

    pairs = generator_pairs(L, rd, iso, g2)
    logger.debug("%s: dim n=%d h=%d n_-=%d h+=%d (certified=%s)",
                 L.name, len(n_basis), len(h_basis), len(n_minus), len(h_plus), certified)
    return TriangularData(
        root_datum=rd,
        isotypic=iso,
        derived=(g1, g2),
        n_basis=n_basis,
        h_basis=h_basis,
        n_minus_basis=n_minus,
        odd_zero_plus=plus,
        odd_zero_minus=minus,
        h_plus=h_plus,
        h_plus_certified=certified,
        generator_pairs=pairs,
    )


def _closed(L: LieSuperalgebra, basis: Sequence[Vector]) -> bool:
    span = EchelonSpan(L.dim, basis)
    sparse = [to_sparse(v) for v in basis]
    for a, u in enumerate(sparse):
        for v in sparse[a:]:
            w = L.bracket_sparse(u, v)
            if w and not span.contains(to_dense(w, L.dim)):
                return False
    return True


def radical_check(L: LieSuperalgebra, g2: Sequence[Vector] | None = None) -> bool:
    """The radical of the form on g^(2) is z(g) cap g^(2)."""
    if g2 is None:
        g2 = derived_towers(L)[1]
    if not g2:
        return True
    radical = EchelonSpan(L.dim)
    for coeffs in kernel(L.gram(g2, g2)):
        v = [Fraction(0)] * L.dim
        for c, u in zip(coeffs, g2):
            if c:
                for i, x in enumerate(u):
                    v[i] += c * x
        radical.add(v)
    central = intersect_spans(L.dim, center(L), g2)
    ok = radical.rank == len(central) and all(radical.contains(v) for v in central)
    if not ok:
        logger.warning("%s: radical of the form on g^(2) has dim %d, z(g) cap g^(2) has dim %d",
                       L.name, radical.rank, len(central))
    return ok


def h_prime(L: LieSuperalgebra, T: TriangularData) -> tuple[Vector, ...]:
    """h' = h cap [g, g]."""
    return intersect_spans(L.dim, T.h_basis, T.derived[0])


def unid_violations(L: LieSuperalgebra, T: TriangularData) -> list[str]:
    """One-dimensional V(lambda) in g_1 must have lambda(h') = 0."""
    rd = T.root_datum
    hp = h_prime(L, T)
    problems = []
    for comp in T.isotypic.components:
        if not comp.is_trivial:
            continue
        for v in hp:
            value = rd.evaluate(comp.highest_weight, v)
            if value:
                problems.append(f"{comp.highest_weight} takes {value} on h'")
                break
    return problems


def triangular_checks(L: LieSuperalgebra, T: TriangularData) -> dict[str, bool]:
    """The structural properties the decomposition is supposed to have."""
    all_vectors = T.n_basis + T.h_basis + T.n_minus_basis
    g_n_minus = L.gram(T.n_basis, T.n_minus_basis)
    try:
        inverse(g_n_minus)
        pairing = True
    except SingularMatrix:
        pairing = False
    m_triv = [to_sparse(v) for v in T.isotypic.m_triv]
    g2_odd = [to_sparse(v) for v in T.derived[1] if L.parity_of(v) == 1]
    triv_commutes = all(not L.bracket_sparse(a, b) for a in m_triv for b in g2_odd)
    return {
        "direct-sum": len(all_vectors) == L.dim and EchelonSpan(L.dim, all_vectors).rank == L.dim,
        "n-subalgebra": _closed(L, T.n_basis),
        "n-minus-subalgebra": _closed(L, T.n_minus_basis),
        "n-isotropic": L.gram(T.n_basis, T.n_basis).is_zero(),
        "n-minus-isotropic": L.gram(T.n_minus_basis, T.n_minus_basis).is_zero(),
        "h-orthogonal-to-n": L.gram(T.h_basis, T.n_basis + T.n_minus_basis).is_zero(),
        "n-pairs-n-minus": pairing,
        "h-plus-isotropic": L.gram(T.h_plus, T.h_plus).is_zero(),
        "triv-commutes-with-g2": triv_commutes,
        "generator-relations": not generator_relations(L, T),
        "unid": not unid_violations(L, T),
        "radical": radical_check(L, T.derived[1]),
    }
