from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exact.errors import DegenerateForm, SpecParseError
from exact.matrix import QMatrix, unit_vector
from structure.casimir import casimir_blocks
from superalgebra.algebra import LieSuperalgebra, center, direct_sum, dual_basis, killing_form
from superalgebra.constructors import build_glmn, build_odd_symplectic, build_ospm2n, build_slmn
from superalgebra.serialization import from_json, to_dict, to_json
from superalgebra.validation import AXIOMS, validate


EXPANSION_ALGEBRAS = [
    lambda: build_glmn(2, 1),
    lambda: build_slmn(3, 0),
    lambda: build_ospm2n(1, 1),
    lambda: build_ospm2n(3, 1),
    lambda: build_odd_symplectic(2),
]


def antisymmetric_so(m: int) -> LieSuperalgebra:
    """so(m) on A_ab = E_ab - E_ba (a < b) with the form 1/2 tr(XY) = -delta."""
    pairs = [(a, b) for a in range(m) for b in range(a + 1, m)]
    index = {p: k for k, p in enumerate(pairs)}

    def add(out, coeff, x, y):
        if x == y:
            return
        k, sign = (index[(x, y)], 1) if x < y else (index[(y, x)], -1)
        out[k] = out.get(k, 0) + sign * coeff

    structure = {}
    for i, (a, b) in enumerate(pairs):
        for j in range(i + 1, len(pairs)):
            c, d = pairs[j]
            out = {}
            # [A_ab, A_cd] = d_bc A_ad - d_ac A_bd - d_bd A_ac + d_ad A_bc
            if b == c:
                add(out, 1, a, d)
            if a == c:
                add(out, -1, b, d)
            if b == d:
                add(out, -1, a, c)
            if a == d:
                add(out, 1, b, c)
            structure[(i, j)] = out
    d = len(pairs)
    return LieSuperalgebra(
        name=f"so({m})[antisymmetric]",
        labels=tuple(f"A{a + 1}{b + 1}" for a, b in pairs),
        parity=(0,) * d,
        structure=structure,
        form=QMatrix.identity(d) * -1,
        cartan=(),
    )


@pytest.mark.parametrize("build, args, dim, sdim", [
    (build_glmn, (1, 1), 4, 0),
    (build_glmn, (2, 1), 9, 1),
    (build_slmn, (2, 0), 3, 3),
    (build_slmn, (2, 1), 8, 0),
    (build_ospm2n, (1, 1), 5, 1),
    (build_ospm2n, (3, 1), 12, 0),
    (build_odd_symplectic, (1,), 2, -2),
])
def test_constructors_satisfy_axioms(build, args, dim, sdim):
    L = build(*args)
    assert (L.dim, L.sdim) == (dim, sdim)
    report = validate(L)
    assert report.passed, report.failures()
    assert [c.name for c in report.checks] == list(AXIOMS)


class TestConstructors:
    def test_glmn_labels(self, gl11):
        assert gl11.labels == ("E11", "E22", "E12", "E21")
        assert gl11.cartan == (0, 1)
        assert gl11.parity == (0, 0, 1, 1)

    def test_odd_bracket_gl11(self, gl11):
        e, f = gl11.index("E12"), gl11.index("E21")
        assert dict(gl11.bracket_basis(e, f)) == {0: 1, 1: 1}
        assert dict(gl11.bracket_basis(f, e)) == {0: 1, 1: 1}
        assert not gl11.bracket_basis(e, e)

    def test_slnn_is_degenerate(self):
        with pytest.raises(DegenerateForm):
            build_slmn(2, 2)

    @pytest.mark.parametrize("build, args", [
        (build_glmn, (0, 0)),
        (build_slmn, (1, 0)),
        (build_ospm2n, (1, 0)),
        (build_odd_symplectic, (0,)),
    ])
    def test_invalid_parameters(self, build, args):
        with pytest.raises(ValueError):
            build(*args)

    def test_odd_symplectic_form(self, c02):
        assert c02.name == "C(0|2)"
        assert c02.form[0, 1] == 1 and c02.form[1, 0] == -1
        assert not c02.structure


class TestOrthogonalRealizations:
    @pytest.mark.parametrize("m", [3, 4])
    def test_split_and_antisymmetric_so_agree(self, m):
        split = build_ospm2n(m, 0)
        anti = antisymmetric_so(m)
        assert validate(anti).passed
        assert split.dim == anti.dim == m * (m - 1) // 2
        # Killing form of so(m) is (m - 2) tr(XY) = 2(m - 2) times the built-in form
        for L in (split, anti):
            assert killing_form(L) == L.form * (2 * (m - 2))
            assert [b.eigenvalue for b in casimir_blocks(L)] == [2 * (m - 2)]


class TestForms:
    def test_dual_basis_gl11(self, gl11):
        duals = dual_basis(gl11).vectors
        e, f = gl11.index("E12"), gl11.index("E21")
        assert duals[e] == unit_vector(4, f)
        assert duals[f] == tuple(-x for x in unit_vector(4, e))

    def test_dual_basis_pairs_to_delta(self, osp12):
        duals = dual_basis(osp12).vectors
        for i in range(osp12.dim):
            for j in range(osp12.dim):
                assert osp12.pair(unit_vector(osp12.dim, i), duals[j]) == (1 if i == j else 0)

    @settings(max_examples=20, deadline=None)
    @given(which=st.integers(0, len(EXPANSION_ALGEBRAS) - 1), data=st.data())
    def test_dual_basis_expansion(self, which, data):
        # a = sum_i (x_i, a) x^i
        L = EXPANSION_ALGEBRAS[which]()
        a = data.draw(st.lists(st.fractions(-5, 5, max_denominator=6), min_size=L.dim, max_size=L.dim))
        duals = dual_basis(L).vectors
        total = [Fraction(0)] * L.dim
        for i in range(L.dim):
            c = L.pair(unit_vector(L.dim, i), a)
            total = [t + c * x for t, x in zip(total, duals[i])]
        assert tuple(total) == tuple(a)

    def test_killing_form_sl2(self, sl2):
        k = killing_form(sl2)
        h = sl2.index("H1")
        assert k[h, h] == 8
        # Killing form is 4 times the trace form on sl(2).
        assert k == sl2.form * 4

    def test_center(self, gl11, sl2):
        (z,) = center(build_glmn(2, 0))
        assert z[0] == z[1] != 0 and not any(z[2:])
        assert len(center(gl11)) == 1
        assert center(sl2) == ()


class TestPerturbation:
    def test_broken_structure_constant_fails_jacobi(self, gl11):
        e, f = gl11.index("E12"), gl11.index("E21")
        broken = gl11.with_structure_constant(e, f, gl11.index("E11"), 2)
        assert broken.bracket_basis(e, f)[0] == 2
        report = validate(broken)
        assert not report["super-jacobi"].passed
        assert report["super-jacobi"].witness

    def test_rescaled_form(self, sl2):
        scaled = sl2.rescaled(Fraction(7, 2))
        assert scaled.form == sl2.form * Fraction(7, 2)
        assert validate(scaled).passed
        with pytest.raises(ValueError):
            sl2.rescaled(0)


class TestDirectSum:
    def test_direct_sum_is_orthogonal(self, sl2, gl11):
        L = direct_sum(sl2, gl11)
        assert L.dim == 7 and L.sdim == 3
        assert L.labels[3] == "A2.E11"
        assert L.cartan == (0, 3, 4)
        assert L.form[0, 3] == 0
        assert validate(L).passed


class TestSerialization:
    def test_json_round_trip(self, gl21):
        again = from_json(to_json(gl21))
        assert to_dict(again) == to_dict(gl21)
        assert again.form == gl21.form

    def test_rationals_written_as_strings(self, osp12):
        d = to_dict(osp12)
        assert all(isinstance(x, str) for row in d["form"] for x in row)
        assert all(rec["i"] <= rec["j"] for rec in d["structure"])

    @pytest.mark.parametrize("text", ["not json", '{"name": "x"}', '{"format": 99}'])
    def test_malformed_input(self, text):
        with pytest.raises(SpecParseError):
            from_json(text)
