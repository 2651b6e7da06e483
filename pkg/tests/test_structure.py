from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exact.errors import DecomposableAlgebra, DegenerateForm, NotWeightBasis
from exact.matrix import QMatrix
from structure.casimir import (
    casimir,
    casimir_blocks,
    casimir_commutation_scan,
    casimir_symmetry_check,
    dual_coxeter_check,
    nilpotent_part,
)
from structure.roots import (
    Weight,
    basis_weights,
    choose_positive,
    highest_root,
    marks,
    positive_root_datum,
    root_decomposition,
    simple_roots,
)
from superalgebra.algebra import LieSuperalgebra
from superalgebra.constructors import build_glmn, build_ospm2n, build_slmn


class TestRoots:
    def test_sl2_roots(self, sl2):
        rd = positive_root_datum(sl2)
        assert rd.rank == 1
        assert {r.weight for r in rd.roots} == {Weight.of([2]), Weight.of([-2])}
        assert rd.rho == Weight.of([1])
        # trace form: (H, H) = 2, so (alpha, alpha) = 4 / 2
        assert rd.norm2(Weight.of([2])) == 2

    def test_gl11_odd_root_is_isotropic(self, gl11):
        rd = positive_root_datum(gl11)
        delta = rd.weights[gl11.index("E12")]
        assert delta == Weight.of([1, -1])
        assert rd.norm2(delta) == 0
        assert rd.is_positive(delta)
        assert rd.rho == Weight.of([Fraction(-1, 2), Fraction(1, 2)])

    def test_root_sdims(self, gl21):
        rd = positive_root_datum(gl21)
        assert sum(r.sdim for r in rd.roots) + len(rd.zero_space) == gl21.sdim

    def test_h_vector_represents_weight(self, sl21):
        rd = positive_root_datum(sl21)
        for r in rd.roots:
            h = rd.h_vector(r.weight)
            for s in rd.roots:
                assert rd.evaluate(s.weight, h) == rd.pairing(s.weight, r.weight)

    def test_non_weight_basis(self):
        # sl(2) with the Cartan element replaced by e + h: [e + h, f] is not a multiple of f.
        sl2 = build_slmn(2, 0)
        bad = LieSuperalgebra(
            name="bad",
            labels=("X", "E12", "E21"),
            parity=(0, 0, 0),
            structure={(0, 1): {1: 2}, (0, 2): {2: -2, 0: 1, 1: -1}, (1, 2): {0: 1}},
            form=sl2.form,
            cartan=(0,),
        )
        with pytest.raises(NotWeightBasis):
            basis_weights(bad)

    @pytest.mark.parametrize("name", ["sl3", "gl21", "sl21", "osp12"])
    def test_root_spaces_pair_only_with_opposite(self, request, name):
        L = request.getfixturevalue(name)
        rd = root_decomposition(L)
        spaces = [(r.weight, r.indices) for r in rd.roots]
        spaces.append((Weight.zero(rd.rank), rd.zero_space))
        for a, ia in spaces:
            for b, ib in spaces:
                if (a + b).is_zero():
                    continue
                assert all(L.form[i, j] == 0 for i in ia for j in ib), (str(a), str(b))

    def test_degenerate_cartan_form(self, gl11):
        zero_on_h = QMatrix.from_rows([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
        with pytest.raises(DegenerateForm):
            root_decomposition(gl11.with_form(zero_on_h, name="gl(1|1)[h-null]"))


class TestSimpleRoots:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_sln_marks(self, n):
        rd = positive_root_datum(build_slmn(n, 0))
        assert len(simple_roots(rd)) == n - 1
        assert marks(rd) == (1,) * n

    @pytest.mark.parametrize("m, n", [(5, 0), (0, 2)])
    def test_rank_two_marks(self, m, n):
        rd = positive_root_datum(build_ospm2n(m, n))
        a = marks(rd)
        assert a[0] == 1
        assert sorted(a[1:]) == [1, 2]

    def test_highest_root_sl3(self, sl3):
        rd = positive_root_datum(sl3)
        simple = simple_roots(rd)
        theta = highest_root(rd, simple).weight
        assert theta == simple[0].weight + simple[1].weight


class TestCasimir:
    def test_sl2_trace_form(self, sl2):
        assert casimir(sl2).g_value == 2

    def test_sl2_killing_form(self, sl2):
        from superalgebra.algebra import killing_form

        assert casimir(sl2.with_form(killing_form(sl2), name="sl(2)[killing]")).g_value == Fraction(1, 2)

    def test_gl11_has_nilpotent_part(self, gl11):
        data = casimir(gl11)
        assert data.g_value == 0
        assert data.nilpotent
        assert data.c_g.power(2).is_zero()

    @pytest.mark.parametrize("m, n", [(1, 1), (2, 2)])
    def test_glnn_casimir_is_nilpotent(self, m, n):
        data = casimir(build_glmn(m, n))
        assert data.g_value == 0 and data.nilpotent

    @pytest.mark.parametrize("build, args", [
        (build_slmn, (2, 1)),
        (build_slmn, (3, 1)),
        (build_ospm2n, (1, 1)),
        (build_ospm2n, (3, 1)),
    ])
    def test_simple_algebras_have_semisimple_casimir(self, build, args):
        data = casimir(build(*args))
        assert data.g_value != 0
        assert not data.nilpotent

    @pytest.mark.parametrize("build, args", [
        (build_glmn, (1, 1)),
        (build_glmn, (2, 1)),
        (build_slmn, (2, 1)),
        (build_ospm2n, (1, 1)),
    ])
    def test_symmetry_and_commutation(self, build, args):
        L = build(*args)
        assert casimir_symmetry_check(L)
        assert casimir_commutation_scan(L) == []

    def test_non_invariant_form_breaks_symmetry(self):
        gl2 = build_glmn(2, 0)
        rows = [list(r) for r in gl2.form.to_rows()]
        e11 = gl2.index("E11")
        rows[e11][e11] += 1
        bumped = gl2.with_form(QMatrix.from_rows(rows), name="gl(2)[bumped]")
        assert not casimir_symmetry_check(bumped)

    def test_gl21_is_decomposable(self, gl21):
        blocks = casimir_blocks(gl21)
        assert len(blocks) == 2
        assert sorted(b.dim for b in blocks) == [1, 8]
        with pytest.raises(DecomposableAlgebra):
            casimir(gl21)

    def test_split_sum_is_decomposable(self, sl2_sum_split):
        assert [b.eigenvalue for b in casimir_blocks(sl2_sum_split)] == [4, 2]
        with pytest.raises(DecomposableAlgebra):
            casimir(sl2_sum_split)
        assert nilpotent_part(sl2_sum_split).is_zero()

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_dual_coxeter_number_sln(self, n):
        check = dual_coxeter_check(build_slmn(n, 0))
        assert check.passed
        assert check.theta_norm2 == 2
        assert check.normalized == n


class TestPositivity:
    @pytest.mark.parametrize("build, args, value", [
        (build_glmn, (2, 1), Fraction(0)),
        (build_ospm2n, (1, 1), Fraction(-1, 4)),
        (build_slmn, (3, 0), Fraction(2)),
        (build_ospm2n, (3, 1), None),
    ])
    @settings(max_examples=10, deadline=None)
    @given(data=st.data())
    def test_rho_norm_independent_of_positive_system(self, build, args, value, data):
        L = build(*args)
        rd = root_decomposition(L)
        functional = data.draw(st.lists(st.integers(-5, 5), min_size=rd.rank, max_size=rd.rank))
        expected = positive_root_datum(L)
        if value is not None:
            assert expected.norm2(expected.rho) == value
        chosen = choose_positive(rd, functional)
        assert chosen.norm2(chosen.rho) == expected.norm2(expected.rho)

    def test_functional_changes_positive_system(self, gl11):
        rd = root_decomposition(gl11)
        a = choose_positive(rd, [1, 0])
        b = choose_positive(rd, [-1, 0])
        assert a.positive != b.positive
        assert a.rho == -b.rho
