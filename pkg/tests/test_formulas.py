from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cli.catalog import catalog_entries, parse_algebra_spec
from exact.errors import SpecParseError
from formulas.kac import even_vsf_labels, killing_root_datum, verify_even_vsf
from formulas.report import VerificationReport
from formulas.verify import (
    scale_invariance_check,
    verify_cg_orthogonality,
    verify_isotropy_remark,
    verify_strange,
    verify_sumsixixi,
    verify_very_strange,
)
from gradings.torus import TorusElement, grading_from_torus, sample_tori, trivial_grading
from superalgebra.constructors import build_glmn, build_ospm2n, build_slmn

SMALL = [
    lambda: build_glmn(1, 1),
    lambda: build_slmn(2, 1),
    lambda: build_ospm2n(1, 1),
    lambda: build_slmn(3, 0),
    lambda: build_glmn(2, 1),
]


def _graded(L, text):
    return grading_from_torus(L, TorusElement.parse(text))


class TestStrange:
    @pytest.mark.parametrize("name", ["gl11", "gl21", "sl21", "osp12", "c02", "sl2_sum_split"])
    def test_holds(self, request, name):
        assert verify_strange(request.getfixturevalue(name)).passed

    def test_gl11_both_sides_vanish(self, gl11):
        report = verify_strange(gl11)
        assert report.lhs == report.rhs == 0

    @pytest.mark.parametrize("name, value", [("sl2", Fraction(1, 8)), ("sl3", Fraction(1, 3))])
    def test_killing_form_values(self, request, name, value):
        report = verify_strange(request.getfixturevalue(name), killing=True)
        assert report.lhs == report.rhs == value
        assert report.context["form"] == "killing"

    @pytest.mark.parametrize("functional", [[1, 0, 0], [0, -1, 2], [-3, 1, 1]])
    def test_any_positive_system(self, gl21, functional):
        assert verify_strange(gl21, functional=functional).passed


class TestVeryStrange:
    def test_sl2_order_three(self, sl2):
        report = verify_very_strange(sl2, _graded(sl2, "1/6"))
        assert report.lhs == report.rhs == Fraction(1, 18)
        assert report.order == 3
        assert report.context["z"] == "1/9"

    def test_sl2_order_two(self, sl2):
        report = verify_very_strange(sl2, _graded(sl2, "1/4"))
        assert report.lhs == report.rhs == 0
        assert report.context["z"] == "1/8"

    def test_gl11_odd_grading(self, gl11):
        report = verify_very_strange(gl11, _graded(gl11, "1/2,0"))
        assert report.passed
        assert report.rhs == 0
        assert report.context["z"] == "-1/8"

    def test_decomposable_screen_is_reported(self, gl21):
        report = verify_very_strange(gl21, trivial_grading(gl21))
        assert report.passed
        assert report.context["screen"]["violated"] == ["single_casimir_eigenvalue"]

    @pytest.mark.parametrize("name", ["sl2", "gl11", "sl21", "osp12"])
    def test_trivial_grading_is_the_strange_formula(self, request, name):
        L = request.getfixturevalue(name)
        vs = verify_very_strange(L, trivial_grading(L))
        s = verify_strange(L)
        assert (vs.lhs, vs.rhs) == (s.lhs, s.rhs)

    @settings(max_examples=20, deadline=None)
    @given(which=st.integers(0, len(SMALL) - 1), seed=st.integers(0, 10_000))
    def test_sampled_tori(self, which, seed):
        L = SMALL[which]()
        for t in sample_tori(L, 2, seed):
            G = grading_from_torus(L, t)
            assert verify_very_strange(L, G).passed
            assert verify_sumsixixi(L, G).passed
            assert verify_cg_orthogonality(L, G).passed


class TestCompanions:
    def test_sum_s_i_is_a_vector_identity(self, sl2):
        report = verify_sumsixixi(sl2, _graded(sl2, "1/6"))
        assert isinstance(report.lhs, tuple) and len(report.lhs) == 3
        assert report.passed

    @pytest.mark.parametrize("m, n", [(1, 1), (2, 2)])
    def test_cg_orthogonality_glnn(self, m, n):
        L = build_glmn(m, n)
        for t in sample_tori(L, 4, seed=11):
            report = verify_cg_orthogonality(L, grading_from_torus(L, t))
            assert report.passed
            assert report.context["cg_zero"] is False

    def test_isotropy_remark_gl11(self, gl11):
        report = verify_isotropy_remark(gl11, _graded(gl11, "1/3,1/6"))
        assert report is not None and report.passed
        assert report.context["center_dim"] == 1

    @pytest.mark.parametrize("name", ["sl2", "gl21", "osp12"])
    def test_isotropy_remark_does_not_apply(self, request, name):
        L = request.getfixturevalue(name)
        assert verify_isotropy_remark(L, trivial_grading(L)) is None


class TestScaleInvariance:
    @pytest.mark.parametrize("c", [3, -1, Fraction(7, 2)])
    def test_strange(self, osp12, c):
        assert scale_invariance_check(osp12, c)

    @pytest.mark.parametrize("c", [3, -1, Fraction(7, 2)])
    def test_very_strange(self, sl2, c):
        assert scale_invariance_check(sl2, c, _graded(sl2, "1/6"))


class TestEvenVeryStrange:
    @pytest.mark.parametrize("labels, value", [
        ((1, 1), Fraction(0)),
        ((0, 1), Fraction(1, 8)),
        ((1, 0), Fraction(1, 8)),
    ])
    def test_sl2(self, sl2, labels, value):
        report = verify_even_vsf(sl2, labels)
        assert report.lhs == report.rhs == value

    def test_sl3_principal(self, sl3):
        report = verify_even_vsf(sl3, (1, 1, 1))
        assert report.order == 3
        assert report.lhs == report.rhs == 0
        assert report.context["dims"] == {"0": 2, "1/3": 3, "2/3": 3}

    def test_declared_order_must_match(self, sl2):
        with pytest.raises(ValueError):
            verify_even_vsf(sl2, (1, 1), m=3)

    def test_rejects_superalgebras(self, gl11):
        with pytest.raises(ValueError):
            verify_even_vsf(gl11, (1, 1))

    def test_bad_labels(self, sl2):
        with pytest.raises(SpecParseError):
            verify_even_vsf(sl2, (1, 1, 1))

    def test_label_enumeration(self, sl2):
        _, rd = killing_root_datum(sl2)
        assert sorted(even_vsf_labels(rd, 2)) == [(0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]

    @pytest.mark.slow
    @pytest.mark.parametrize("build, args", [
        (build_slmn, (3, 0)),
        (build_slmn, (4, 0)),
        (build_ospm2n, (5, 0)),
        (build_ospm2n, (0, 2)),
    ])
    def test_exhaustive(self, build, args):
        L = build(*args)
        _, rd = killing_root_datum(L)
        for labels in even_vsf_labels(rd, 4):
            assert verify_even_vsf(L, labels).passed, labels


class TestReport:
    def test_json_round_trip(self, sl2):
        report = verify_very_strange(sl2, _graded(sl2, "1/6"))
        assert VerificationReport.from_json(report.to_json()) == report

    def test_vector_sides_round_trip(self, sl2):
        report = verify_sumsixixi(sl2, _graded(sl2, "1/6"))
        again = VerificationReport.from_json(report.to_json())
        assert again.lhs == report.lhs and again.passed

    def test_pass_flag_must_agree(self):
        record = {"formula": "strange", "algebra": "x", "lhs": "1/2", "rhs": "1/3", "pass": True}
        with pytest.raises(SpecParseError):
            VerificationReport.from_dict(record)

    def test_rationals_are_strings(self):
        d = VerificationReport("strange", "x", Fraction(1, 8), Fraction(1, 8)).to_dict()
        assert d["lhs"] == "1/8" and d["pass"] is True
        assert d["m"] is None and d["torus"] is None


@pytest.mark.slow
class TestCatalogAcceptance:
    @pytest.mark.parametrize("spec", catalog_entries())
    def test_every_algebra_with_twenty_tori(self, spec):
        L = parse_algebra_spec(spec)
        assert verify_strange(L).passed
        for t in sample_tori(L, 20, seed=1):
            G = grading_from_torus(L, t)
            assert verify_very_strange(L, G).passed, str(t)
            assert verify_sumsixixi(L, G).passed, str(t)
            assert verify_cg_orthogonality(L, G).passed, str(t)
