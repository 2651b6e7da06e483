from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exact.errors import SpecParseError
from exact.rational import PHASE_ZERO, Phase
from gradings.sigma import (
    indecomposability_screen,
    rho_pairing_violations,
    sdim_accounting,
    sigma_weyl_data,
    z_from_sdims,
)
from gradings.torus import (
    TorusElement,
    grading_check,
    grading_from_torus,
    sample_tori,
    torus_from_labels,
    trivial_grading,
    zero_phase_indices,
)
from structure.roots import Weight, positive_root_datum
from superalgebra.algebra import fixed_point_subalgebra
from superalgebra.constructors import build_glmn, build_ospm2n, build_slmn

ALGEBRAS = [
    lambda: build_slmn(2, 0),
    lambda: build_slmn(3, 0),
    lambda: build_glmn(1, 1),
    lambda: build_glmn(2, 1),
    lambda: build_slmn(2, 1),
    lambda: build_ospm2n(1, 1),
    lambda: build_ospm2n(3, 1),
]


class TestTorusElement:
    def test_parse(self):
        t = TorusElement.parse("1/2, 0")
        assert t.coords == (Fraction(1, 2), Fraction(0))
        assert str(t) == "1/2,0"

    @pytest.mark.parametrize("text", ["a", "1/2,,x", "1/0"])
    def test_parse_rejects(self, text):
        with pytest.raises(SpecParseError):
            TorusElement.parse(text)

    def test_wrong_rank(self, sl2):
        with pytest.raises(SpecParseError):
            grading_from_torus(sl2, TorusElement.parse("1/2,1/3"))


class TestGrading:
    def test_trivial(self, sl2):
        G = trivial_grading(sl2)
        assert G.is_trivial
        assert list(G.eigenspaces) == [PHASE_ZERO]
        assert zero_phase_indices(G) == (0, 1, 2)

    def test_sl2_order_two(self, sl2):
        G = grading_from_torus(sl2, TorusElement.parse("1/4"))
        assert G.order == 2
        half = Phase(Fraction(1, 2))
        assert G.eigenspaces[half] == (sl2.index("E12"), sl2.index("E21"))
        assert G.sdim(half) == 2
        assert z_from_sdims({p: G.sdim(p) for p in G.eigenspaces}) == Fraction(1, 8)

    def test_sl2_order_three(self, sl2):
        G = grading_from_torus(sl2, TorusElement.parse("1/6"))
        assert G.order == 3
        assert [str(p) for p in G.sorted_phases()] == ["0", "1/3", "2/3"]
        data = sigma_weyl_data(sl2, G)
        assert data.z_value == Fraction(1, 9)
        assert data.rho(Phase(Fraction(1, 3))) == Weight.of([1])
        assert data.rho_sigma == Weight.of([Fraction(1, 3)])
        assert fixed_point_subalgebra(sl2, G).dim == 1

    def test_gl11_odd_phase(self, gl11):
        G = grading_from_torus(gl11, TorusElement.parse("1/2,0"))
        half = Phase(Fraction(1, 2))
        assert G.sdim(PHASE_ZERO) == 2 and G.sdim(half) == -2
        data = sigma_weyl_data(gl11, G)
        assert data.z_value == Fraction(-1, 8)
        assert data.rho_sigma.is_zero()

    @settings(max_examples=30, deadline=None)
    @given(which=st.integers(0, len(ALGEBRAS) - 1), seed=st.integers(0, 10_000))
    def test_sampled_gradings_are_compatible(self, which, seed):
        L = ALGEBRAS[which]()
        for t in sample_tori(L, 3, seed):
            G = grading_from_torus(L, t)
            assert grading_check(L, G) == []
            assert sdim_accounting(L, G)
            assert rho_pairing_violations(sigma_weyl_data(L, G)) == []

    def test_grading_check_catches_broken_bracket(self, sl2):
        broken = sl2.with_structure_constant(sl2.index("E12"), sl2.index("E21"), sl2.index("E12"), 1)
        G = grading_from_torus(sl2, TorusElement.parse("1/6"))
        assert any(p.startswith("bracket") for p in grading_check(broken, G))


class TestSampling:
    def test_deterministic(self, gl21):
        assert sample_tori(gl21, 5, seed=3) == sample_tori(gl21, 5, seed=3)
        assert sample_tori(gl21, 5, seed=3) != sample_tori(gl21, 5, seed=4)

    def test_bounds(self, gl21):
        for t in sample_tori(gl21, 50, seed=1):
            assert len(t.coords) == 3
            for c in t.coords:
                assert abs(c.numerator) <= 3
                assert 1 <= c.denominator <= 6


class TestLabels:
    def test_sl3_labels(self, sl3):
        rd = positive_root_datum(sl3)
        torus, m = torus_from_labels(rd, (1, 1, 1))
        assert m == 3
        G = grading_from_torus(sl3, torus)
        assert G.order == 3
        # principal grading: the fixed points are just the Cartan subalgebra
        assert G.dim(PHASE_ZERO) == 2

    @pytest.mark.parametrize("labels", [(1, 1), (1, -1, 1), (0, 0, 0)])
    def test_bad_labels(self, sl3, labels):
        with pytest.raises(SpecParseError):
            torus_from_labels(positive_root_datum(sl3), labels)


class TestScreen:
    @pytest.mark.parametrize("name", ["sl21", "c02", "osp12"])
    def test_indecomposable_passes(self, request, name):
        L = request.getfixturevalue(name)
        assert indecomposability_screen(L, trivial_grading(L)).passed

    def test_gl21_fails_single_eigenvalue(self, gl21):
        screen = indecomposability_screen(gl21, trivial_grading(gl21))
        assert screen.violated == ["single_casimir_eigenvalue"]

    def test_split_sum(self, sl2_sum_split):
        screen = indecomposability_screen(sl2_sum_split, trivial_grading(sl2_sum_split))
        assert set(screen.violated) == {"single_casimir_eigenvalue", "no_basis_ideal_split"}
