from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exact.errors import SingularMatrix, SpectrumNotRational
from exact.matrix import (
    EchelonSpan,
    QMatrix,
    char_poly,
    intersect_spans,
    inverse,
    kernel,
    poly_at_matrix,
    rank,
    rational_roots,
    rational_spectrum_split,
    solve,
)
from exact.rational import Phase, format_rational, parse_rational, parse_rational_list, rational_sqrt


def small_matrices(rows=st.integers(1, 4), cols=st.integers(1, 4)):
    return st.tuples(rows, cols).flatmap(
        lambda shape: st.lists(
            st.lists(st.integers(-3, 3), min_size=shape[1], max_size=shape[1]),
            min_size=shape[0], max_size=shape[0],
        )
    )


def square_matrices(max_n=4):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n)
    )


class TestRational:
    def test_parse_and_format(self):
        assert parse_rational("1/2") == Fraction(1, 2)
        assert parse_rational(" -3 ") == -3
        assert parse_rational_list("1/2,0,-1/3") == (Fraction(1, 2), 0, Fraction(-1, 3))
        assert parse_rational_list("") == ()
        assert format_rational(Fraction(6, 4)) == "3/2"

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_rational("one half")
        with pytest.raises(ValueError):
            parse_rational("")

    def test_rational_sqrt(self):
        assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert rational_sqrt(Fraction(2)) is None
        assert rational_sqrt(Fraction(-1)) is None

    def test_phase_is_mod_one(self):
        assert Phase(Fraction(3, 2)) == Phase(Fraction(1, 2))
        assert Phase(Fraction(-1, 3)).value == Fraction(2, 3)
        assert (Phase(Fraction(2, 3)) + Phase(Fraction(1, 2))).value == Fraction(1, 6)
        assert (-Phase(Fraction(1, 4))).value == Fraction(3, 4)
        assert Phase(Fraction(5)).is_zero()
        assert str(Phase(Fraction(7, 6))) == "1/6"


class TestMatrix:
    def test_inverse(self):
        m = QMatrix.from_rows([[2, 1], [1, 1]])
        assert inverse(m) == QMatrix.from_rows([[1, -1], [-1, 2]])
        assert m @ inverse(m) == QMatrix.identity(2)

    def test_singular_inverse_raises(self):
        with pytest.raises(SingularMatrix):
            inverse(QMatrix.from_rows([[1, 2], [2, 4]]))

    def test_solve(self):
        m = QMatrix.from_rows([[1, 1], [1, -1]])
        assert solve(m, [3, 1]) == (2, 1)
        with pytest.raises(ValueError):
            solve(QMatrix.from_rows([[1, 1], [2, 2]]), [1, 3])

    def test_empty_product(self):
        a = QMatrix.zeros(2, 0)
        b = QMatrix.zeros(0, 3)
        assert (a @ b) == QMatrix.zeros(2, 3)

    def test_echelon_span_keeps_original_vectors(self):
        span = EchelonSpan(3, [(2, 0, 0), (4, 0, 0), (0, 1, 1)])
        assert span.rank == 2
        assert span.basis == ((2, 0, 0), (0, 1, 1))
        assert span.contains((1, 3, 3))
        assert not span.contains((0, 0, 1))

    def test_intersect_spans(self):
        a = [(1, 0, 0), (0, 1, 0)]
        b = [(0, 1, 0), (0, 0, 1)]
        (v,) = intersect_spans(3, a, b)
        assert v[0] == 0 and v[2] == 0 and v[1] != 0
        assert intersect_spans(3, a, []) == ()

    @given(small_matrices())
    def test_kernel_is_kernel(self, rows):
        m = QMatrix.from_rows(rows)
        basis = kernel(m)
        assert rank(m) + len(basis) == m.cols
        for v in basis:
            assert all(x == 0 for x in m.apply(v))


class TestSpectrum:
    def test_char_poly(self):
        assert char_poly(QMatrix.from_rows([[2, 1], [1, 2]])) == (1, -4, 3)
        assert rational_roots((1, -4, 3)) == {1: 1, 3: 1}
        assert rational_roots((1, 0, 0)) == {0: 2}
        assert rational_roots((1, 0, 1)) == {}

    @settings(max_examples=40)
    @given(square_matrices())
    def test_cayley_hamilton(self, rows):
        m = QMatrix.from_rows(rows)
        assert poly_at_matrix(char_poly(m), m).is_zero()

    def test_generalized_eigenspace_of_nilpotent(self):
        (space,) = rational_spectrum_split(QMatrix.from_rows([[0, 1], [0, 0]]))
        assert space.value == 0
        assert len(space.basis) == 2

    def test_split_orders_by_decreasing_eigenvalue(self):
        spaces = rational_spectrum_split(QMatrix.diagonal([1, 3, 3]))
        assert [s.value for s in spaces] == [3, 1]
        assert [len(s.basis) for s in spaces] == [2, 1]

    def test_irrational_spectrum_raises(self):
        with pytest.raises(SpectrumNotRational):
            rational_spectrum_split(QMatrix.from_rows([[0, -1], [1, 0]]))
