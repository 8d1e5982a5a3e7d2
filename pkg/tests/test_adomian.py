"""Decomposition polynomials: lambda expansion vs textbook closed forms."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fracadm.adomian import (
    AdomianSequence,
    PolyNonlinearity,
    adomian_closed_form,
    adomian_polynomials,
)
from fracadm.series import FracSeries

SQUARE = PolyNonlinearity.from_terms({2: 1})
CUBE = PolyNonlinearity.from_terms({3: 1})
MIXED = PolyNonlinearity.from_terms({2: 1, 1: 2})  # y^2 + 2y

small_coeffs = st.fractions(
    min_value=Fraction(-2), max_value=Fraction(2), max_denominator=3
)
series = st.dictionaries(st.integers(0, 3), small_coeffs, max_size=3).map(
    lambda d: FracSeries(d)
)
series_lists = st.lists(series, min_size=4, max_size=4)


def simple_ys() -> list[FracSeries]:
    return [
        FracSeries({0: 1, 1: 2}),
        FracSeries({1: Fraction(1, 2)}),
        FracSeries({2: 3}),
        FracSeries({0: -1, 3: 1}),
    ]


class TestNonlinearity:
    def test_apply_matches_direct_arithmetic(self):
        y = FracSeries({0: 2, 1: -1})
        assert MIXED.apply(y) == y * y + y.scale(2)

    def test_float_call(self):
        assert MIXED(3.0) == pytest.approx(15.0)

    def test_degenerate_flag(self):
        assert PolyNonlinearity.from_terms({1: 4}).is_degenerate
        assert not SQUARE.is_degenerate

    def test_derivative(self):
        assert MIXED.derivative() == PolyNonlinearity.from_terms({1: 2, 0: 2})
        assert PolyNonlinearity.from_terms({0: 5}).derivative().is_zero

    def test_merge_and_zero_drop(self):
        n = PolyNonlinearity.from_terms([(2, 1), (2, -1), (1, 3)])
        assert n.coeffs == ((1, Fraction(3)),)


class TestLambdaExpansion:
    def test_a0_is_square(self):
        ys = simple_ys()
        result = adomian_polynomials(SQUARE, ys[:1], 0)
        assert result.polys[0] == ys[0] * ys[0]

    def test_a1_product_rule(self):
        ys = simple_ys()
        result = adomian_polynomials(SQUARE, ys, 1)
        assert result.polys[1] == (ys[0] * ys[1]).scale(2)

    def test_a2_two_terms(self):
        ys = simple_ys()
        result = adomian_polynomials(SQUARE, ys, 2)
        expected = (ys[0] * ys[2]).scale(2) + ys[1] * ys[1]
        assert result.polys[2] == expected

    def test_prefix_stability(self):
        ys = simple_ys()
        short = adomian_polynomials(MIXED, ys, 1).polys
        long = adomian_polynomials(MIXED, ys, 3).polys
        assert long[:2] == short

    def test_sum_identity_square(self):
        # for N = y^2 at depth 1: A0 + A1 = (y0+y1)^2 - y1^2
        ys = simple_ys()
        polys = adomian_polynomials(SQUARE, ys, 1).polys
        total = polys[0] + polys[1]
        combined = ys[0] + ys[1]
        assert total == combined * combined - ys[1] * ys[1]

    def test_degenerate_linear_passthrough(self):
        linear = PolyNonlinearity.from_terms({1: Fraction(5, 2)})
        ys = simple_ys()
        result = adomian_polynomials(linear, ys, 3)
        for y, a in zip(ys, result.polys):
            assert a == y.scale(Fraction(5, 2))

    def test_zero_nonlinearity(self):
        result = adomian_polynomials(PolyNonlinearity.zero(), simple_ys(), 3)
        assert all(a.is_zero for a in result.polys)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            adomian_polynomials(SQUARE, simple_ys(), -1)
        with pytest.raises(ValueError):
            adomian_polynomials(SQUARE, simple_ys()[:2], 3)

    def test_sequence_length_invariant(self):
        with pytest.raises(ValueError):
            AdomianSequence(polys=(FracSeries.zero(),), source=())


class TestClosedFormAgreement:
    @pytest.mark.parametrize("nonlinearity", [SQUARE, CUBE, MIXED])
    def test_on_fixed_series(self, nonlinearity):
        ys = simple_ys()
        expanded = adomian_polynomials(nonlinearity, ys, 3).polys
        for n in range(4):
            assert adomian_closed_form(nonlinearity, ys, n) == expanded[n]

    @settings(max_examples=40)
    @given(series_lists, st.sampled_from([SQUARE, CUBE, MIXED]))
    def test_on_random_series(self, ys, nonlinearity):
        expanded = adomian_polynomials(nonlinearity, ys, 3).polys
        for n in range(4):
            assert adomian_closed_form(nonlinearity, ys, n) == expanded[n]

    def test_a1_vanishes_with_zero_y1(self):
        ys = [simple_ys()[0], FracSeries.zero()]
        assert adomian_closed_form(SQUARE, ys, 1).is_zero

    def test_n_above_three_rejected(self):
        with pytest.raises(ValueError):
            adomian_closed_form(SQUARE, simple_ys(), 4)
