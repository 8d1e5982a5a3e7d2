"""Exact coefficient algebra: canonical form, ring laws, serialization."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fracadm.coeffs import GammaAtom, GammaCoefficient
from fracadm.gammafn import gamma


def coeff(rational, *factors) -> GammaCoefficient:
    out = GammaCoefficient.from_rational(rational)
    for grade, exponent in factors:
        out = out * GammaCoefficient.gamma_factor(grade, exponent)
    return out


rationals = st.fractions(
    min_value=Fraction(-4), max_value=Fraction(4), max_denominator=6
).filter(lambda q: q != 0)
atoms = st.builds(
    lambda q, fs: GammaAtom.make(q, fs),
    rationals,
    st.dictionaries(st.integers(1, 5), st.sampled_from([-2, -1, 1, 2]), max_size=3).map(
        lambda d: tuple(sorted(d.items()))
    ),
)
coefficients = st.lists(atoms, max_size=3).map(GammaCoefficient.from_atoms)


class TestCanonicalForm:
    def test_like_atoms_merge(self):
        one_over = coeff(1, (1, -1))
        assert one_over + one_over == coeff(2, (1, -1))
        assert len((one_over + one_over).atoms) == 1

    def test_add_zero_identity(self):
        c = coeff(Fraction(3, 7), (2, 1), (4, -1))
        assert c + GammaCoefficient.zero() == c

    def test_cancellation_to_empty(self):
        one_over = coeff(1, (1, -1))
        total = one_over + (-one_over)
        assert total.is_zero
        assert total.atoms == ()

    def test_mul_one_identity(self):
        c = coeff(Fraction(-2, 3), (3, 2))
        assert c * GammaCoefficient.one() == c

    def test_square_of_reciprocal(self):
        one_over = coeff(1, (1, -1))
        assert one_over * one_over == coeff(1, (1, -2))

    def test_grade_zero_factor_absorbed(self):
        assert GammaCoefficient.gamma_factor(0) == GammaCoefficient.one()

    def test_atom_make_drops_grade_zero_factor(self):
        # make() normalizes Gamma(1)=1 away; the raw constructor refuses it
        assert GammaAtom.make(2, ((0, 1), (1, 1))) == GammaAtom.make(2, ((1, 1),))
        with pytest.raises(ValueError):
            GammaAtom(Fraction(2), ((0, 1),))

    @given(coefficients)
    def test_canonicalization_idempotent(self, c):
        assert GammaCoefficient.from_atoms(c.atoms) == c

    @given(coefficients)
    def test_order_irrelevant(self, c):
        shuffled = list(c.atoms)
        random.Random(0).shuffle(shuffled)
        assert GammaCoefficient.from_atoms(tuple(shuffled)) == c


class TestTelescoping:
    def test_structural(self):
        left = coeff(1, (2, 1), (3, -1)) * coeff(1, (3, 1), (4, -1))
        assert left == coeff(1, (2, 1), (4, -1))

    def test_numeric_at_07(self):
        alpha = 0.7
        left = coeff(1, (2, 1), (3, -1)) * coeff(1, (3, 1), (4, -1))
        expected = gamma(1 + 2 * alpha) / gamma(1 + 4 * alpha)
        assert left.evaluate(alpha) == pytest.approx(expected, rel=1e-12)


class TestEvaluate:
    def test_reciprocal_at_one(self):
        assert coeff(1, (2, -1)).evaluate(1.0) == pytest.approx(0.5, rel=1e-12)

    def test_composite_at_one(self):
        # Gamma(1+2a) / (Gamma(1+a)^2 Gamma(1+4a)) at a=1 is 2/24
        c = coeff(1, (2, 1), (1, -2), (4, -1))
        assert c.evaluate(1.0) == pytest.approx(1 / 12, rel=1e-12)

    def test_zero(self):
        assert GammaCoefficient.zero().evaluate(0.4) == 0.0

    def test_alpha_domain(self):
        with pytest.raises(ValueError):
            coeff(1).evaluate(0.0)
        with pytest.raises(ValueError):
            coeff(1).evaluate(1.5)


SAMPLE_ALPHAS = [0.237, 0.412, 0.58, 0.731, 0.964]  # fixed draws, reproducible


def assert_numeric_match(a: GammaCoefficient, b: GammaCoefficient):
    for alpha in SAMPLE_ALPHAS:
        va, vb = a.evaluate(alpha), b.evaluate(alpha)
        assert math.isclose(va, vb, rel_tol=1e-10, abs_tol=1e-10)


class TestRingLaws:
    @settings(max_examples=50)
    @given(coefficients, coefficients)
    def test_commutativity(self, a, b):
        assert a + b == b + a
        assert a * b == b * a
        assert_numeric_match(a * b, b * a)

    @settings(max_examples=50)
    @given(coefficients, coefficients, coefficients)
    def test_associativity(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert_numeric_match((a * b) * c, a * (b * c))

    @settings(max_examples=50)
    @given(coefficients, coefficients, coefficients)
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c
        assert_numeric_match(a * (b + c), a * b + a * c)

    @settings(max_examples=50)
    @given(coefficients, coefficients)
    def test_eval_is_additive(self, a, b):
        for alpha in SAMPLE_ALPHAS:
            total = (a + b).evaluate(alpha)
            parts = a.evaluate(alpha) + b.evaluate(alpha)
            assert math.isclose(total, parts, rel_tol=1e-10, abs_tol=1e-10)


class TestSerialization:
    def test_text_form(self):
        c = coeff(2, (3, 1), (1, -1), (2, -1), (5, -1))
        assert c.to_text() == "2/1 * G(1+a)^-1 * G(1+2a)^-1 * G(1+3a)^1 * G(1+5a)^-1"

    def test_text_zero(self):
        assert GammaCoefficient.zero().to_text() == "0"

    @given(coefficients)
    def test_json_round_trip(self, c):
        assert GammaCoefficient.from_json(c.to_json()) == c

    def test_json_shape(self):
        c = coeff(Fraction(-3, 4), (2, 1))
        assert c.to_json() == [{"rational": [-3, 4], "factors": [[2, 1]]}]
