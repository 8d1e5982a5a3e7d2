"""Gamma backend accuracy against a high-precision reference."""

import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from fracadm.gammafn import gamma

mpmath.mp.dps = 50


@pytest.mark.parametrize(
    "x,expected",
    [
        (1.0, 1.0),
        (2.0, 1.0),
        (3.0, 2.0),
        (4.0, 6.0),
        (0.5, math.sqrt(math.pi)),
        (1.5, math.sqrt(math.pi) / 2),
    ],
)
def test_known_values(x, expected):
    assert gamma(x) == pytest.approx(expected, rel=1e-13)


@given(st.floats(min_value=0.01, max_value=50.0))
def test_matches_reference_on_positive_axis(x):
    expected = float(mpmath.gamma(x))
    assert gamma(x) == pytest.approx(expected, rel=5e-13)


@given(st.floats(min_value=0.05, max_value=25.0))
def test_recurrence(x):
    # Gamma(x+1) = x Gamma(x), the defining functional equation
    assert gamma(x + 1.0) == pytest.approx(x * gamma(x), rel=1e-12)


@given(st.floats(min_value=0.3, max_value=1.0))
def test_solver_argument_range(alpha):
    # 1 + k*alpha for grades up to 12 is the range the solver touches
    for k in range(13):
        x = 1.0 + k * alpha
        assert gamma(x) == pytest.approx(float(mpmath.gamma(x)), rel=5e-13)


@pytest.mark.parametrize("x", [0.0, -1.0, -0.5])
def test_nonpositive_rejected(x):
    with pytest.raises(ValueError):
        gamma(x)


def test_agrees_with_stdlib():
    for x in [0.1, 0.37, 1.9, 7.25, 33.0]:
        assert gamma(x) == pytest.approx(math.gamma(x), rel=1e-13)
