"""Adomian polynomials for polynomial nonlinearities.

A_n is the lambda^n coefficient of N(sum_k lambda^k y_k), computed by
exact polynomial arithmetic in lambda with series coefficients.  For
polynomial N this is the definition, carried out without any
differentiation, so the result is exact.  The first four textbook closed
forms (A_0 through A_3 in terms of derivatives of N at y_0) are kept as
an independent construction for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .series import FracSeries

NumberLike = Union[Fraction, int, float, str]


def _as_fraction(value: NumberLike) -> Fraction:
    # Fraction(float) is exact in binary; fine here since exactness only
    # has to be self-consistent, not decimal-pretty
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class PolyNonlinearity:
    """N(y) = sum_j c_j y^j with exact rational coefficients.

    A purely linear map (no j >= 2 term) is permitted but reported as
    degenerate, so linear problems run through the same solver path.
    """

    coeffs: tuple[tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        grades = [j for j, _ in self.coeffs]
        if grades != sorted(set(grades)) or any(j < 0 for j in grades):
            raise ValueError("powers must be distinct, sorted and nonnegative")
        if any(c == 0 for _, c in self.coeffs):
            raise ValueError("zero coefficients are not stored")

    @classmethod
    def from_terms(cls, terms: Mapping[int, NumberLike] | Iterable[tuple[int, NumberLike]]) -> "PolyNonlinearity":
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: dict[int, Fraction] = {}
        for power, coeff in items:
            merged[power] = merged.get(power, Fraction(0)) + _as_fraction(coeff)
        return cls(tuple(sorted((j, c) for j, c in merged.items() if c != 0)))

    @classmethod
    def zero(cls) -> "PolyNonlinearity":
        return cls(())

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_degenerate(self) -> bool:
        """True when no genuinely nonlinear (j >= 2) term is present."""
        return all(j < 2 for j, _ in self.coeffs)

    @property
    def degree(self) -> int:
        return max((j for j, _ in self.coeffs), default=0)

    def derivative(self) -> "PolyNonlinearity":
        return PolyNonlinearity.from_terms(
            [(j - 1, j * c) for j, c in self.coeffs if j >= 1]
        )

    def apply(self, y: FracSeries) -> FracSeries:
        """N(y) through series arithmetic."""
        out = FracSeries.zero(y.max_grade)
        for power, coeff in self.coeffs:
            out = out + y.pow_int(power).scale(coeff)
        return out

    def __call__(self, y: float) -> float:
        return sum(float(c) * y**j for j, c in self.coeffs)


@dataclass(frozen=True)
class AdomianSequence:
    """A_0 ... A_m together with the y_0 ... y_m they came from."""

    polys: tuple[FracSeries, ...]
    source: tuple[FracSeries, ...]

    def __post_init__(self) -> None:
        if len(self.polys) != len(self.source):
            raise ValueError("polys and source must have equal length")


def adomian_polynomials(
    nonlinearity: PolyNonlinearity, ys: Sequence[FracSeries], m: int
) -> AdomianSequence:
    """A_0 ... A_m by expanding N(sum_k lambda^k y_k) in lambda.

    Lambda-polynomials are lists of FracSeries indexed by lambda degree,
    truncated at degree m; A_n then depends only on y_0 ... y_n.
    """
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    if len(ys) < m + 1:
        raise ValueError(f"need at least {m + 1} series, got {len(ys)}")
    max_grade = min(y.max_grade for y in ys[: m + 1])
    zero = FracSeries.zero(max_grade)

    base = list(ys[: m + 1])  # lambda-polynomial of the candidate solution
    accum = [zero] * (m + 1)
    power = [FracSeries.constant(1, max_grade)] + [zero] * m  # lambda^0 term only
    j = 0
    for target_power, coeff in nonlinearity.coeffs:
        while j < target_power:  # raise to the next needed power of y
            power = _lambda_mul(power, base, zero)
            j += 1
        accum = [a + p.scale(coeff) for a, p in zip(accum, power)]
    return AdomianSequence(polys=tuple(accum), source=tuple(base))


def _lambda_mul(
    a: list[FracSeries], b: list[FracSeries], zero: FracSeries
) -> list[FracSeries]:
    m = len(a) - 1
    out = [zero] * (m + 1)
    for i, ai in enumerate(a):
        if ai.is_zero:
            continue
        for k in range(m + 1 - i):
            if not b[k].is_zero:
                out[i + k] = out[i + k] + ai * b[k]
    return out


def adomian_closed_form(
    nonlinearity: PolyNonlinearity, ys: Sequence[FracSeries], n: int
) -> FracSeries:
    """The textbook closed form of A_n for n <= 3, as an independent check.

    A_0 = N(y0)
    A_1 = y1 N'(y0)
    A_2 = y2 N'(y0) + y1^2/2! N''(y0)
    A_3 = y3 N'(y0) + y1 y2 N''(y0) + y1^3/3! N'''(y0)

    Closed forms past n = 3 are not provided; the lambda expansion is the
    production path.
    """
    if not 0 <= n <= 3:
        raise ValueError(f"closed forms cover n in 0..3 only, got {n}")
    if len(ys) < n + 1:
        raise ValueError(f"need at least {n + 1} series, got {len(ys)}")
    y0 = ys[0]
    if n == 0:
        return nonlinearity.apply(y0)
    d1 = nonlinearity.derivative()
    if n == 1:
        return ys[1] * d1.apply(y0)
    d2 = d1.derivative()
    if n == 2:
        return ys[2] * d1.apply(y0) + (ys[1] * ys[1]).scale(Fraction(1, 2)) * d2.apply(y0)
    d3 = d2.derivative()
    return (
        ys[3] * d1.apply(y0)
        + (ys[1] * ys[2]) * d2.apply(y0)
        + (ys[1] * ys[1] * ys[1]).scale(Fraction(1, 6)) * d3.apply(y0)
    )
