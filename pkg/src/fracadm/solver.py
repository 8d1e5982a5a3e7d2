"""Decomposition driver for fractional initial-value problems.

Solves  D^(n*alpha) y = N(y) + f  with initial data y^(k*alpha)(0) for
k < n, where D is the order-alpha derivative applied n times.  The
zeroth iterate collects the fractional Taylor data plus the n-fold
integral of the forcing; each further iterate is the n-fold integral of
the next Adomian polynomial.  Everything is exact coefficient algebra;
numbers only appear when a solution series is evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .adomian import PolyNonlinearity, adomian_polynomials
from .coeffs import GammaCoefficient
from .series import FracSeries, jumarie_derivative, jumarie_integral

NumberLike = Union[Fraction, int, float, str]


@dataclass(frozen=True)
class ProblemSpec:
    """One initial-value problem of total order n*alpha.

    ``init[k]`` is the order-(k*alpha) derivative of the solution at 0;
    alpha is carried along for numeric evaluation but the solve itself
    is symbolic in alpha.  The working truncation bound is taken from
    the forcing series.
    """

    n: int
    alpha: float
    nonlinearity: PolyNonlinearity
    forcing: FracSeries
    init: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in (0, 1], got {self.alpha}")
        if len(self.init) != self.n:
            raise ValueError(
                f"need exactly n={self.n} initial values, got {len(self.init)}"
            )

    @classmethod
    def make(
        cls,
        n: int,
        alpha: float,
        nonlinearity: PolyNonlinearity,
        forcing: FracSeries,
        init: Sequence[NumberLike],
    ) -> "ProblemSpec":
        exact = tuple(v if isinstance(v, Fraction) else Fraction(v) for v in init)
        return cls(n, alpha, nonlinearity, forcing, exact)

    @property
    def max_grade(self) -> int:
        return self.forcing.max_grade


@dataclass(frozen=True)
class AdmSolution:
    """The iterates y_0 ... y_m, their sum, and truncation diagnostics.

    ``valid_grade`` is the highest grade whose coefficients, including
    those of the residual diagnostic, are unaffected by the grade cap.
    Stored solution coefficients are exact through max_grade regardless
    (no grade-lowering operation occurs inside the iteration); the
    derivative inside the residual is what costs n grades once anything
    has been dropped.
    """

    ys: tuple[FracSeries, ...]
    partial: FracSeries
    iterations: int
    truncated: bool
    valid_grade: int


def build_y0(problem: ProblemSpec) -> FracSeries:
    """Zeroth iterate: fractional Taylor data plus integrated forcing.

    y_0 = sum_{k<n} init[k] * t^(k*alpha)/G(1+k*alpha)
          + the n-fold order-alpha integral of f.
    """
    cap = problem.max_grade
    terms = []
    dropped = False
    for k, value in enumerate(problem.init):
        if value == 0:
            continue
        if k > cap:
            dropped = True
            continue
        terms.append((k, GammaCoefficient.from_rational(value) * GammaCoefficient.gamma_factor(k, -1)))
    taylor_part = FracSeries(terms, max_grade=cap, truncated=dropped)
    return taylor_part + jumarie_integral(problem.forcing, times=problem.n)


def adm_iterate(problem: ProblemSpec, m: int) -> AdmSolution:
    """Run the decomposition through iterate m (m+1 series in total).

    y_{k+1} is the n-fold order-alpha integral of the Adomian polynomial
    A_k built from y_0 ... y_k.  Hitting the grade cap is recorded, never
    fatal.
    """
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    ys = [build_y0(problem)]
    for k in range(m):
        a_k = adomian_polynomials(problem.nonlinearity, ys, k).polys[k]
        ys.append(jumarie_integral(a_k, times=problem.n))
    partial = ys[0]
    for y in ys[1:]:
        partial = partial + y
    truncated = partial.truncated or any(y.truncated for y in ys)
    valid_grade = problem.max_grade - (problem.n if truncated else 0)
    return AdmSolution(
        ys=tuple(ys),
        partial=partial,
        iterations=m,
        truncated=truncated,
        valid_grade=valid_grade,
    )


def residual(problem: ProblemSpec, solution: AdmSolution) -> FracSeries:
    """Defect of the partial sum: D^(n*alpha) y - N(y) - f.

    The lowest surviving grade measures how far the iteration has pushed
    the defect; it grows with each iterate as long as the cap is not in
    the way.  Trust the result through ``solution.valid_grade``.
    """
    y = solution.partial
    return (
        jumarie_derivative(y, times=problem.n)
        - problem.nonlinearity.apply(y)
        - problem.forcing
    )
