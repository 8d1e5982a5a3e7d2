"""Independent numeric ground truth for the symbolic machinery.

Four oracles, none of which share code with the series term rules:

* :func:`quad_jumarie_integral` evaluates the normalized order-alpha
  integral as a weighted classical integral, desingularized by the
  substitution u = (t - tau)^alpha and handled with composite
  Gauss-Legendre on a mesh graded toward both endpoints.
* :func:`gl_derivative` evaluates the fractional-difference sum that
  defines the order-alpha derivative.  It is a smoke-test oracle with
  first-order step convergence, not a precision reference.
* :func:`rk4_solve` integrates the classical (alpha = 1) limit equation
  y'' = N(y) + f(t) with fixed-step RK4.
* :func:`taylor_oracle` produces exact rational Taylor coefficients of
  the alpha = 1 solution by the standard power-series recurrence.

Each report carries an a-posteriori error estimate (mesh doubling, step
halving), never a guess.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence, Union

import numpy as np

from .adomian import PolyNonlinearity

NumberLike = Union[Fraction, int, float, str]


@dataclass(frozen=True)
class OracleReport:
    value: float
    est_error: float
    method: str
    parameters: dict = field(default_factory=dict)


def _sample(f: Callable, points: np.ndarray) -> np.ndarray:
    """Evaluate f on an array, tolerating scalar-only callables."""
    try:
        values = np.asarray(f(points), dtype=float)
        if values.shape == points.shape:
            return values
    except (TypeError, ValueError):
        pass
    return np.array([float(f(p)) for p in points])


# -- weighted-integral oracle ---------------------------------------


def _graded_edges(upper: float, panels: int, grading: float) -> np.ndarray:
    # refine toward both endpoints: the substitution leaves algebraic
    # endpoint behavior when the integrand itself has fractional powers
    half = panels // 2
    frac = 0.5 * (np.arange(half + 1) / half) ** grading
    left = upper * frac
    right = upper * (1.0 - frac[::-1])
    return np.concatenate([left, right[1:]])


def _composite_gauss(g: Callable, upper: float, panels: int, grading: float, nodes: int) -> float:
    x, w = np.polynomial.legendre.leggauss(nodes)
    edges = _graded_edges(upper, panels, grading)
    mid = 0.5 * (edges[:-1] + edges[1:])[:, None]
    halfw = 0.5 * (edges[1:] - edges[:-1])[:, None]
    points = (mid + halfw * x[None, :]).ravel()
    values = _sample(g, points)
    if not np.all(np.isfinite(values)):
        raise ValueError("integrand produced non-finite samples")
    return float(np.sum(values.reshape(mid.shape[0], nodes) * w[None, :] * halfw))


def quad_jumarie_integral(
    f: Callable,
    alpha: float,
    t: float,
    panels: int = 64,
    grading: float = 8.0,
    nodes: int = 12,
) -> OracleReport:
    """(1/G(1+alpha)) * integral_0^t f(tau) (dtau)^alpha, numerically.

    The weighted form alpha * integral_0^t (t-tau)^(alpha-1) f(tau) dtau
    becomes integral_0^{t^alpha} f(t - u^(1/alpha)) du after the
    substitution u = (t-tau)^alpha, which removes the endpoint blowup.
    Error estimate is the difference against a doubled mesh.
    """
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    if t <= 0:
        raise ValueError(f"t must be positive, got {t}")
    upper = t**alpha
    inv_alpha = 1.0 / alpha

    def g(u: np.ndarray) -> np.ndarray:
        # clip: rounding in u^(1/alpha) can push tau a few ulp outside [0, t]
        tau = np.clip(t - np.asarray(u) ** inv_alpha, 0.0, t)
        return _sample(f, tau)

    coarse = _composite_gauss(g, upper, panels, grading, nodes)
    fine = _composite_gauss(g, upper, 2 * panels, grading, nodes)
    norm = math.gamma(1.0 + alpha)
    value = fine / norm
    est = abs(fine - coarse) / norm + 1e-15 * abs(value)
    return OracleReport(
        value=value,
        est_error=est,
        method="substituted composite Gauss-Legendre",
        parameters={"panels": panels, "grading": grading, "nodes": nodes},
    )


# -- fractional-difference oracle -----------------------------------


def _difference_sum(f: Callable, alpha: float, x: float, h: float, terms: int | None) -> float:
    # samples x + (alpha - k) h stay in [0, x + alpha h]; the sum is
    # applied to f - f(0), which is what makes constants vanish exactly
    k_domain = int(math.floor(x / h + alpha))
    k_max = k_domain if terms is None else min(terms, k_domain)
    k = np.arange(k_max + 1)
    ratios = np.ones(k_max + 1)
    ratios[1:] = (k[1:] - 1.0 - alpha) / k[1:]
    weights = np.cumprod(ratios)  # (-1)^k binom(alpha, k)
    points = x + (alpha - k) * h
    f0 = float(_sample(f, np.array([0.0]))[0])
    values = _sample(f, points) - f0
    if not np.all(np.isfinite(values)):
        raise ValueError("function produced non-finite samples")
    return float(np.dot(weights, values)) / h**alpha


def gl_derivative(
    f: Callable,
    alpha: float,
    x: float,
    h: float | None = None,
    terms: int | None = None,
) -> OracleReport:
    """Truncated fractional-difference derivative at an interior point x.

    The sum sum_k (-1)^k binom(alpha,k) (f - f(0))(x + (alpha-k)h) / h^alpha,
    with k capped where the samples would leave [0, infinity).  Applying
    the difference to f - f(0) realizes the constant-kills property of
    the modified operator exactly rather than through the slowly
    converging tail.  Error estimate from comparing h against h/2; the
    reported value is the h/2 one.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    if h is None:
        h = x / 8192.0
    if h <= 0 or x < alpha * h:
        raise ValueError("need h > 0 and x >= alpha*h (interior point)")
    coarse = _difference_sum(f, alpha, x, h, terms)
    fine = _difference_sum(f, alpha, x, h / 2.0, None if terms is None else 2 * terms)
    return OracleReport(
        value=fine,
        est_error=abs(fine - coarse),
        method="fractional difference sum on f - f(0)",
        parameters={"h": h / 2.0, "terms": terms},
    )


# -- classical reference solvers ------------------------------------


@dataclass(frozen=True)
class Rk4Table:
    """Fixed-step trajectory of the classical limit equation."""

    ts: np.ndarray
    ys: np.ndarray
    yps: np.ndarray
    step: float
    est_error: float
    blew_up: bool

    def value_at(self, t: float) -> float:
        """y(t) from the table; cubic Hermite between nodes off the grid."""
        if t < self.ts[0] - 1e-12 or t > self.ts[-1] + 1e-12:
            raise ValueError(f"t={t} outside the integrated range")
        pos = (t - self.ts[0]) / self.step
        i = int(round(pos))
        if abs(pos - i) < 1e-9 and 0 <= i < len(self.ts):
            return float(self.ys[i])
        i = min(int(pos), len(self.ts) - 2)
        s = (t - self.ts[i]) / self.step
        y0, y1 = self.ys[i], self.ys[i + 1]
        d0, d1 = self.yps[i] * self.step, self.yps[i + 1] * self.step
        h00 = (1 + 2 * s) * (1 - s) ** 2
        h10 = s * (1 - s) ** 2
        h01 = s * s * (3 - 2 * s)
        h11 = s * s * (s - 1)
        return float(h00 * y0 + h10 * d0 + h01 * y1 + h11 * d1)


def _rk4_run(
    rhs: Callable[[float, float, float], float], y0: float, yp0: float, t_end: float, steps: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray, bool]:
    h = t_end / steps
    ts = np.linspace(0.0, t_end, steps + 1)
    ys = np.empty(steps + 1)
    yps = np.empty(steps + 1)
    y, v = float(y0), float(yp0)
    ys[0], yps[0] = y, v
    for i in range(steps):
        t = ts[i]
        try:
            # near blow-up the stage evaluations themselves can overflow
            # (float ** raises), so the guard must cover them too
            k1y, k1v = v, rhs(t, y, v)
            k2y, k2v = v + 0.5 * h * k1v, rhs(t + 0.5 * h, y + 0.5 * h * k1y, v + 0.5 * h * k1v)
            k3y, k3v = v + 0.5 * h * k2v, rhs(t + 0.5 * h, y + 0.5 * h * k2y, v + 0.5 * h * k2v)
            k4y, k4v = v + h * k3v, rhs(t + h, y + h * k3y, v + h * k3v)
            y += (h / 6.0) * (k1y + 2 * k2y + 2 * k3y + k4y)
            v += (h / 6.0) * (k1v + 2 * k2v + 2 * k3v + k4v)
        except OverflowError:
            return ts[: i + 1], ys[: i + 1], yps[: i + 1], True
        if not (math.isfinite(y) and math.isfinite(v)) or abs(y) > 1e100:
            return ts[: i + 1], ys[: i + 1], yps[: i + 1], True
        ys[i + 1], yps[i + 1] = y, v
    return ts, ys, yps, False


def rk4_solve(
    nonlinearity: PolyNonlinearity,
    forcing: Callable[[float], float],
    y0: NumberLike,
    yp0: NumberLike,
    t_end: float,
    step: float,
) -> Rk4Table:
    """Classical RK4 for y'' = N(y) + f(t) from (y(0), y'(0)).

    Runs at the requested step and at half the step; the returned table
    is the finer one, with est_error the worst disagreement on shared
    nodes.  Solution blowup truncates the table and sets the flag.
    """
    if step <= 0 or t_end <= 0:
        raise ValueError("need t_end > 0 and step > 0")

    def rhs(t: float, y: float, v: float) -> float:
        return nonlinearity(y) + float(forcing(t))

    steps = max(1, round(t_end / step))
    ts_c, ys_c, _, blew_c = _rk4_run(rhs, float(y0), float(yp0), t_end, steps)
    ts_f, ys_f, yps_f, blew_f = _rk4_run(rhs, float(y0), float(yp0), t_end, 2 * steps)
    shared = min(len(ys_c), (len(ys_f) + 1) // 2)
    est = float(np.max(np.abs(ys_c[:shared] - ys_f[: 2 * shared : 2]))) if shared else math.inf
    return Rk4Table(
        ts=ts_f,
        ys=ys_f,
        yps=yps_f,
        step=t_end / (2 * steps),
        est_error=est,
        blew_up=blew_c or blew_f,
    )


def taylor_oracle(
    nonlinearity: PolyNonlinearity,
    f0: NumberLike,
    init: Sequence[NumberLike],
    depth: int,
) -> list[Fraction]:
    """Exact Taylor coefficients of y'' = N(y) + f0 at 0, up to t^depth.

    Classical power-series recurrence: square (and higher powers of) the
    unknown series, shift by two with the factorial weights, all in
    rational arithmetic.  Coefficient n+2 only needs coefficients up to
    n, so the march is well founded.
    """
    if len(init) != 2:
        raise ValueError("init must be [y(0), y'(0)]")
    if depth < 1:
        raise ValueError("depth must be at least 1")
    a = [Fraction(init[0]), Fraction(init[1])]
    f0 = Fraction(f0)
    for n in range(depth - 1):
        rhs_n = f0 if n == 0 else Fraction(0)
        for power, coeff in nonlinearity.coeffs:
            rhs_n += coeff * _power_series_coeff(a, power, n)
        a.append(rhs_n / ((n + 1) * (n + 2)))
    return a[: depth + 1]


def _power_series_coeff(a: Sequence[Fraction], power: int, n: int) -> Fraction:
    """Coefficient of t^n in (sum a_i t^i)^power, exact."""
    if power == 0:
        return Fraction(1) if n == 0 else Fraction(0)
    coeffs = [Fraction(1)] + [Fraction(0)] * n
    for _ in range(power):
        nxt = [Fraction(0)] * (n + 1)
        for i, ci in enumerate(coeffs):
            if ci == 0:
                continue
            for j in range(n + 1 - i):
                if j < len(a) and a[j] != 0:
                    nxt[i + j] += ci * a[j]
        coeffs = nxt
    return coeffs[n]
