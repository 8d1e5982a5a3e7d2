"""Command-line surface: solve, evaluate, figure data, oracle checks.

Verbs:

* ``solve``   writes the symbolic series (text and JSON) plus diagnostics.
* ``eval``    writes ``eval.csv`` with the partial sum on the grid.
* ``figure1`` writes ``figure1.csv``: the approximate solutions for the
  configured alpha sweep next to the classical (alpha = 1) RK4 reference.
* ``check``   runs the oracle cross-validation battery and prints a
  pass/fail table; no config needed.

Exit codes: 0 success, 2 configuration problem, 3 numeric failure
(blow-up or non-finite values).  Output files are byte-deterministic for
a given config: floats are rendered with repr, which is the shortest
round-trip form.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction
from typing import Callable, Sequence

from .adomian import PolyNonlinearity
from .config import ConfigError, RunConfig, load_config
from .gammafn import gamma
from .oracles import gl_derivative, quad_jumarie_integral, rk4_solve, taylor_oracle
from .series import FracSeries
from .solver import adm_iterate, residual

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3


class NumericFailure(Exception):
    """Evaluation produced a non-finite value or the reference blew up."""


def nonlinearity_text(n: PolyNonlinearity) -> str:
    """Render back to the config grammar, e.g. ``1*y^2``."""
    if n.is_zero:
        return ""
    pieces = []
    for power, coeff in n.coeffs:
        if power == 0:
            pieces.append(str(coeff))
        elif power == 1:
            pieces.append(f"{coeff}*y")
        else:
            pieces.append(f"{coeff}*y^{power}")
    return " + ".join(pieces).replace("+ -", "- ")


def forcing_text(terms: tuple[tuple[int, Fraction], ...]) -> str:
    if not terms:
        return "0"
    if len(terms) == 1 and terms[0][0] == 0:
        return str(terms[0][1])
    return ", ".join(f"{grade}:{coeff}" for grade, coeff in terms)


def _fraction_json(value: Fraction) -> list[int]:
    return [value.numerator, value.denominator]


def _write(path: str, content: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(content)
    print(f"wrote {path}")


def _grid(config: RunConfig) -> list[float]:
    t_start, t_end, points = config.eval_grid
    return [t_start + (t_end - t_start) * i / (points - 1) for i in range(points)]


def _evaluate_series(series: FracSeries, alpha: float, ts: Sequence[float]) -> list[float]:
    values = []
    for t in ts:
        try:
            y = series.evaluate(alpha, t)
        except OverflowError as exc:
            raise NumericFailure(f"series evaluation overflowed at t={t!r}") from exc
        if not math.isfinite(y):
            raise NumericFailure(f"series evaluation is non-finite at t={t!r}")
        values.append(y)
    return values


def cmd_solve(config: RunConfig) -> int:
    problem = config.problem()
    solution = adm_iterate(problem, config.iterations)
    defect = residual(problem, solution)

    lines = [
        f"equation: D^{config.n}a y = N(y) + f  (order {config.n} in steps of alpha)",
        f"alpha = {config.alpha!r}",
        f"N = {nonlinearity_text(config.nonlinearity) or '0'}",
        f"f = {forcing_text(config.forcing_terms)}",
        f"init = {', '.join(str(v) for v in config.init)}",
        f"iterations = {config.iterations}",
        f"max_grade = {config.max_grade}",
        "",
    ]
    for k, y in enumerate(solution.ys):
        lines.append(f"y_{k} = {y.to_text()}")
    lines += [
        "",
        f"partial_sum = {solution.partial.to_text()}",
        "",
        f"valid_grade = {solution.valid_grade}",
        f"truncated = {'yes' if solution.truncated else 'no'}",
        f"residual_lowest_grade = {defect.lowest_grade if defect.lowest_grade is not None else 'none'}",
        "",
    ]

    payload = {
        "alpha": config.alpha,
        "n": config.n,
        "nonlinearity": [[power, _fraction_json(coeff)] for power, coeff in config.nonlinearity.coeffs],
        "forcing": [[grade, _fraction_json(coeff)] for grade, coeff in config.forcing_terms],
        "init": [_fraction_json(value) for value in config.init],
        "iterations": config.iterations,
        "max_grade": config.max_grade,
        "valid_grade": solution.valid_grade,
        "truncated": solution.truncated,
        "residual_lowest_grade": defect.lowest_grade,
        "ys": [y.to_json() for y in solution.ys],
        "ys_text": [y.to_text() for y in solution.ys],
        "partial": solution.partial.to_json(),
        "partial_text": solution.partial.to_text(),
    }

    os.makedirs(config.out_dir, exist_ok=True)
    _write(os.path.join(config.out_dir, "solution.txt"), "\n".join(lines))
    _write(
        os.path.join(config.out_dir, "solution.json"),
        json.dumps(payload, indent=2, sort_keys=True) + "\n",
    )
    return EXIT_OK


def cmd_eval(config: RunConfig) -> int:
    problem = config.problem()
    solution = adm_iterate(problem, config.iterations)
    ts = _grid(config)
    ys = _evaluate_series(solution.partial, config.alpha, ts)
    rows = ["t,y_approx"]
    rows += [f"{t!r},{y!r}" for t, y in zip(ts, ys)]
    os.makedirs(config.out_dir, exist_ok=True)
    _write(os.path.join(config.out_dir, "eval.csv"), "\n".join(rows) + "\n")
    return EXIT_OK


def cmd_figure1(config: RunConfig) -> int:
    if config.n != 2:
        raise ConfigError(
            "problem", "n", f"figure data needs a second-order problem (n = 2), got {config.n}"
        )
    ts = _grid(config)
    t_end = config.eval_grid[1]

    columns: list[list[float]] = []
    for alpha in config.alphas:
        problem = config.problem(alpha=alpha)
        solution = adm_iterate(problem, config.iterations)
        columns.append(_evaluate_series(solution.partial, alpha, ts))

    forcing = FracSeries(dict(config.forcing_terms), max_grade=config.max_grade)
    table = rk4_solve(
        config.nonlinearity,
        lambda t: forcing.evaluate(1.0, t),
        float(config.init[0]),
        float(config.init[1]),
        t_end,
        step=t_end / 1024.0,
    )
    if table.blew_up:
        raise NumericFailure("classical reference solution blew up before t_end")
    reference = [table.value_at(t) for t in ts]

    header = "t," + ",".join(f"y_alpha_{alpha:g}" for alpha in config.alphas) + ",y_exact_rk4"
    rows = [header]
    for i, t in enumerate(ts):
        cells = [repr(t)] + [repr(col[i]) for col in columns] + [repr(reference[i])]
        rows.append(",".join(cells))
    os.makedirs(config.out_dir, exist_ok=True)
    _write(os.path.join(config.out_dir, "figure1.csv"), "\n".join(rows) + "\n")
    return EXIT_OK


def _check_rows() -> list[tuple[str, float, float, float]]:
    """(name, value, reference, tolerance) for the cross-validation table."""
    rows: list[tuple[str, float, float, float]] = []

    report = quad_jumarie_integral(lambda tau: 1.0, 0.5, 1.0)
    rows.append(("integral of 1, alpha=0.5", report.value, 1.0 / gamma(1.5), max(1e-6, 10 * report.est_error)))
    report = quad_jumarie_integral(lambda tau: 1.0, 1.0, 1.0)
    rows.append(("integral of 1, alpha=1", report.value, 1.0, max(1e-6, 10 * report.est_error)))

    for k in (1, 2, 3):
        for alpha in (0.3, 0.5, 0.9):
            report = quad_jumarie_integral(lambda tau, p=k * alpha: tau**p, alpha, 1.0)
            reference = gamma(1 + k * alpha) / gamma(1 + (k + 1) * alpha)
            rows.append(
                (
                    f"integral term rule, k={k}, alpha={alpha}",
                    report.value,
                    reference,
                    max(1e-6, 10 * report.est_error),
                )
            )

    for alpha in (0.3, 0.5, 0.7):
        report = gl_derivative(lambda t: 3.7, alpha, 0.5)
        rows.append((f"derivative of constant, alpha={alpha}", report.value, 0.0, 1e-6))

    report = gl_derivative(lambda t: t**0.5 / gamma(1.5), 0.5, 0.5)
    rows.append(("derivative of t^a/G(1+a), alpha=0.5", report.value, 1.0, max(1e-4, 10 * report.est_error)))
    report = gl_derivative(lambda t: t**2, 0.9, 1.0)
    rows.append(("derivative of t^2, alpha=0.9", report.value, 2.0 / gamma(3 - 0.9), max(1e-3, 10 * report.est_error)))

    square = PolyNonlinearity.from_terms({2: 1})
    coeffs = taylor_oracle(square, 1, [0, 1], 16)
    table = rk4_solve(square, lambda t: 1.0, 0, 1, 0.5, step=1 / 256)
    worst = 0.0
    for i in range(11):
        t = 0.05 * i
        series_value = sum(float(c) * t**k for k, c in enumerate(coeffs))
        worst = max(worst, abs(table.value_at(t) - series_value))
    rows.append(("rk4 vs series recurrence, y''=y^2+1 on [0,0.5]", worst, 0.0, 1e-6))

    expected = [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(0), Fraction(1, 12), Fraction(1, 20), Fraction(1, 120)]
    exact = 0.0 if coeffs[:7] == expected else 1.0
    rows.append(("series recurrence prefix, y''=y^2+1", exact, 0.0, 0.0))
    return rows


def cmd_check() -> int:
    rows = _check_rows()
    name_width = max(len(name) for name, *_ in rows)
    print(f"{'check':<{name_width}}  {'value':>22}  {'reference':>22}  {'error':>10}  {'tol':>9}  status")
    failures = 0
    for name, value, reference, tol in rows:
        error = abs(value - reference)
        ok = error <= tol
        failures += 0 if ok else 1
        print(
            f"{name:<{name_width}}  {value:>22.15g}  {reference:>22.15g}  "
            f"{error:>10.3g}  {tol:>9.3g}  {'PASS' if ok else 'FAIL'}"
        )
    print(f"{len(rows) - failures}/{len(rows)} checks passed")
    return EXIT_OK if failures == 0 else EXIT_NUMERIC


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracadm",
        description="Decomposition solver for fractional initial-value problems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    specs = [
        ("solve", "write the symbolic series solution and diagnostics"),
        ("eval", "evaluate the partial sum on the configured grid"),
        ("figure1", "emit the alpha-sweep curves next to the classical RK4 reference"),
    ]
    for name, help_text in specs:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--config", required=True, help="path to the run file")
        cmd.add_argument("--out", help="output directory (overrides [output] dir)")
        cmd.add_argument("--iterations", type=int, help="iteration count override")
        cmd.add_argument("--alpha", type=float, help="fractional order override")
    sub.add_parser("check", help="run the oracle cross-validation battery")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "check":
        return cmd_check()
    try:
        config = load_config(args.config).with_overrides(
            iterations=args.iterations, alpha=args.alpha, out_dir=args.out
        )
        handler: Callable[[RunConfig], int] = {
            "solve": cmd_solve,
            "eval": cmd_eval,
            "figure1": cmd_figure1,
        }[args.command]
        return handler(config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NumericFailure as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    raise SystemExit(main())
