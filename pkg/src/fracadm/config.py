"""Run configuration: INI-style problem files and their validation.

A run file has three sections.  ``[problem]`` holds the equation data
(order ``n``, ``alpha``, the nonlinearity ``N`` in a tiny power-term
grammar like ``1*y^2``, the forcing ``f``, and the ``init`` list of
fractional initial values).  ``[run]`` holds iteration count, series
grade cap, evaluation grid, and the alpha sweep list.  ``[output]``
holds the artifact directory.  Everything except the problem data has
defaults.

Parsing failures raise :class:`ConfigError` carrying the section and
field, so the CLI can print a pinpointed diagnostic.
"""

from __future__ import annotations

import configparser
import re
from dataclasses import dataclass, replace
from fractions import Fraction

from .adomian import PolyNonlinearity
from .series import DEFAULT_MAX_GRADE, FracSeries
from .solver import ProblemSpec

DEFAULT_EVAL_GRID = (0.0, 1.0, 101)
DEFAULT_ALPHAS = (0.9, 0.99)

_KNOWN_FIELDS = {
    "problem": {"n", "alpha", "N", "f", "init"},
    "run": {"iterations", "max_grade", "eval_grid", "alphas"},
    "output": {"dir"},
}


class ConfigError(Exception):
    """Invalid run configuration, located to a section and field."""

    def __init__(self, section: str, field: str, message: str) -> None:
        self.section = section
        self.field = field
        super().__init__(f"[{section}] {field}: {message}")


@dataclass(frozen=True)
class RunConfig:
    """Validated run settings; `problem()` instantiates the solver input."""

    n: int
    alpha: float
    nonlinearity: PolyNonlinearity
    forcing_terms: tuple[tuple[int, Fraction], ...]
    init: tuple[Fraction, ...]
    iterations: int = 1
    max_grade: int = DEFAULT_MAX_GRADE
    eval_grid: tuple[float, float, int] = DEFAULT_EVAL_GRID
    alphas: tuple[float, ...] = DEFAULT_ALPHAS
    out_dir: str = "out"

    def problem(self, alpha: float | None = None) -> ProblemSpec:
        """Build the solver problem, optionally at a substituted alpha."""
        forcing = FracSeries(dict(self.forcing_terms), max_grade=self.max_grade)
        return ProblemSpec.make(
            n=self.n,
            alpha=self.alpha if alpha is None else alpha,
            nonlinearity=self.nonlinearity,
            forcing=forcing,
            init=self.init,
        )

    def with_overrides(
        self,
        iterations: int | None = None,
        alpha: float | None = None,
        out_dir: str | None = None,
    ) -> "RunConfig":
        """Apply command-line overrides, re-running the relevant checks."""
        cfg = self
        if iterations is not None:
            if iterations < 0:
                raise ConfigError("run", "iterations", f"must be >= 0, got {iterations}")
            cfg = replace(cfg, iterations=iterations)
        if alpha is not None:
            if not 0.0 < alpha <= 1.0:
                raise ConfigError(
                    "problem", "alpha", f"fractional order must lie in (0, 1], got {alpha}"
                )
            cfg = replace(cfg, alpha=alpha)
        if out_dir is not None:
            cfg = replace(cfg, out_dir=out_dir)
        return cfg


def _strip(value: str) -> str:
    value = value.strip()
    if len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'":
        value = value[1:-1].strip()
    return value


_TERM_RE = re.compile(r"^(?:(\d+)\*)?y(?:\^(\d+))?$|^(\d+)$")


def parse_nonlinearity(text: str) -> PolyNonlinearity:
    """Parse the power-term grammar: signed terms like ``2*y^3``, ``y``, ``5``.

    Alphabet is digits, ``*``, ``y``, ``^``, ``+``, ``-``; an empty
    string is the zero nonlinearity.
    """
    compact = _strip(text).replace(" ", "")
    if not compact:
        return PolyNonlinearity.zero()
    if compact[0] not in "+-":
        compact = "+" + compact
    terms: list[tuple[int, Fraction]] = []
    for match in re.finditer(r"([+-])([^+-]+)", compact):
        sign = 1 if match.group(1) == "+" else -1
        body = match.group(2)
        parsed = _TERM_RE.match(body)
        if parsed is None:
            raise ValueError(f"unrecognized term {body!r}")
        if parsed.group(3) is not None:  # bare integer: constant term
            terms.append((0, Fraction(sign * int(parsed.group(3)))))
            continue
        coeff = int(parsed.group(1)) if parsed.group(1) else 1
        power = int(parsed.group(2)) if parsed.group(2) else 1
        terms.append((power, Fraction(sign * coeff)))
    consumed = sum(len(m.group(0)) for m in re.finditer(r"([+-])([^+-]+)", compact))
    if consumed != len(compact):
        raise ValueError(f"trailing or dangling operator in {text!r}")
    return PolyNonlinearity.from_terms(terms)


def parse_forcing(text: str) -> tuple[tuple[int, Fraction], ...]:
    """Forcing as ``grade:coeff`` pairs, or a bare number for a constant.

    ``f = 1`` means the constant 1; ``f = 0:1, 2:-3/2`` lists terms by
    grade.  Coefficients are exact rationals (``3/2``, ``0.25``).
    """
    compact = _strip(text)
    if not compact:
        return ()
    merged: dict[int, Fraction] = {}
    if ":" not in compact:
        value = Fraction(compact)
        return ((0, value),) if value != 0 else ()
    for piece in compact.split(","):
        piece = piece.strip()
        if not piece:
            continue
        grade_text, _, coeff_text = piece.partition(":")
        grade = int(grade_text.strip())
        if grade < 0:
            raise ValueError(f"grade must be nonnegative, got {grade}")
        merged[grade] = merged.get(grade, Fraction(0)) + Fraction(coeff_text.strip())
    return tuple(sorted((g, c) for g, c in merged.items() if c != 0))


def _get(parser: configparser.ConfigParser, section: str, field: str, default: str | None = None) -> str:
    if parser.has_option(section, field):
        return _strip(parser.get(section, field))
    if default is None:
        raise ConfigError(section, field, "required field is missing")
    return default


def load_config(path: str) -> RunConfig:
    """Read and validate a run file; raises ConfigError on any defect."""
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str  # keep case: n (order) and N (nonlinearity) differ
    try:
        with open(path, "r", encoding="utf-8") as handle:
            parser.read_file(handle)
    except OSError as exc:
        raise ConfigError("file", path, f"cannot read: {exc.strerror or exc}") from exc
    except configparser.Error as exc:
        raise ConfigError("file", path, f"malformed: {exc}") from exc

    for section in parser.sections():
        if section not in _KNOWN_FIELDS:
            raise ConfigError(section, "-", "unknown section")
        for field in parser.options(section):
            if field not in _KNOWN_FIELDS[section]:
                raise ConfigError(section, field, "unknown field")
    if not parser.has_section("problem"):
        raise ConfigError("problem", "-", "section is missing")

    try:
        n = int(_get(parser, "problem", "n"))
    except ValueError as exc:
        raise ConfigError("problem", "n", f"not an integer: {exc}") from exc
    if n < 1:
        raise ConfigError("problem", "n", f"equation order count must be >= 1, got {n}")

    try:
        alpha = float(_get(parser, "problem", "alpha"))
    except ValueError as exc:
        raise ConfigError("problem", "alpha", f"not a number: {exc}") from exc
    if not 0.0 < alpha <= 1.0:
        raise ConfigError(
            "problem", "alpha", f"fractional order must lie in (0, 1], got {alpha}"
        )

    try:
        nonlinearity = parse_nonlinearity(_get(parser, "problem", "N", ""))
    except ValueError as exc:
        raise ConfigError("problem", "N", str(exc)) from exc

    try:
        forcing_terms = parse_forcing(_get(parser, "problem", "f", ""))
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError("problem", "f", str(exc)) from exc

    init_text = _get(parser, "problem", "init")
    try:
        init = tuple(Fraction(piece.strip()) for piece in init_text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError("problem", "init", str(exc)) from exc
    if len(init) != n:
        raise ConfigError(
            "problem", "init", f"expected {n} initial values (one per derivative), got {len(init)}"
        )

    try:
        iterations = int(_get(parser, "run", "iterations", "1"))
    except ValueError as exc:
        raise ConfigError("run", "iterations", f"not an integer: {exc}") from exc
    if iterations < 0:
        raise ConfigError("run", "iterations", f"must be >= 0, got {iterations}")

    try:
        max_grade = int(_get(parser, "run", "max_grade", str(DEFAULT_MAX_GRADE)))
    except ValueError as exc:
        raise ConfigError("run", "max_grade", f"not an integer: {exc}") from exc
    if max_grade < 1:
        raise ConfigError("run", "max_grade", f"must be >= 1, got {max_grade}")

    grid_text = _get(parser, "run", "eval_grid", "")
    if grid_text:
        pieces = [piece.strip() for piece in grid_text.split(",")]
        if len(pieces) != 3:
            raise ConfigError("run", "eval_grid", "expected t_start, t_end, points")
        try:
            eval_grid = (float(pieces[0]), float(pieces[1]), int(pieces[2]))
        except ValueError as exc:
            raise ConfigError("run", "eval_grid", f"not numeric: {exc}") from exc
    else:
        eval_grid = DEFAULT_EVAL_GRID
    t_start, t_end, points = eval_grid
    if t_start < 0:
        raise ConfigError("run", "eval_grid", f"t_start must be >= 0, got {t_start}")
    if t_end <= t_start:
        raise ConfigError("run", "eval_grid", f"need t_end > t_start, got {t_end} <= {t_start}")
    if points < 2:
        raise ConfigError("run", "eval_grid", f"points must be >= 2, got {points}")

    alphas_text = _get(parser, "run", "alphas", "")
    if alphas_text:
        try:
            alphas = tuple(float(piece.strip()) for piece in alphas_text.split(","))
        except ValueError as exc:
            raise ConfigError("run", "alphas", f"not numeric: {exc}") from exc
    else:
        alphas = DEFAULT_ALPHAS
    for value in alphas:
        if not 0.0 < value <= 1.0:
            raise ConfigError(
                "run", "alphas", f"fractional order must lie in (0, 1], got {value}"
            )

    out_dir = _get(parser, "output", "dir", "out")

    for grade, _ in forcing_terms:
        if grade > max_grade:
            raise ConfigError(
                "problem", "f", f"grade {grade} exceeds max_grade {max_grade}"
            )

    return RunConfig(
        n=n,
        alpha=alpha,
        nonlinearity=nonlinearity,
        forcing_terms=forcing_terms,
        init=init,
        iterations=iterations,
        max_grade=max_grade,
        eval_grid=(t_start, t_end, points),
        alphas=alphas,
        out_dir=out_dir,
    )
