"""Fractional power series: finite sums of c_k * t^(k*alpha).

The problem class treated here closes over exponents that are integer
multiples of a single order alpha, so a series is a map from the integer
grade k to an exact :class:`~fracadm.coeffs.GammaCoefficient`.  Arithmetic
is exact; grades above ``max_grade`` are dropped and the loss is recorded
in a sticky ``truncated`` flag so downstream diagnostics stay honest.

The per-term operators:

* order-alpha integral:    c * t^(k a)  ->  c * G(1+ka)/G(1+(k+1)a) * t^((k+1)a)
* order-alpha derivative:  c * t^(k a)  ->  c * G(1+ka)/G(1+(k-1)a) * t^((k-1)a)
  for k >= 1, while grade-0 terms map to zero (the derivative of a
  constant vanishes for this operator, unlike the unmodified
  Riemann-Liouville one).

The integral rule includes the 1/G(1+a) normalization of the inverse
operator, which is what makes the two rules exact inverses grade by
grade.  Both rules are cross-checked against independent numeric oracles
in the test suite.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .coeffs import GammaCoefficient, RationalLike

DEFAULT_MAX_GRADE = 12

CoeffLike = Union[GammaCoefficient, Fraction, int, str]


def _as_coeff(value: CoeffLike) -> GammaCoefficient:
    if isinstance(value, GammaCoefficient):
        return value
    return GammaCoefficient.from_rational(value)


class FracSeries:
    """Finite fractional power series sum_k c_k * t^(k*alpha).

    Terms with zero coefficient are never stored; ``max_grade`` is the
    inclusive truncation bound.  Equality compares terms and max_grade
    structurally; the ``truncated`` flag is diagnostic metadata and does
    not participate.
    """

    __slots__ = ("_terms", "max_grade", "truncated")

    def __init__(
        self,
        terms: Union[Mapping[int, CoeffLike], Iterable[tuple[int, CoeffLike]]] = (),
        max_grade: int = DEFAULT_MAX_GRADE,
        truncated: bool = False,
    ):
        if max_grade < 0:
            raise ValueError(f"max_grade must be nonnegative, got {max_grade}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        stored: dict[int, GammaCoefficient] = {}
        for grade, coeff in items:
            if not 0 <= grade <= max_grade:
                raise ValueError(
                    f"grade {grade} outside [0, {max_grade}]; arithmetic truncates, "
                    "construction does not"
                )
            c = _as_coeff(coeff)
            if not c.is_zero:
                stored[grade] = stored.get(grade, GammaCoefficient.zero()) + c
        self._terms = {k: c for k, c in stored.items() if not c.is_zero}
        self.max_grade = max_grade
        self.truncated = truncated

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, max_grade: int = DEFAULT_MAX_GRADE) -> "FracSeries":
        return cls((), max_grade)

    @classmethod
    def constant(cls, value: CoeffLike, max_grade: int = DEFAULT_MAX_GRADE) -> "FracSeries":
        return cls([(0, value)], max_grade)

    @classmethod
    def monomial(
        cls, grade: int, coeff: CoeffLike = 1, max_grade: int = DEFAULT_MAX_GRADE
    ) -> "FracSeries":
        return cls([(grade, coeff)], max_grade)

    # -- inspection --------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def grades(self) -> tuple[int, ...]:
        return tuple(sorted(self._terms))

    @property
    def lowest_grade(self) -> int | None:
        return min(self._terms) if self._terms else None

    @property
    def top_grade(self) -> int | None:
        return max(self._terms) if self._terms else None

    def coeff(self, grade: int) -> GammaCoefficient:
        return self._terms.get(grade, GammaCoefficient.zero())

    def terms(self) -> tuple[tuple[int, GammaCoefficient], ...]:
        return tuple(sorted(self._terms.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FracSeries):
            return NotImplemented
        return self._terms == other._terms and self.max_grade == other.max_grade

    def __repr__(self) -> str:
        flag = ", truncated" if self.truncated else ""
        return f"FracSeries({self.to_text()!r}, max_grade={self.max_grade}{flag})"

    # -- arithmetic --------------------------------------------------

    def _rebuild(
        self, terms: dict[int, GammaCoefficient], max_grade: int, truncated: bool
    ) -> "FracSeries":
        out = FracSeries.zero(max_grade)
        out._terms = {k: c for k, c in terms.items() if not c.is_zero}
        out.truncated = truncated
        return out

    def __add__(self, other: "FracSeries") -> "FracSeries":
        if not isinstance(other, FracSeries):
            return NotImplemented
        cap = min(self.max_grade, other.max_grade)
        truncated = self.truncated or other.truncated
        out: dict[int, GammaCoefficient] = {}
        for series in (self, other):
            for grade, coeff in series._terms.items():
                if grade > cap:
                    truncated = True  # the tighter cap drops a live term
                    continue
                out[grade] = out.get(grade, GammaCoefficient.zero()) + coeff
        return self._rebuild(out, cap, truncated)

    def __neg__(self) -> "FracSeries":
        return self._rebuild(
            {k: -c for k, c in self._terms.items()}, self.max_grade, self.truncated
        )

    def __sub__(self, other: "FracSeries") -> "FracSeries":
        if not isinstance(other, FracSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["FracSeries", CoeffLike]) -> "FracSeries":
        if not isinstance(other, FracSeries):
            return self.scale(other)
        cap = min(self.max_grade, other.max_grade)
        truncated = self.truncated or other.truncated
        kept: dict[int, GammaCoefficient] = {}
        overflow: dict[int, GammaCoefficient] = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                grade = ka + kb
                bucket = kept if grade <= cap else overflow
                bucket[grade] = bucket.get(grade, GammaCoefficient.zero()) + ca * cb
        if any(not c.is_zero for c in overflow.values()):
            truncated = True
        return self._rebuild(kept, cap, truncated)

    __rmul__ = __mul__

    def scale(self, factor: CoeffLike) -> "FracSeries":
        c = _as_coeff(factor)
        return self._rebuild(
            {k: coeff * c for k, coeff in self._terms.items()},
            self.max_grade,
            self.truncated,
        )

    def pow_int(self, exponent: int) -> "FracSeries":
        if exponent < 0:
            raise ValueError("only nonnegative integer powers are defined")
        result = FracSeries.constant(1, self.max_grade)
        for _ in range(exponent):
            result = result * self
        return result

    # -- evaluation and serialization --------------------------------

    def evaluate(self, alpha: float, t: float) -> float:
        """sum_k c_k(alpha) * t^(k*alpha), with 0^0 = 1 at the origin."""
        if t < 0:
            raise ValueError(f"t must be nonnegative, got {t!r}")
        total = 0.0
        for grade, coeff in sorted(self._terms.items()):
            power = 1.0 if grade == 0 else t ** (grade * alpha)
            total += coeff.evaluate(alpha) * power
        return total

    def to_text(self) -> str:
        """Readable rendering, e.g. ``t^a/G(1+a) + t^2a/G(1+2a)``."""
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for grade in sorted(self._terms):
            for atom in self._terms[grade].atoms:
                sign = " - " if atom.rational < 0 else " + "
                text = _render_term(grade, atom)
                if not pieces:
                    pieces.append("-" + text if atom.rational < 0 else text)
                else:
                    pieces.append(sign + text)
        return "".join(pieces)

    def to_json(self) -> dict:
        return {
            "max_grade": self.max_grade,
            "terms": [[k, c.to_json()] for k, c in self.terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "FracSeries":
        return cls(
            [(k, GammaCoefficient.from_json(c)) for k, c in data["terms"]],
            max_grade=data["max_grade"],
        )

    def __str__(self) -> str:
        return self.to_text()


def _render_term(grade, atom) -> str:
    """One atom of one term in display form: numerator/denominator split."""
    rational = abs(atom.rational)
    numer: list[str] = []
    denom: list[str] = []
    if rational.numerator != 1:
        numer.append(str(rational.numerator))
    if rational.denominator != 1:
        denom.append(str(rational.denominator))
    for k, e in atom.factors:
        arg = "1+a" if k == 1 else f"1+{k}a"
        body = f"G({arg})" if abs(e) == 1 else f"G({arg})^{abs(e)}"
        (numer if e > 0 else denom).append(body)
    if grade > 0:
        numer.append("t^a" if grade == 1 else f"t^{grade}a")
    head = "*".join(numer) if numer else "1"
    if not denom:
        return head
    tail = denom[0] if len(denom) == 1 else "(" + "*".join(denom) + ")"
    return f"{head}/{tail}"


def jumarie_integral(series: FracSeries, times: int = 1) -> FracSeries:
    """Normalized order-alpha integral applied ``times`` times, per term.

    Terms pushed past max_grade are dropped and flagged as truncation.
    """
    out = series
    for _ in range(times):
        terms: dict[int, GammaCoefficient] = {}
        truncated = out.truncated
        for grade, coeff in out._terms.items():
            if grade + 1 > out.max_grade:
                truncated = True
                continue
            ratio = GammaCoefficient.gamma_factor(grade, 1) * GammaCoefficient.gamma_factor(
                grade + 1, -1
            )
            terms[grade + 1] = coeff * ratio
        out = out._rebuild(terms, out.max_grade, truncated)
    return out


def jumarie_derivative(series: FracSeries, times: int = 1) -> FracSeries:
    """Order-alpha derivative applied ``times`` times, per term.

    Grade-0 terms are annihilated; this is the constant-kills property
    that distinguishes the operator from the unmodified one.
    """
    out = series
    for _ in range(times):
        terms: dict[int, GammaCoefficient] = {}
        for grade, coeff in out._terms.items():
            if grade == 0:
                continue
            ratio = GammaCoefficient.gamma_factor(grade, 1) * GammaCoefficient.gamma_factor(
                grade - 1, -1
            )
            terms[grade - 1] = coeff * ratio
        out = out._rebuild(terms, out.max_grade, out.truncated)
    return out
