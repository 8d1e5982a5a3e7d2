"""Exact coefficient algebra for Gamma-factor rationals.

Fractional integration of monomials t^(k*alpha) produces coefficients
that are sums of rational multiples of products Gamma(1+k*alpha)^e.
These are kept exact: a :class:`GammaAtom` is one such product with a
rational prefactor, a :class:`GammaCoefficient` is a canonically ordered
sum of atoms.  Equality is structural equality of the canonical form;
floating-point evaluation at a concrete alpha is a separate, late step
through :func:`fracadm.gammafn.gamma`.

Rationals are :class:`fractions.Fraction`, so repeated products of small
rationals never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .gammafn import gamma

RationalLike = Union[Fraction, int, str]

#: factor multiset as a sorted tuple of (grade k, exponent e), meaning
#: the product of Gamma(1+k*alpha)**e over the entries
FactorKey = tuple[tuple[int, int], ...]


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _normalize_factors(factors: Iterable[tuple[int, int]]) -> FactorKey:
    merged: dict[int, int] = {}
    for grade, exponent in factors:
        if grade < 0:
            raise ValueError(f"factor grade must be nonnegative, got {grade}")
        if grade == 0:
            continue  # Gamma(1) = 1 is absorbed into the rational
        merged[grade] = merged.get(grade, 0) + exponent
    return tuple(sorted((k, e) for k, e in merged.items() if e != 0))


@dataclass(frozen=True)
class GammaAtom:
    """rational * prod Gamma(1+k*alpha)^e, with a canonical factor tuple.

    Grade 0 never appears in ``factors`` and the rational is nonzero;
    construct through :meth:`make` unless the inputs are already
    canonical.
    """

    rational: Fraction
    factors: FactorKey = ()

    def __post_init__(self) -> None:
        if not isinstance(self.rational, Fraction) or self.rational == 0:
            raise ValueError("atom rational must be a nonzero Fraction")
        if self.factors != _normalize_factors(self.factors) or any(
            k == 0 or e == 0 for k, e in self.factors
        ):
            raise ValueError(f"non-canonical factor tuple: {self.factors!r}")

    @classmethod
    def make(cls, rational: RationalLike, factors: Iterable[tuple[int, int]] = ()) -> "GammaAtom":
        return cls(_as_fraction(rational), _normalize_factors(factors))

    def evaluate(self, alpha: float) -> float:
        value = float(self.rational)
        for grade, exponent in self.factors:
            value *= gamma(1.0 + grade * alpha) ** exponent
        return value


def _merge_atoms(atoms: Iterable[GammaAtom]) -> tuple[GammaAtom, ...]:
    by_key: dict[FactorKey, Fraction] = {}
    for atom in atoms:
        by_key[atom.factors] = by_key.get(atom.factors, Fraction(0)) + atom.rational
    return tuple(
        GammaAtom(rational, key)
        for key, rational in sorted(by_key.items())
        if rational != 0
    )


@dataclass(frozen=True)
class GammaCoefficient:
    """Canonical sum of :class:`GammaAtom`; the empty sum is zero.

    Supports exact ring arithmetic (`+`, `-`, `*`), multiplication by
    plain rationals, and numeric evaluation at a concrete alpha.
    """

    atoms: tuple[GammaAtom, ...] = ()

    def __post_init__(self) -> None:
        keys = [atom.factors for atom in self.atoms]
        if keys != sorted(set(keys)):
            raise ValueError("atoms must be sorted with distinct factor tuples")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "GammaCoefficient":
        return cls()

    @classmethod
    def one(cls) -> "GammaCoefficient":
        return cls.from_rational(1)

    @classmethod
    def from_rational(cls, value: RationalLike) -> "GammaCoefficient":
        q = _as_fraction(value)
        if q == 0:
            return cls()
        return cls((GammaAtom(q),))

    @classmethod
    def gamma_factor(cls, grade: int, exponent: int = 1) -> "GammaCoefficient":
        """Gamma(1+grade*alpha)**exponent as a coefficient."""
        return cls((GammaAtom.make(1, [(grade, exponent)]),))

    @classmethod
    def from_atoms(cls, atoms: Iterable[GammaAtom]) -> "GammaCoefficient":
        return cls(_merge_atoms(atoms))

    # -- ring arithmetic ---------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.atoms

    def __add__(self, other: "GammaCoefficient") -> "GammaCoefficient":
        if not isinstance(other, GammaCoefficient):
            return NotImplemented
        return GammaCoefficient(_merge_atoms(self.atoms + other.atoms))

    def __neg__(self) -> "GammaCoefficient":
        return GammaCoefficient(
            tuple(GammaAtom(-a.rational, a.factors) for a in self.atoms)
        )

    def __sub__(self, other: "GammaCoefficient") -> "GammaCoefficient":
        if not isinstance(other, GammaCoefficient):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["GammaCoefficient", RationalLike]) -> "GammaCoefficient":
        if isinstance(other, GammaCoefficient):
            products = [
                GammaAtom.make(a.rational * b.rational, a.factors + b.factors)
                for a in self.atoms
                for b in other.atoms
                if a.rational * b.rational != 0
            ]
            return GammaCoefficient(_merge_atoms(products))
        q = _as_fraction(other)
        if q == 0:
            return GammaCoefficient()
        return GammaCoefficient(
            tuple(GammaAtom(a.rational * q, a.factors) for a in self.atoms)
        )

    __rmul__ = __mul__

    # -- evaluation and serialization --------------------------------

    def evaluate(self, alpha: float) -> float:
        """Numeric value at a concrete alpha in (0, 1]."""
        if not 0.0 < alpha <= 1.0:
            raise ValueError(f"alpha must lie in (0, 1], got {alpha!r}")
        return sum((atom.evaluate(alpha) for atom in self.atoms), 0.0)

    def to_text(self) -> str:
        """Machine-facing form, e.g. ``2/1 * G(1+3a)^1 * G(1+2a)^-1``."""
        if not self.atoms:
            return "0"
        rendered = []
        for atom in self.atoms:
            parts = [f"{atom.rational.numerator}/{atom.rational.denominator}"]
            for grade, exponent in atom.factors:
                arg = "1+a" if grade == 1 else f"1+{grade}a"
                parts.append(f"G({arg})^{exponent}")
            rendered.append(" * ".join(parts))
        return " + ".join(rendered)

    def to_json(self) -> list[dict]:
        return [
            {
                "rational": [atom.rational.numerator, atom.rational.denominator],
                "factors": [[k, e] for k, e in atom.factors],
            }
            for atom in self.atoms
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "GammaCoefficient":
        atoms = []
        for entry in data:
            num, den = entry["rational"]
            atoms.append(
                GammaAtom.make(Fraction(num, den), [(k, e) for k, e in entry["factors"]])
            )
        return cls.from_atoms(atoms)

    def __str__(self) -> str:
        return self.to_text()
