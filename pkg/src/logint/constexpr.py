"""Exact rational combinations of a fixed set of transcendental constants."""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import Mapping, Union

import numpy as np

from logint import _kernels

Number = Union[int, Fraction]


class Atom(Enum):
    One = "1"
    Pi = "pi"
    PiSq = "pi^2"
    Ln2 = "ln2"
    PiLn2 = "pi*ln2"
    Catalan = "G"
    EulerGamma = "gamma"


ATOM_ORDER = tuple(Atom)


def catalan_float() -> float:
    """Catalan's constant from 64 averaged terms of sum (-1)^k/(2k+1)^2."""
    return _kernels.odd_square_alternating(1.0, _kernels.AVERAGED_TERMS)


def _atom_values() -> dict[Atom, float]:
    ln2 = math.log(2.0)
    return {
        Atom.One: 1.0,
        Atom.Pi: math.pi,
        Atom.PiSq: math.pi * math.pi,
        Atom.Ln2: ln2,
        Atom.PiLn2: math.pi * ln2,
        Atom.Catalan: catalan_float(),
        Atom.EulerGamma: float(np.euler_gamma),
    }


_ATOM_VALUES: dict[Atom, float] | None = None


def atom_value(atom: Atom) -> float:
    global _ATOM_VALUES
    if _ATOM_VALUES is None:
        _ATOM_VALUES = _atom_values()
    return _ATOM_VALUES[atom]


class ConstantExpr:
    """Sum of ``coefficient * atom`` with exact rational coefficients.

    Zero coefficients are never stored, so equality is equality of the
    coefficient maps.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Atom, Number] | None = None):
        clean = {}
        for atom, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[Atom(atom)] = c
        self._terms = {a: clean[a] for a in ATOM_ORDER if a in clean}

    @classmethod
    def of(cls, **coeffs: Number) -> "ConstantExpr":
        """``ConstantExpr.of(PiSq=Fraction(-1, 12))`` style constructor."""
        return cls({Atom[name]: c for name, c in coeffs.items()})

    @classmethod
    def rational(cls, value: Number) -> "ConstantExpr":
        return cls({Atom.One: value})

    @property
    def terms(self) -> dict[Atom, Fraction]:
        return dict(self._terms)

    def coefficient(self, atom: Atom) -> Fraction:
        return self._terms.get(atom, Fraction(0))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ConstantExpr.rational(other)
        if not isinstance(other, ConstantExpr):
            return NotImplemented
        merged = dict(self._terms)
        for atom, c in other._terms.items():
            merged[atom] = merged.get(atom, Fraction(0)) + c
        return ConstantExpr(merged)

    __radd__ = __add__

    def __neg__(self):
        return ConstantExpr({a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, k):
        if not isinstance(k, (int, Fraction)):
            return NotImplemented
        return ConstantExpr({a: c * k for a, c in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, k):
        if not isinstance(k, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / Fraction(k))

    def __eq__(self, other):
        if isinstance(other, ConstantExpr):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def to_float(self) -> float:
        return math.fsum(float(c) * atom_value(a) for a, c in self._terms.items())

    __float__ = to_float

    def to_json(self) -> dict[str, list[int]]:
        return {a.value: [c.numerator, c.denominator] for a, c in self._terms.items()}

    @classmethod
    def from_json(cls, atoms: Mapping[str, list[int]]) -> "ConstantExpr":
        return cls({Atom(k): Fraction(p, q) for k, (p, q) in atoms.items()})

    def symbolic(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for atom, c in self._terms.items():
            num, den = abs(c.numerator), c.denominator
            if atom is Atom.One:
                body = f"{num}"
            elif num == 1:
                body = atom.value
            else:
                body = f"{num}*{atom.value}"
            if den != 1:
                body += f"/{den}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"ConstantExpr({self.symbolic()})"

    def __str__(self):
        return self.symbolic()
