"""Factored rational integrands ``R(x)`` or ``R(x) ln x`` with poles off ``[0, inf)``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from logint.reduce import polynomial as P


class IntegrandSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        where = f" at position {position}"
        if text:
            where += f"\n  {text}\n  {' ' * position}^"
        super().__init__(message + where)
        self.position = position


class UnsupportedPoleError(ValueError):
    """A denominator factor has a root in ``[0, inf)`` or off the supported pole set."""

    def __init__(self, factor: str, reason: str):
        super().__init__(f"unsupported factor ({factor}): {reason}")
        self.factor = factor


def _merge(factors: Iterable[tuple[Fraction, int]]) -> tuple[tuple[Fraction, int], ...]:
    acc: dict[Fraction, int] = {}
    for a, m in factors:
        a = Fraction(a)
        if m < 1:
            raise ValueError(f"multiplicity must be positive, got {m}")
        if a <= 0:
            raise UnsupportedPoleError(str(a), "parameter must be positive")
        acc[a] = acc.get(a, 0) + int(m)
    return tuple(sorted(acc.items()))


def _frac_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class RationalIntegrand:
    """``numerator(x) / prod (x+a)^m prod (x^2+c)^m``, times ``ln x`` if ``has_log``.

    ``linear`` holds ``(a, m)`` pairs, ``quad`` holds ``(c, m)`` pairs where
    ``c = a^2`` is the (rational) square of the imaginary pole.  Both are
    merged and sorted, so equal integrands compare equal.
    """

    numerator: P.Poly
    linear: tuple[tuple[Fraction, int], ...] = ()
    quad: tuple[tuple[Fraction, int], ...] = ()
    has_log: bool = True

    def __post_init__(self):
        object.__setattr__(self, "numerator", P.poly(self.numerator))
        object.__setattr__(self, "linear", _merge(self.linear))
        object.__setattr__(self, "quad", _merge(self.quad))

    @classmethod
    def build(cls, numerator, linear=(), quad=(), has_log=True) -> "RationalIntegrand":
        """Convenience constructor taking plain numbers and ``a`` (not ``a^2``) for quadratics."""
        return cls(P.poly(numerator), tuple(linear),
                   tuple((Fraction(a) ** 2, m) for a, m in quad), has_log)

    def factor_polys(self) -> list[tuple[P.Poly, int]]:
        out = [((a, Fraction(1)), m) for a, m in self.linear]
        out += [((c, Fraction(0), Fraction(1)), m) for c, m in self.quad]
        return out

    def denominator(self) -> P.Poly:
        return P.product(P.power(p, m) for p, m in self.factor_polys())

    def degree_gap(self) -> int:
        """deg(denominator) - deg(numerator)."""
        return P.degree(self.denominator()) - P.degree(self.numerator)

    def text(self) -> str:
        num = P.to_text(self.numerator)
        has_den = bool(self.linear or self.quad)
        if self.has_log:
            if self.numerator == P.ONE:
                num = "ln(x)"
            elif len([c for c in self.numerator if c]) == 1 and self.numerator[-1] > 0 and "+" not in num:
                num = f"{num}*ln(x)"
            else:
                num = f"({num})*ln(x)"
        elif has_den and any(s in num.lstrip("-") for s in "+-"):
            num = f"({num})"
        if not has_den:
            return num
        parts = []
        for a, m in self.linear:
            parts.append(f"(x+{_frac_text(a)})" + (f"^{m}" if m > 1 else ""))
        for c, m in self.quad:
            parts.append(f"(x^2+{_frac_text(c)})" + (f"^{m}" if m > 1 else ""))
        den = parts[0] if len(parts) == 1 else "(" + "*".join(parts) + ")"
        return f"{num}/{den}"

    def __call__(self, x):
        """Vectorised evaluation, stable for very large ``x``."""
        x = np.asarray(x, dtype=np.float64)
        num = [float(c) for c in self.numerator]
        lin = [(float(a), m) for a, m in self.linear]
        quad = [(float(c), m) for c, m in self.quad]
        dn = len(num) - 1
        dd = sum(m for _, m in lin) + 2 * sum(m for _, m in quad)
        with np.errstate(all="ignore"):
            small = x <= 1.0
            xs = np.where(small, x, 1.0)
            y = np.where(small, 1.0, 1.0 / np.where(small, 1.0, x))
            # direct form on [0, 1]
            top = np.polyval(num[::-1], xs) if num else np.zeros_like(xs)
            bottom = np.ones_like(xs)
            for a, m in lin:
                bottom = bottom * (xs + a) ** m
            for c, m in quad:
                bottom = bottom * (xs * xs + c) ** m
            direct = top / bottom
            # reversed form for x > 1: x^(dn-dd) * num~(1/x) / den~(1/x)
            rtop = np.polyval(num, y) if num else np.zeros_like(y)
            rbottom = np.ones_like(y)
            for a, m in lin:
                rbottom = rbottom * (1.0 + a * y) ** m
            for c, m in quad:
                rbottom = rbottom * (1.0 + c * y * y) ** m
            big = np.where(small, 1.0, x)
            reversed_ = np.power(big, float(dn - dd)) * rtop / rbottom
            value = np.where(small, direct, reversed_)
            if self.has_log:
                value = value * np.log(x)
        return value

    def scalar(self, x: float) -> float:
        return float(self(np.array([x]))[0])


def upper_text(upper) -> str:
    if isinstance(upper, float) and math.isinf(upper):
        return "inf"
    if isinstance(upper, Fraction):
        return _frac_text(upper)
    return repr(upper)
