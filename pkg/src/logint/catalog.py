"""Registry of table entries with closed forms, oracle integrands and errata.

Every entry knows how to evaluate its closed form (for any admissible
parameters), how to build the integrand for the quadrature oracle, and, at
its default parameters, its value as an exact :class:`ConstantExpr`.  Entries
whose printed value in the literature is wrong also carry the printed form,
so verification reports the discrepancy instead of hiding it.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

import numpy as np

from logint import basis, specfun
from logint.constexpr import ConstantExpr
from logint.errors import DomainError
from logint.oracle import Interval, QuadratureError, QuadratureResult, integrate

PI = math.pi
HALF_PI = 0.5 * math.pi
QUARTER_PI = 0.25 * math.pi
LN2 = math.log(2.0)
HALF_LN2 = 0.5 * LN2

C = ConstantExpr.of


class UnknownEntryError(LookupError):
    def __init__(self, entry_id: str):
        super().__init__(f"unknown catalog entry {entry_id!r}")
        self.entry_id = entry_id


@dataclass(frozen=True)
class Param:
    """A named parameter.  ``domain`` is one of ``int>=0``, ``int>=1``, ``real>0``, ``angle``."""

    name: str
    default: float | int
    domain: str

    def check(self, value):
        if self.domain.startswith("int"):
            if isinstance(value, float) and value.is_integer():
                value = int(value)
            if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
                raise DomainError(f"parameter {self.name} must be an integer, got {value!r}")
            lo = int(self.domain[-1])
            if value < lo:
                raise DomainError(f"parameter {self.name} must be >= {lo}, got {value}")
            if value > specfun.N_MAX - 2:
                raise DomainError(f"parameter {self.name} must be <= {specfun.N_MAX - 2}, got {value}")
            return int(value)
        value = float(value)
        if self.domain == "real>0" and not (value > 0 and math.isfinite(value)):
            raise DomainError(f"parameter {self.name} must be positive and finite, got {value}")
        if self.domain == "angle" and not 0.0 < value <= HALF_PI:
            raise DomainError(f"parameter {self.name} must lie in (0, pi/2], got {value}")
        return value


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    description: str
    closed_form: ConstantExpr
    integrand: Callable[..., Callable]
    interval: Callable[..., Interval]
    value: Callable[..., float] | None = None
    params: tuple[Param, ...] = ()
    grid: tuple[Mapping, ...] = ()
    printed_value: ConstantExpr | None = None
    printed: Callable[..., float] | None = None
    erratum_note: str | None = None

    @property
    def is_erratum(self) -> bool:
        return self.printed_value is not None

    def defaults(self) -> dict:
        return {p.name: p.default for p in self.params}

    def resolve(self, params: Mapping | None = None) -> dict:
        params = dict(params or {})
        known = {p.name for p in self.params}
        extra = set(params) - known
        if extra:
            raise DomainError(f"entry {self.id} has no parameter(s) {', '.join(sorted(extra))}")
        out = {}
        for p in self.params:
            out[p.name] = p.check(params.get(p.name, p.default))
        return out

    def closed(self, params: Mapping | None = None) -> float:
        kw = self.resolve(params)
        if self.value is None:
            return self.closed_form.to_float()
        return self.value(**kw)

    def printed_closed(self, params: Mapping | None = None) -> float | None:
        if not self.is_erratum:
            return None
        kw = self.resolve(params)
        if self.printed is None:
            return self.printed_value.to_float()
        return self.printed(**kw)

    def parameter_grid(self) -> tuple[dict, ...]:
        return tuple(self.resolve(g) for g in self.grid) if self.grid else (self.resolve(),)


# ------------------------------------------------------------------ integrands
# All integrands take a float ndarray and are written to stay finite up to
# (but excluding) the endpoints the oracle never samples.


def _log_sin_shift(x, shift):
    """ln sin(shift - x), with shift - x formed exactly for x near shift."""
    return np.log(np.sin(shift - x))


def _k(f):
    """Wrap a parameterless integrand as an integrand factory."""
    return lambda **_: f


def _unit():
    return lambda **_: Interval.finite(0.0, 1.0)


def _zero_to(hi):
    return lambda **_: Interval.finite(0.0, hi)


def _half_line(lo=0.0, splits=(1.0,)):
    return lambda **_: Interval.half_line(lo, splits)


def _poly_ratio_42317(n, a, b):
    a2, b2 = a * a, b * b
    return lambda x: np.log(x) / (a2 + b2 * x * x) ** (n + 1)


def _log_over_one_plus_sq(x):
    # valid on [1, inf) for large x as well
    y = 1.0 / x
    return (2.0 * np.log(x) + np.log1p(y * y)) * y * y / (1.0 + y * y)


def _digamma_integrand(n):
    s = n - 0.5  # x - 1 with x = n + 1/2

    def f(u):
        return -np.exp(-u) * np.expm1(-s * u) / -np.expm1(-u)

    return f


def _printed_g_at_one(n: int) -> float:
    scale = math.comb(2 * n, n) / 4.0**n
    acc = math.fsum((QUARTER_PI + float(basis.p_at_one(k - 1))) / (2 * k - 1) for k in range(1, n + 1))
    return scale * (specfun.catalan() - acc)


def _g_at_one_exact(n: int) -> ConstantExpr:
    scale = Fraction(math.comb(2 * n, n), 4**n)
    pi_part = sum(Fraction(1, 4 * (2 * k - 1)) for k in range(1, n + 1))
    rat = sum(basis.p_at_one(k - 1) / (2 * k - 1) for k in range(1, n + 1))
    return ConstantExpr.of(Catalan=-1, Pi=-pi_part, One=-rat) * scale


def _harmonic_form_printed(n: int, c: float) -> float:
    core = PI / (2.0 * c) ** (2 * n + 1) * math.comb(2 * n, n)
    return core * (math.log(c) - float(specfun.harmonic(n)) + 2.0 * float(specfun.harmonic(2 * n)))


def _digamma_exact(n: int) -> ConstantExpr:
    return ConstantExpr.of(One=2 * specfun.harmonic(2 * n) - specfun.harmonic(n), Ln2=-2)


def _digamma_printed(n: int) -> ConstantExpr:
    return ConstantExpr.of(Ln2=2, One=-2 * specfun.odd_harmonic(n))


def _build() -> tuple[CatalogEntry, ...]:
    L = specfun.lobachevsky
    e = []

    # rational function times ln x on [0, 1]
    e.append(CatalogEntry(
        "4.231.1", "int_0^1 ln x/(1+x) dx", C(PiSq=Fraction(-1, 12)),
        _k(lambda x: np.log(x) / (1.0 + x)), _unit()))
    e.append(CatalogEntry(
        "4.231.2", "int_0^1 ln x/(1-x) dx", C(PiSq=Fraction(-1, 6)),
        _k(lambda x: np.log(x) / (1.0 - x)), _unit()))
    e.append(CatalogEntry(
        "4.231.3", "int_0^1 x ln x/(1-x) dx", C(One=1, PiSq=Fraction(-1, 6)),
        _k(lambda x: x * np.log(x) / (1.0 - x)), _unit()))
    e.append(CatalogEntry(
        "4.231.4", "int_0^1 (1+x)/(1-x) ln x dx", C(One=1, PiSq=Fraction(-1, 3)),
        _k(lambda x: (1.0 + x) * np.log(x) / (1.0 - x)), _unit()))

    e.append(CatalogEntry(
        "4.231.7", "int_0^inf ln x/(a^2+b^2 x^2)^(n+1) dx", C(Pi=Fraction(-1, 4)),
        lambda n, a, b: _poly_ratio_42317(n, a, b), _half_line(), value=basis.entry_42317,
        params=(Param("n", 1, "int>=0"), Param("a", 1.0, "real>0"), Param("b", 1.0, "real>0")),
        grid=({"n": 1, "a": 1.0, "b": 1.0}, {"n": 2, "a": 2.0, "b": 1.0}, {"n": 3, "a": 1.0, "b": 2.0})))
    e.append(CatalogEntry(
        "4.231.8", "int_0^inf ln x/(a^2+b^2 x^2) dx = pi/(2ab) ln(a/b)", C(PiLn2=Fraction(1, 4)),
        lambda a, b: _poly_ratio_42317(0, a, b), _half_line(),
        value=lambda a, b: PI / (2.0 * a * b) * math.log(a / b),
        params=(Param("a", 2.0, "real>0"), Param("b", 1.0, "real>0")),
        grid=({"a": 2.0, "b": 1.0}, {"a": 1.0, "b": 3.0}, {"a": 0.5, "b": 0.25})))
    e.append(CatalogEntry(
        "4.231.9", "int_0^inf ln(p x)/(q^2+x^2) dx = pi/(2q) ln(p q)", C(PiLn2=Fraction(1, 2)),
        lambda p, q: (lambda x: (math.log(p) + np.log(x)) / (q * q + x * x)), _half_line(),
        value=lambda p, q: PI / (2.0 * q) * math.log(p * q),
        params=(Param("p", 2.0, "real>0"), Param("q", 1.0, "real>0")),
        grid=({"p": 2.0, "q": 1.0}, {"p": 1.0, "q": 3.0}, {"p": 0.25, "q": 2.0})))
    e.append(CatalogEntry(
        "4.231.11", "int_0^a ln x/(x^2+a^2) dx = pi ln a/(4a) - G/a", C(Catalan=-1),
        lambda a: (lambda x: np.log(x) / (x * x + a * a)),
        lambda a: Interval.finite(0.0, a),
        value=lambda a: PI * math.log(a) / (4.0 * a) - specfun.catalan() / a,
        params=(Param("a", 1.0, "real>0"),),
        grid=({"a": 1.0}, {"a": 2.0}, {"a": 0.3})))
    e.append(CatalogEntry(
        "4.231.12", "int_0^1 ln x/(1+x^2) dx", C(Catalan=-1),
        _k(lambda x: np.log(x) / (1.0 + x * x)), _unit()))
    e.append(CatalogEntry(
        "4.231.12b", "int_1^inf ln x/(1+x^2) dx", C(Catalan=1),
        _k(lambda x: np.log(x) / (x * x * (1.0 + 1.0 / (x * x)))),
        _half_line(1.0, ())))
    e.append(CatalogEntry(
        "4.231.13", "int_0^1 ln x/(1-x^2) dx", C(PiSq=Fraction(-1, 8)),
        _k(lambda x: np.log(x) / ((1.0 - x) * (1.0 + x))), _unit(),
        printed_value=C(PiSq=Fraction(-1, 48)),
        erratum_note="printed value -pi^2/48; the two partial-fraction pieces give "
                     "-pi^2/12 and -pi^2/6, so the value is -pi^2/8"))
    e.append(CatalogEntry(
        "4.231.14", "int_0^1 x ln x/(1+x^2) dx", C(PiSq=Fraction(-1, 48)),
        _k(lambda x: x * np.log(x) / (1.0 + x * x)), _unit()))
    e.append(CatalogEntry(
        "4.231.15", "int_0^1 x ln x/(1-x^2) dx", C(PiSq=Fraction(-1, 24)),
        _k(lambda x: x * np.log(x) / ((1.0 - x) * (1.0 + x))), _unit()))
    e.append(CatalogEntry(
        "4.231.19", "int_0^1 x ln x/(1+x) dx", C(One=-1, PiSq=Fraction(1, 12)),
        _k(lambda x: x * np.log(x) / (1.0 + x)), _unit(),
        printed_value=C(One=-1, PiSq=Fraction(1, 2)),
        erratum_note="printed value -1 + pi^2/2; x/(1+x) = 1 - 1/(1+x) gives pi^2/12 - 1"))
    e.append(CatalogEntry(
        "4.231.20", "int_0^1 (1-x) ln x/(1+x) dx", C(One=1, PiSq=Fraction(-1, 6)),
        _k(lambda x: (1.0 - x) * np.log(x) / (1.0 + x)), _unit()))

    # exponential forms
    e.append(CatalogEntry(
        "4.223.1", "int_0^inf ln(1+e^(-t)) dt", C(PiSq=Fraction(1, 12)),
        _k(lambda t: np.log1p(np.exp(-t))), _half_line()))
    e.append(CatalogEntry(
        "4.223.2", "int_0^inf ln(1-e^(-t)) dt", C(PiSq=Fraction(-1, 6)),
        _k(lambda t: np.where(t < 0.7, np.log(-np.expm1(-np.minimum(t, 0.7))), np.log1p(-np.exp(-t)))),
        _half_line()))

    # log-sine family
    e.append(CatalogEntry(
        "4.224.1", "int_0^x ln sin t dt = L(pi/2-x) - L(pi/2)",
        C(PiLn2=Fraction(-1, 4), Catalan=Fraction(-1, 2)),
        lambda x: (lambda t: np.log(np.sin(t))), lambda x: Interval.finite(0.0, x),
        value=lambda x: L(HALF_PI - x) - L(HALF_PI),
        params=(Param("x", QUARTER_PI, "angle"),),
        grid=({"x": PI / 8}, {"x": QUARTER_PI}, {"x": 3 * PI / 8})))
    e.append(CatalogEntry(
        "4.224.2", "int_0^(pi/4) ln sin t dt", C(PiLn2=Fraction(-1, 4), Catalan=Fraction(-1, 2)),
        _k(lambda t: np.log(np.sin(t))), _zero_to(QUARTER_PI)))
    e.append(CatalogEntry(
        "4.224.3", "int_0^(pi/2) ln sin t dt", C(PiLn2=Fraction(-1, 2)),
        _k(lambda t: np.log(np.sin(t))), _zero_to(HALF_PI)))
    e.append(CatalogEntry(
        "4.224.4", "L(x) = -int_0^x ln cos t dt", C(PiLn2=Fraction(1, 4), Catalan=Fraction(-1, 2)),
        lambda x: (lambda t: -_log_sin_shift(t, HALF_PI)), lambda x: Interval.finite(0.0, x),
        value=lambda x: L(x),
        params=(Param("x", QUARTER_PI, "angle"),),
        grid=({"x": PI / 8}, {"x": QUARTER_PI}, {"x": HALF_PI})))
    e.append(CatalogEntry(
        "4.224.5", "int_0^(pi/4) ln cos t dt", C(PiLn2=Fraction(-1, 4), Catalan=Fraction(1, 2)),
        _k(lambda t: np.log(np.cos(t))), _zero_to(QUARTER_PI)))
    e.append(CatalogEntry(
        "4.224.6", "int_0^(pi/2) ln cos t dt", C(PiLn2=Fraction(-1, 2)),
        _k(lambda t: _log_sin_shift(t, HALF_PI)), _zero_to(HALF_PI)))
    e.append(CatalogEntry(
        "4.225.1", "int_0^(pi/4) ln(cos x - sin x) dx", C(PiLn2=Fraction(-1, 8), Catalan=Fraction(-1, 2)),
        _k(lambda x: HALF_LN2 + _log_sin_shift(x, QUARTER_PI)), _zero_to(QUARTER_PI)))
    e.append(CatalogEntry(
        "4.225.2", "int_0^(pi/4) ln(cos x + sin x) dx", C(PiLn2=Fraction(-1, 8), Catalan=Fraction(1, 2)),
        _k(lambda x: HALF_LN2 + np.log(np.sin(x + QUARTER_PI))), _zero_to(QUARTER_PI)))

    # log-tangent family
    e.append(CatalogEntry(
        "4.227.1", "int_0^u ln tan x dx = L(u) + L(pi/2-u) - (pi/2) ln 2", C(Catalan=-1),
        lambda u: (lambda x: np.log(np.sin(x)) - np.log(np.cos(x))), lambda u: Interval.finite(0.0, u),
        value=lambda u: L(u) + L(HALF_PI - u) - HALF_PI * LN2,
        params=(Param("u", QUARTER_PI, "angle"),),
        grid=({"u": PI / 8}, {"u": QUARTER_PI}, {"u": 3 * PI / 8}),
        printed_value=C(Catalan=-1, PiLn2=1),
        printed=lambda u: L(u) + L(HALF_PI - u) + HALF_PI * LN2,
        erratum_note="printed constant +(pi/2) ln 2; with L(x) = -int_0^x ln cos t dt "
                     "the constant is -(pi/2) ln 2"))
    e.append(CatalogEntry(
        "4.227.2", "int_0^(pi/4) ln tan t dt", C(Catalan=-1),
        _k(lambda x: np.log(np.tan(x))), _zero_to(QUARTER_PI)))
    e.append(CatalogEntry(
        "4.227.3", "int_0^(pi/2) ln(a tan t) dt = (pi/2) ln a", C(PiLn2=Fraction(1, 2)),
        lambda a: (lambda x: math.log(a) + np.log(np.sin(x)) - _log_sin_shift(x, HALF_PI)),
        _zero_to(HALF_PI), value=lambda a: HALF_PI * math.log(a),
        params=(Param("a", 2.0, "real>0"),),
        grid=({"a": 2.0}, {"a": 1.0}, {"a": 0.2})))
    e.append(CatalogEntry(
        "4.227.9", "int_0^(pi/4) ln(1 + tan x) dx", C(PiLn2=Fraction(1, 8)),
        _k(lambda x: np.log1p(np.tan(x))), _zero_to(QUARTER_PI)))
    e.append(CatalogEntry(
        "4.227.10", "int_0^(pi/2) ln(1 + tan x) dx", C(PiLn2=Fraction(1, 4), Catalan=1),
        _k(lambda x: HALF_LN2 + np.log(np.sin(x + QUARTER_PI)) - _log_sin_shift(x, HALF_PI)),
        _zero_to(HALF_PI)))
    e.append(CatalogEntry(
        "4.227.11", "int_0^(pi/4) ln(1 - tan x) dx", C(PiLn2=Fraction(1, 8), Catalan=-1),
        _k(lambda x: HALF_LN2 + _log_sin_shift(x, QUARTER_PI) - np.log(np.cos(x))),
        _zero_to(QUARTER_PI)))
    e.append(CatalogEntry(
        "4.227.13", "int_0^(pi/4) ln(1 + cot x) dx", C(PiLn2=Fraction(1, 8), Catalan=1),
        _k(lambda x: HALF_LN2 + np.log(np.sin(x + QUARTER_PI)) - np.log(np.sin(x))),
        _zero_to(QUARTER_PI)))
    e.append(CatalogEntry(
        "4.227.14", "int_0^(pi/4) ln(cot x - 1) dx", C(PiLn2=Fraction(1, 8)),
        _k(lambda x: HALF_LN2 + _log_sin_shift(x, QUARTER_PI) - np.log(np.sin(x))),
        _zero_to(QUARTER_PI)))
    e.append(CatalogEntry(
        "4.227.15", "int_0^(pi/4) ln(tan x + cot x) dx", C(PiLn2=Fraction(1, 2)),
        _k(lambda x: LN2 - np.log(np.sin(2.0 * x))), _zero_to(QUARTER_PI)))

    # log of a rational argument
    e.append(CatalogEntry(
        "4.291.1", "int_0^1 ln(1+x)/x dx", C(PiSq=Fraction(1, 12)),
        _k(lambda x: np.log1p(x) / x), _unit()))
    e.append(CatalogEntry(
        "4.291.2", "int_0^1 ln(1-x)/x dx", C(PiSq=Fraction(-1, 6)),
        _k(lambda x: np.log1p(-x) / x), _unit()))
    e.append(CatalogEntry(
        "4.295.5", "int_0^1 ln(1+x^2)/(1+x^2) dx", C(PiLn2=Fraction(1, 2), Catalan=-1),
        _k(lambda x: np.log1p(x * x) / (1.0 + x * x)), _unit()))
    e.append(CatalogEntry(
        "4.295.6", "int_1^inf ln(1+x^2)/(1+x^2) dx", C(PiLn2=Fraction(1, 2), Catalan=1),
        _k(_log_over_one_plus_sq), _half_line(1.0, ())))
    e.append(CatalogEntry(
        "4.295.11", "int_0^1 ln(1-x^2)/x dx", C(PiSq=Fraction(-1, 12)),
        _k(lambda x: (np.log1p(-x) + np.log1p(x)) / x), _unit()))

    # inverse trigonometric and t cot t
    e.append(CatalogEntry(
        "4.531.1", "int_0^1 arctan(x)/x dx", C(Catalan=1),
        _k(lambda x: np.arctan(x) / x), _unit()))
    e.append(CatalogEntry(
        "4.521.1", "int_0^1 arcsin(u)/u du", C(PiLn2=Fraction(1, 2)),
        _k(lambda u: np.arcsin(u) / u), _unit()))
    e.append(CatalogEntry(
        "3.747.7", "int_0^(pi/2) t cot t dt", C(PiLn2=Fraction(1, 2)),
        _k(lambda t: t * np.sin(HALF_PI - t) / np.sin(t)), _zero_to(HALF_PI)))

    # the double-factorial form of int_0^x dt/(1+t^2)^(n+1)
    e.append(CatalogEntry(
        "2.148.4", "int_0^x dt/(1+t^2)^(n+1) in double-factorial form", C(Pi=Fraction(1, 8), One=Fraction(1, 4)),
        lambda n, x: (lambda t: (1.0 + t * t) ** (-(n + 1))), lambda n, x: Interval.finite(0.0, x),
        value=lambda n, x: basis.f_n_doublefact(n, x),
        params=(Param("n", 1, "int>=0"), Param("x", 1.0, "real>0")),
        grid=({"n": 1, "x": 1.0}, {"n": 3, "x": 0.5}, {"n": 6, "x": 4.0})))

    # statements from the derivations that were printed with errors
    e.append(CatalogEntry(
        "g_n.at_one", "int_0^1 ln t/(1+t^2)^(n+1) dt", _g_at_one_exact(1),
        lambda n: (lambda t: np.log(t) / (1.0 + t * t) ** (n + 1)), _unit(),
        value=lambda n: basis.g_n(n, 1.0),
        params=(Param("n", 1, "int>=0"),),
        grid=({"n": 1}, {"n": 2}, {"n": 5}),
        printed_value=C(Catalan=Fraction(1, 2), Pi=Fraction(-1, 8)),
        printed=_printed_g_at_one,
        erratum_note="printed with +G inside the bracket; g_0(1) = -G, so the bracket starts with -G"))
    e.append(CatalogEntry(
        "entry_42317.harmonic_form", "int_0^inf ln x/(x^2+c^2)^(n+1) dx in harmonic-number form",
        C(Pi=Fraction(-1, 4)),
        lambda n, c: _poly_ratio_42317(n, c, 1.0), _half_line(),
        value=lambda n, c: basis.entry_42317(n, c, 1.0),
        params=(Param("n", 1, "int>=1"), Param("c", 1.0, "real>0")),
        grid=({"n": 1, "c": 1.0}, {"n": 2, "c": 0.5}, {"n": 4, "c": 3.0}),
        printed_value=C(Pi=Fraction(1, 2)),
        printed=_harmonic_form_printed,
        erratum_note="printed as ln c - H_n + 2 H_(2n); since sum_(k<=n) 1/(2k-1) = H_(2n) - H_n/2 "
                     "the bracket is ln c - H_(2n) + H_n/2"))
    e.append(CatalogEntry(
        "digamma_half.first_form", "psi(n+1/2) + gamma = int_0^inf (e^-u - e^-(n+1/2)u)/(1-e^-u) du",
        _digamma_exact(1),
        lambda n: _digamma_integrand(n), _half_line(),
        value=lambda n: _digamma_exact(n).to_float(),
        params=(Param("n", 1, "int>=0"),),
        grid=({"n": 1}, {"n": 2}, {"n": 10}),
        printed_value=_digamma_printed(1),
        printed=lambda n: _digamma_printed(n).to_float(),
        erratum_note="printed as -gamma + 2 ln 2 - 2 sum_(k<=n) 1/(2k-1); both signs are flipped, "
                     "psi(n+1/2) = -gamma - 2 ln 2 + 2 sum_(k<=n) 1/(2k-1)"))
    return tuple(e)


def _order_key(entry_id: str):
    parts = entry_id.split(".")
    if all(re.fullmatch(r"\d+[a-z]?", p) for p in parts):
        key = []
        for p in parts:
            m = re.fullmatch(r"(\d+)([a-z]?)", p)
            key.append((int(m.group(1)), m.group(2)))
        return (0, tuple(key), "")
    return (1, (), entry_id)


_ENTRIES = tuple(sorted(_build(), key=lambda e: _order_key(e.id)))
_BY_ID = {e.id: e for e in _ENTRIES}
assert len(_BY_ID) == len(_ENTRIES), "duplicate catalog ids"


def entries() -> tuple[CatalogEntry, ...]:
    return _ENTRIES


def lookup(entry_id: str) -> CatalogEntry:
    try:
        return _BY_ID[entry_id]
    except KeyError:
        raise UnknownEntryError(entry_id) from None


# ------------------------------------------------------------------ verification


@dataclass(frozen=True)
class VerifyReport:
    id: str
    params: dict
    closed: float
    numeric: QuadratureResult | None
    abs_diff: float
    passed: bool
    erratum_flag: bool
    printed: float | None = None
    printed_deviation: float | None = None
    reason: str | None = None

    def to_json(self) -> dict:
        num = self.numeric
        return {
            "id": self.id,
            "params": self.params,
            "closed": self.closed,
            "numeric": None if num is None else num.value,
            "err_estimate": None if num is None else num.err_estimate,
            "abs_diff": self.abs_diff,
            "pass": self.passed,
            "erratum": self.erratum_flag,
            "printed": self.printed,
            "printed_deviation": self.printed_deviation,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class VerifySummary:
    n_pass: int
    n_fail: int
    n_errata: int
    reports: tuple[VerifyReport, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "n_pass": self.n_pass,
            "n_fail": self.n_fail,
            "n_errata": self.n_errata,
            "reports": [r.to_json() for r in self.reports],
        }


def verify_entry(entry_id: str, params: Mapping | None = None, tol: float = 1e-10) -> VerifyReport:
    """Compare the closed form with the oracle.

    Passes when ``|closed - numeric| <= max(tol, 10 * err_estimate)`` and the
    oracle converged.  For errata the printed value's deviation from the
    oracle is reported too.
    """
    entry = lookup(entry_id)
    kw = entry.resolve(params)
    closed = entry.closed(kw)
    printed = entry.printed_closed(kw)
    try:
        numeric = integrate(entry.integrand(**kw), entry.interval(**kw), tol=tol)
    except QuadratureError as exc:
        return VerifyReport(entry.id, kw, closed, None, math.nan, False, entry.is_erratum,
                            printed, None, f"oracle failed: {exc}")
    diff = abs(closed - numeric.value)
    reason = None
    passed = diff <= max(tol, 10.0 * numeric.err_estimate)
    if not numeric.converged:
        passed = False
        reason = f"oracle did not reach tol {tol:g} (err estimate {numeric.err_estimate:.3g})"
    elif not passed:
        reason = f"closed form differs from oracle by {diff:.3g}"
    dev = None if printed is None else abs(printed - numeric.value)
    return VerifyReport(entry.id, kw, closed, numeric, diff, passed, entry.is_erratum, printed, dev, reason)


def verify_all(tol: float = 1e-10) -> VerifySummary:
    reports = tuple(verify_entry(e.id, tol=tol) for e in _ENTRIES)
    n_pass = sum(r.passed for r in reports)
    return VerifySummary(n_pass, len(reports) - n_pass, sum(r.erratum_flag for r in reports), reports)


# ------------------------------------------------------------------ JSON export

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["entries"],
    "additionalProperties": False,
    "properties": {
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "description", "params", "closed_form", "printed_differs", "erratum"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string"},
                    "description": {"type": "string"},
                    "params": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["name", "default"],
                            "additionalProperties": False,
                            "properties": {"name": {"type": "string"}, "default": {"type": "number"}},
                        },
                    },
                    "closed_form": {
                        "type": "object",
                        "required": ["atoms"],
                        "additionalProperties": False,
                        "properties": {
                            "atoms": {
                                "type": "object",
                                "additionalProperties": {
                                    "type": "array",
                                    "items": {"type": "integer"},
                                    "minItems": 2,
                                    "maxItems": 2,
                                },
                            }
                        },
                    },
                    "printed_differs": {"type": "boolean"},
                    "erratum": {"type": ["string", "null"]},
                },
            },
        }
    },
}


def entry_json(entry: CatalogEntry) -> dict:
    return {
        "id": entry.id,
        "description": entry.description,
        "params": [{"name": p.name, "default": p.default} for p in entry.params],
        "closed_form": {"atoms": entry.closed_form.to_json()},
        "printed_differs": entry.is_erratum,
        "erratum": entry.erratum_note,
    }


def export_json() -> str:
    return json.dumps({"entries": [entry_json(e) for e in _ENTRIES]}, indent=2)
