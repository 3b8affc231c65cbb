"""Map a partial-fraction form onto the basis families and evaluate it."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from logint import basis
from logint.basis import BasisValue
from logint.errors import DivergenceError
from logint.oracle import Interval, QuadratureResult, integrate
from logint.reduce.integrand import RationalIntegrand, _frac_text
from logint.reduce.partial import PartialFractionForm, partial_fractions

Upper = Union[Fraction, float]
INF = math.inf


def as_upper(b) -> Upper:
    """Normalise an upper limit: ``inf`` stays a float, anything else becomes a Fraction."""
    if isinstance(b, str):
        s = b.strip().lower()
        if s in ("inf", "infinity", "+inf", "oo"):
            return INF
        try:
            b = Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"invalid upper limit {b!r}") from None
    elif isinstance(b, float):
        if math.isinf(b) and b > 0:
            return INF
        if not math.isfinite(b):
            raise ValueError(f"invalid upper limit {b!r}")
        b = Fraction(repr(b))
    else:
        b = Fraction(b)
    if b <= 0:
        raise ValueError(f"upper limit must be positive, got {b}")
    return b


def _is_inf(b: Upper) -> bool:
    return isinstance(b, float) and math.isinf(b)


def _txt(v) -> str:
    if isinstance(v, Fraction):
        return _frac_text(v)
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    return str(v)


def _sqrt(c: Fraction) -> float:
    rn, rd = math.isqrt(c.numerator), math.isqrt(c.denominator)
    if rn * rn == c.numerator and rd * rd == c.denominator:
        return rn / rd
    return math.sqrt(c)


def _e_k(k: int, beta: Upper) -> float:
    """int_0^beta dt/(1+t)^k."""
    if _is_inf(beta):
        if k < 2:
            raise DivergenceError("int_0^inf dt/(1+t) diverges")
        return 1.0 / (k - 1)
    beta = float(beta)
    if k == 1:
        return math.log1p(beta)
    return -math.expm1((1 - k) * math.log1p(beta)) / (k - 1)


def _ln(q: Fraction) -> float:
    return math.log(q.numerator) - math.log(q.denominator)


@dataclass(frozen=True)
class BasisCall:
    """A tagged invocation of one basis operation.

    kinds::

        h1          (m, beta)      int_0^beta ln t/(1+t)^m dt
        scaled_log  (s, k, beta)   ln s * int_0^beta dt/(1+t)^k
        h2          (n, c, b)      int_0^b ln t/(t^2+c)^(n+1) dt
        poly_log    (k, b)         int_0^b t^k ln t dt
        power       (k, b)         int_0^b t^k dt
        rational    (k, beta)      int_0^beta dt/(1+t)^k, k >= 2
        log         (beta,)        ln(1+beta)
        arctan      (n, c, b)      int_0^b dt/(t^2+c)^(n+1)
        tail        (form, s)      finite part at infinity of the k = 1 group
    """

    kind: str
    args: tuple

    @property
    def half_line(self) -> bool:
        return self.kind == "tail" or any(_is_inf(a) for a in self.args)

    def evaluate(self) -> float:
        k, a = self.kind, self.args
        if k == "h1":
            m, beta = a
            if _is_inf(beta):
                return float(basis.h1_half_line(m))
            return basis.h1(m, float(beta))
        if k == "scaled_log":
            s, kk, beta = a
            return _ln(s) * _e_k(kk, beta)
        if k == "h2":
            n, c, b = a
            return basis.h2(n, _sqrt(c), float(b))
        if k == "poly_log":
            kk, b = a
            return basis.poly_log_piece(kk, float(b))
        if k == "power":
            kk, b = a
            return float(b) ** (kk + 1) / (kk + 1)
        if k in ("rational", "log"):
            kk, beta = (1, a[0]) if k == "log" else a
            return _e_k(kk, beta)
        if k == "arctan":
            n, c, b = a
            root = _sqrt(c)
            x = INF if _is_inf(b) else float(b) / root
            return root ** (-2 * n - 1) * basis.f_n(n, x)
        if k == "tail":
            form, s = a
            ls = _ln(s)
            if form == "log":
                return -0.5 * ls * ls - math.pi ** 2 / 6
            return -ls
        raise ValueError(f"unknown basis call kind {k!r}")

    def describe(self) -> str:
        k, a = self.kind, self.args
        if k == "h1":
            text = f"h1(m={a[0]}, b={_txt(a[1])})"
        elif k == "scaled_log":
            text = f"ln({_txt(a[0])}) * E{a[1]}({_txt(a[2])})"
        elif k == "h2":
            text = f"h2(n={a[0]}, a^2={_txt(a[1])}, b={_txt(a[2])})"
        elif k == "poly_log":
            text = f"poly_log_piece(k={a[0]}, b={_txt(a[1])})"
        elif k == "power":
            text = f"int_0^{_txt(a[1])} x^{a[0]} dx"
        elif k == "rational":
            text = f"E{a[0]}({_txt(a[1])})"
        elif k == "log":
            text = f"ln(1 + {_txt(a[0])})"
        elif k == "arctan":
            text = f"arctan_family(n={a[0]}, a^2={_txt(a[1])}, b={_txt(a[2])})"
        else:
            s = _txt(a[1])
            text = f"-ln({s})^2/2 - pi^2/6" if a[0] == "log" else f"-ln({s})"
            text = f"tail[{text}]"
        return text + (" [half-line]" if self.half_line else "")


def _sort_key(call: BasisCall):
    order = ("poly_log", "power", "h1", "scaled_log", "h2", "log", "rational", "arctan", "tail")
    return (order.index(call.kind), tuple((0, str(a)) if isinstance(a, str) else (1, float(a)) for a in call.args))


@dataclass(frozen=True)
class BasisCombination:
    terms: tuple[tuple[Fraction, BasisCall], ...]
    upper: Upper
    pf: PartialFractionForm | None = None

    @property
    def source(self) -> RationalIntegrand | None:
        return self.pf.source if self.pf is not None else None


class _Builder:
    def __init__(self):
        self.acc: dict[BasisCall, Fraction] = {}

    def add(self, weight: Fraction, kind: str, *args) -> None:
        if not weight:
            return
        call = BasisCall(kind, tuple(args))
        self.acc[call] = self.acc.get(call, Fraction(0)) + weight

    def build(self, upper, pf) -> BasisCombination:
        terms = tuple((w, c) for c, w in sorted(self.acc.items(), key=lambda kv: _sort_key(kv[0])) if w)
        return BasisCombination(terms, upper, pf)


def reduce_to_basis(pf: PartialFractionForm, upper) -> BasisCombination:
    """Express ``int_0^upper`` of the decomposed integrand through basis calls."""
    upper = as_upper(upper)
    r = pf.source
    log = r.has_log
    inf = _is_inf(upper)
    if inf:
        if r.numerator and r.degree_gap() < 2:
            raise DivergenceError(
                "integral to infinity diverges: need deg(denominator) - deg(numerator) >= 2")
        assert not pf.poly_part
    out = _Builder()
    for k, coeff in enumerate(pf.poly_part):
        out.add(coeff, "poly_log" if log else "power", k, upper)
    for a, k, c in pf.linear_terms:
        beta = INF if inf else upper / a
        w = c * a ** (1 - k)
        if inf and k == 1:
            out.add(c, "tail", "log" if log else "plain", a)
            continue
        if log:
            out.add(w, "h1", k, beta)
            if a != 1:
                out.add(w, "scaled_log", a, k, beta)
        elif k == 1:
            out.add(w, "log", beta)
        else:
            out.add(w, "rational", k, beta)
    for c, k, p, q in pf.quad_terms:
        beta = INF if inf else upper * upper / c
        if p:
            if inf and k == 1:
                out.add(p / 4 if log else p / 2, "tail", "log" if log else "plain", c)
            elif log:
                w = p / 4 * c ** (1 - k)
                out.add(w, "h1", k, beta)
                if c != 1:
                    out.add(w, "scaled_log", c, k, beta)
            else:
                w = p / 2 * c ** (1 - k)
                if k == 1:
                    out.add(w, "log", beta)
                else:
                    out.add(w, "rational", k, beta)
        if q:
            out.add(q, "h2" if log else "arctan", k - 1, c, upper)
    return out.build(upper, pf)


def reduce_integrand(r: RationalIntegrand, upper) -> BasisCombination:
    return reduce_to_basis(partial_fractions(r), upper)


def evaluate_combination(bc: BasisCombination) -> BasisValue:
    values = [(w, call, call.evaluate()) for w, call in bc.terms]
    total = math.fsum(float(w) * v for w, _, v in values)
    trace = tuple((call.describe(), float(w), v) for w, call, v in values)
    return BasisValue(total, trace)


def _fmt(v: float) -> str:
    return f"{v:.15g}"


def explain(bc: BasisCombination) -> str:
    """Deterministic multi-line derivation ending in the numeric value."""
    lines = []
    if bc.pf is not None:
        lines.append(f"integrand: {bc.pf.source.text()} on [0, {_txt(bc.upper)}]")
        lines.append(f"partial fractions: {bc.pf.text()}")
    for w, call in bc.terms:
        lines.append(f"  {'+' if w > 0 else '-'} {_txt(abs(w))} * {call.describe()} = {_fmt(call.evaluate())}")
    lines.append(f"value = {_fmt(evaluate_combination(bc).value)}")
    return "\n".join(lines)


def quad(r: RationalIntegrand, upper, tol: float = 1e-12) -> QuadratureResult:
    """Oracle value of ``int_0^upper r(x) dx`` (split at 1 on the half line)."""
    upper = as_upper(upper)
    if _is_inf(upper):
        return integrate(r, Interval.half_line(0.0, (1.0,)), tol)
    return integrate(r, Interval.finite(0.0, float(upper)), tol)
