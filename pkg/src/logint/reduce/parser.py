"""Recursive-descent parser for integrands such as ``x*ln(x)/((x+1)^2*(x^2+4))``.

Grammar (whitespace ignored)::

    sum     := ["+" | "-"] product {("+" | "-") product}
    product := power {("*" | "/" | <juxtaposition>) power}
    power   := atom [("^" | "**") INT]
    atom    := NUMBER | "x" | "(" sum ")" | ("ln" | "log") "(" "x" ")"

Numbers may be integers or decimals; ``1/2`` is just a quotient of constants.
Sums may combine fractions only when every summand carries the same power
of ``ln x``; they are brought over the least common denominator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from logint.reduce import polynomial as P
from logint.reduce.integrand import IntegrandSyntaxError, RationalIntegrand, UnsupportedPoleError

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d*)?|\.\d+)|(\*\*|[-+*/^()])|([A-Za-z_]+))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # "num", "op", "name", "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise IntegrandSyntaxError(f"unexpected character {text[bad]!r}", bad, text)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            out.append(_Tok("num", m.group(1), start))
        elif m.group(2) is not None:
            out.append(_Tok("op", m.group(2), start))
        else:
            out.append(_Tok("name", m.group(3), start))
        pos = m.end()
    out.append(_Tok("end", "", len(text)))
    return out


def _monic(p: P.Poly) -> tuple[Fraction, P.Poly]:
    lead = p[-1]
    return lead, P.scale(p, 1 / lead)


@dataclass
class _Term:
    """coeff * prod(num) / prod(den) * ln(x)^logs, factors stored monic."""

    coeff: Fraction = Fraction(1)
    num: dict = field(default_factory=dict)
    den: dict = field(default_factory=dict)
    logs: int = 0

    @classmethod
    def from_poly(cls, p: P.Poly) -> "_Term":
        if not p:
            return cls(Fraction(0))
        if P.degree(p) == 0:
            return cls(p[0])
        lead, m = _monic(p)
        return cls(lead, {m: 1})

    def expanded_num(self) -> P.Poly:
        out = P.product(P.power(f, k) for f, k in self.num.items())
        return P.scale(out, self.coeff)

    def den_poly(self) -> P.Poly:
        return P.product(P.power(f, k) for f, k in self.den.items())


def _bump(d: dict, key, k: int) -> dict:
    out = dict(d)
    out[key] = out.get(key, 0) + k
    if not out[key]:
        del out[key]
    return out


def _mul(a: _Term, b: _Term) -> _Term:
    num, den = dict(a.num), dict(a.den)
    for f, k in b.num.items():
        num = _bump(num, f, k)
    for f, k in b.den.items():
        den = _bump(den, f, k)
    return _Term(a.coeff * b.coeff, num, den, a.logs + b.logs)


def _cancel(t: _Term) -> _Term:
    num, den = dict(t.num), dict(t.den)
    for f in list(num):
        if f in den:
            k = min(num[f], den[f])
            num = _bump(num, f, -k)
            den = _bump(den, f, -k)
    return _Term(t.coeff, num, den, t.logs)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise IntegrandSyntaxError(message, tok.pos, self.text)

    def expect(self, text: str) -> _Tok:
        tok = self.peek()
        if tok.text != text or tok.kind == "end":
            self.fail(f"expected {text!r}" + (f", found {tok.text!r}" if tok.text else ", found end of input"))
        return self.take()

    def parse(self) -> _Term:
        if self.peek().kind == "end":
            self.fail("empty expression")
        term = self.sum()
        if self.peek().kind != "end":
            self.fail(f"unexpected {self.peek().text!r}")
        return term

    def sum(self) -> _Term:
        start = self.peek()
        sign = 1
        if start.text in "+-" and start.kind == "op":
            self.take()
            sign = -1 if start.text == "-" else 1
        terms = [(sign, self.product(), start)]
        while self.peek().kind == "op" and self.peek().text in ("+", "-"):
            tok = self.take()
            terms.append((-1 if tok.text == "-" else 1, self.product(), tok))
        if len(terms) == 1:
            s, t, _ = terms[0]
            return _Term(s * t.coeff, t.num, t.den, t.logs) if s < 0 else t
        return self._combine(terms)

    def _combine(self, terms) -> _Term:
        logs = {t.logs for _, t, _ in terms if t.coeff != 0}
        if len(logs) > 1:
            tok = next(tok for _, t, tok in terms if t.logs != terms[0][1].logs)
            self.fail("cannot add terms with and without ln(x)", tok)
        logs = logs.pop() if logs else 0
        # least common denominator over the monic factors
        lcd: dict = {}
        for _, t, _ in terms:
            for f, k in t.den.items():
                lcd[f] = max(lcd.get(f, 0), k)
        total = P.ZERO
        for s, t, _ in terms:
            extra = {f: k - t.den.get(f, 0) for f, k in lcd.items()}
            piece = P.mul(t.expanded_num(), P.product(P.power(f, k) for f, k in extra.items()))
            total = P.add(total, P.scale(piece, s))
        out = _Term.from_poly(total)
        return _cancel(_Term(out.coeff, out.num, dict(lcd), logs if total else 0))

    def product(self) -> _Term:
        acc = self.power()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.take()
                acc = _mul(acc, self.power())
            elif tok.kind == "op" and tok.text == "/":
                self.take()
                rhs = self.power()
                if rhs.logs:
                    self.fail("ln(x) is not allowed in a denominator", tok)
                if rhs.coeff == 0:
                    self.fail("division by zero", tok)
                acc = _mul(acc, _Term(1 / rhs.coeff, dict(rhs.den), dict(rhs.num), 0))
            elif tok.kind in ("num", "name") or (tok.kind == "op" and tok.text == "("):
                acc = _mul(acc, self.power())
            else:
                return acc

    def power(self) -> _Term:
        base = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text in ("^", "**"):
            self.take()
            etok = self.peek()
            if etok.kind != "num" or not etok.text.isdigit():
                self.fail("exponent must be a non-negative integer", etok)
            self.take()
            k = int(etok.text)
            if k > 64:
                self.fail("exponent too large", etok)
            return _Term(
                base.coeff ** k,
                {f: m * k for f, m in base.num.items()} if k else {},
                {f: m * k for f, m in base.den.items()} if k else {},
                base.logs * k,
            )
        return base

    def atom(self) -> _Term:
        tok = self.peek()
        if tok.kind == "num":
            self.take()
            return _Term(Fraction(tok.text))
        if tok.kind == "name":
            self.take()
            if tok.text == "x":
                return _Term.from_poly(P.X)
            if tok.text in ("ln", "log"):
                self.expect("(")
                arg = self.peek()
                if arg.text != "x":
                    self.fail("only ln(x) is supported", arg)
                self.take()
                self.expect(")")
                return _Term(logs=1)
            self.fail(f"unknown name {tok.text!r}", tok)
        if tok.kind == "op" and tok.text == "(":
            self.take()
            inner = self.sum()
            self.expect(")")
            return inner
        if tok.kind == "end":
            self.fail("unexpected end of input", tok)
        self.fail(f"unexpected {tok.text!r}", tok)


def _is_square(q: Fraction) -> Fraction | None:
    import math

    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _classify(f: P.Poly, mult: int, linear: list, quad: list) -> None:
    """Sort one monic denominator factor into linear or quadratic poles."""
    name = P.to_text(f)
    d = P.degree(f)
    if d == 1:
        a = f[0]
        if a <= 0:
            raise UnsupportedPoleError(name, f"pole at x = {-a} lies in [0, inf)")
        linear.append((a, mult))
        return
    if d == 2:
        gamma, beta = f[0], f[1]
        if beta == 0 and gamma > 0:
            quad.append((gamma, mult))
            return
        disc = beta * beta - 4 * gamma
        if disc < 0:
            raise UnsupportedPoleError(name, "complex poles off the imaginary axis are not supported")
        root = _is_square(disc)
        if root is None:
            raise UnsupportedPoleError(name, "irrational real poles are not supported")
        for r in ((-beta + root) / 2, (-beta - root) / 2):
            if r >= 0:
                raise UnsupportedPoleError(name, f"pole at x = {r} lies in [0, inf)")
            linear.append((-r, mult))
        return
    raise UnsupportedPoleError(
        name, f"degree {d} factor; write it as a product of (x+a) and (x^2+c) factors")


def parse_integrand(text: str) -> RationalIntegrand:
    """Parse ``text`` into an exact :class:`RationalIntegrand`."""
    term = _cancel(_Parser(text).parse())
    if term.logs > 1:
        raise IntegrandSyntaxError("powers of ln(x) above 1 are not supported", 0, text)
    linear: list = []
    quad: list = []
    for f, k in sorted(term.den.items()):
        _classify(f, k, linear, quad)
    return RationalIntegrand(term.expanded_num(), tuple(linear), tuple(quad), bool(term.logs))
