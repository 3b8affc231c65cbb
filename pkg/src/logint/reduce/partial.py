"""Exact partial fractions over ``(x+a)^k`` and ``(x^2+c)^k`` denominators."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from logint.reduce import polynomial as P
from logint.reduce.integrand import RationalIntegrand, _frac_text


@dataclass(frozen=True)
class PartialFractionForm:
    """``poly_part + sum c/(x+a)^k + sum (p x + q)/(x^2+c)^k``.

    ``linear_terms`` holds ``(a, k, coeff)``; ``quad_terms`` holds
    ``(c, k, p, q)`` with ``c`` the squared pole modulus.  Terms with zero
    coefficients are dropped; ordering follows the factor order.
    """

    poly_part: P.Poly
    linear_terms: tuple[tuple[Fraction, int, Fraction], ...]
    quad_terms: tuple[tuple[Fraction, int, Fraction, Fraction], ...]
    source: RationalIntegrand

    def text(self) -> str:
        parts = []
        if self.poly_part:
            parts.append(P.to_text(self.poly_part))
        for a, k, c in self.linear_terms:
            den = f"(x+{_frac_text(a)})" + (f"^{k}" if k > 1 else "")
            parts.append(f"{_frac_text(c)}/{den}")
        for c, k, p, q in self.quad_terms:
            den = f"(x^2+{_frac_text(c)})" + (f"^{k}" if k > 1 else "")
            num = P.poly((q, p))
            parts.append(f"({P.to_text(num)})/{den}" if P.degree(num) > 0 else f"{_frac_text(q)}/{den}")
        if not parts:
            return "0"
        out = parts[0]
        for part in parts[1:]:
            out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return out


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gauss-Jordan elimination over the rationals (square, nonsingular)."""
    n = len(rhs)
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular partial-fraction system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        pr = rows[col]
        inv = 1 / pr[col]
        for j in range(col, n + 1):
            pr[j] *= inv
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                row = rows[r]
                for j in range(col, n + 1):
                    row[j] -= f * pr[j]
    return [rows[i][n] for i in range(n)]


def _basis_columns(r: RationalIntegrand):
    """Numerator polynomials D/(factor^k), one per unknown, with labels."""
    den = r.denominator()
    cols = []
    for a, m in r.linear:
        f = (a, Fraction(1))
        for k in range(1, m + 1):
            quo, rem = P.divmod_poly(den, P.power(f, k))
            assert not rem
            cols.append((("lin", a, k), quo))
    for c, m in r.quad:
        f = (c, Fraction(0), Fraction(1))
        for k in range(1, m + 1):
            quo, rem = P.divmod_poly(den, P.power(f, k))
            assert not rem
            cols.append((("p", c, k), P.mul(P.X, quo)))
            cols.append((("q", c, k), quo))
    return den, cols


def recombine(pf: PartialFractionForm) -> P.Poly:
    """Multiply the decomposition back over the common denominator."""
    r = pf.source
    den = r.denominator()
    total = P.mul(pf.poly_part, den)
    for a, k, c in pf.linear_terms:
        quo, _ = P.divmod_poly(den, P.power((a, Fraction(1)), k))
        total = P.add(total, P.scale(quo, c))
    for c, k, p, q in pf.quad_terms:
        quo, _ = P.divmod_poly(den, P.power((c, Fraction(0), Fraction(1)), k))
        total = P.add(total, P.mul(P.poly((q, p)), quo))
    return total


def partial_fractions(r: RationalIntegrand) -> PartialFractionForm:
    """Decompose ``r`` exactly; the result is checked by recombination."""
    den, cols = _basis_columns(r)
    poly_part, rem = P.divmod_poly(r.numerator, den)
    size = P.degree(den)
    values: dict = {}
    if cols:
        matrix = [[(col[i] if i < len(col) else Fraction(0)) for _, col in cols] for i in range(size)]
        rhs = [rem[i] if i < len(rem) else Fraction(0) for i in range(size)]
        sol = _solve(matrix, rhs)
        values = {label: v for (label, _), v in zip(cols, sol)}
    linear = tuple((a, k, values[("lin", a, k)])
                   for a, m in r.linear for k in range(1, m + 1) if values[("lin", a, k)])
    quad = tuple((c, k, values[("p", c, k)], values[("q", c, k)])
                 for c, m in r.quad for k in range(1, m + 1)
                 if values[("p", c, k)] or values[("q", c, k)])
    pf = PartialFractionForm(poly_part, linear, quad, r)
    if recombine(pf) != r.numerator:
        raise ArithmeticError("partial-fraction recombination failed")
    return pf
