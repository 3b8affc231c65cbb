"""Closed forms and recurrences for the basic integral families.

    h1(m, b)      = int_0^b ln t / (1+t)^m dt
    f_n(n, x)     = int_0^x dt / (1+t^2)^(n+1)
    g_n(n, x)     = int_0^x ln t / (1+t^2)^(n+1) dt
    h2(n, a, b)   = int_0^b ln t / (t^2+a^2)^(n+1) dt

plus the half-line values, the log-sine family and a few elementary pieces.
Most families come with a second (and sometimes third) independent
evaluation path so they can be checked against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from logint.constexpr import Atom, ConstantExpr
from logint.errors import CapacityError, DivergenceError, DomainError
from logint.specfun import (
    N_MAX,
    STIRLING,
    clausen2,
    dilog,
    harmonic,
    odd_harmonic,
    ti2,
)

LN2 = math.log(2.0)
EULER_GAMMA = 0.57721566490153286061


@dataclass(frozen=True)
class BasisValue:
    value: float
    trace: list[tuple[str, float]] | None = field(default=None, compare=False)


# ---------------------------------------------------------------- exact layer


@dataclass(frozen=True)
class TPolynomial:
    """T_n(b) with exact integer coefficients, lowest degree first."""

    n: int
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, b: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * b + c
        return acc


def _check_capacity(n: int) -> None:
    if n > N_MAX:
        raise CapacityError(f"tables cover n <= {N_MAX}, got {n}")


@lru_cache(maxsize=None)
def _t_coeffs(n: int) -> tuple[int, ...]:
    if n == 2:
        return ()
    # T_{m+2} = m (1+b) T_{m+1} + (m-1)! ((1+b)^m - 1)/b, with m = n - 2
    m = n - 2
    prev = _t_coeffs(n - 1)
    out = [0] * (m)  # degree n-3
    for j, c in enumerate(prev):
        out[j] += m * c
        out[j + 1] += m * c
    fact = math.factorial(m - 1)
    for i in range(1, m + 1):
        out[i - 1] += fact * math.comb(m, i)
    return tuple(out)


def t_polynomial(n: int) -> TPolynomial:
    if n < 2:
        raise DomainError(f"T_n is defined for n >= 2, got {n}")
    _check_capacity(n)
    return TPolynomial(n, _t_coeffs(n))


def a_coeff(n: int, j: int) -> Fraction:
    """a_{n,j} = (-1)^j / (j+1)! * C(n-2, j+1) * s(j+2, 2), s signed."""
    if n < 3 or not 0 <= j <= n - 3:
        raise DomainError(f"a_coeff needs n >= 3 and 0 <= j <= n-3, got ({n}, {j})")
    _check_capacity(n)
    return Fraction((-1) ** j * math.comb(n - 2, j + 1) * STIRLING.signed(j + 2, 2),
                    math.factorial(j + 1))


@lru_cache(maxsize=None)
def _stirling_sum_coeffs(n: int) -> tuple[float, ...]:
    # C(n-1, j) |s(j+1, 2)| / j!  for j = 0..n-1 (j = 0 term is zero)
    return tuple(float(Fraction(math.comb(n - 1, j) * STIRLING(j + 1, 2), math.factorial(j)))
                 for j in range(n))


def _over_power(coeffs: Sequence[float], b: float, power: int) -> float:
    """sum_j c_j b^j / (1+b)^power without forming b^j, for power >= degree."""
    r = b / (1.0 + b)
    u = 1.0 / (1.0 + b)
    total = 0.0
    for j, c in enumerate(coeffs):
        if c:
            total += c * r**j * u ** (power - j)
    return total


# ---------------------------------------------------------------- h1 family


def _check_b(b: float) -> float:
    b = float(b)
    if not b > 0:
        raise DomainError(f"upper limit must be positive, got {b}")
    return b


def h1_half_line(m: int) -> Fraction:
    """int_0^inf ln t/(1+t)^m dt = -H_{m-2}/(m-1) for m >= 2."""
    if m < 2:
        raise DivergenceError(f"int_0^inf ln t/(1+t)^{m} dt diverges")
    return -harmonic(m - 2) / (m - 1)


def h1(m: int, b: float) -> float:
    """int_0^b ln t / (1+t)^m dt.

    m = 1 goes through the dilogarithm; m >= 2 uses the Stirling-number
    closed form.  ``b = inf`` is accepted for m >= 2.
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise DomainError(f"h1 needs an integer m >= 1, got {m}")
    b = _check_b(b)
    if math.isinf(b):
        return float(h1_half_line(m))
    lb = math.log(b)
    l1b = math.log1p(b)
    if m == 1:
        return lb * l1b + dilog(-b)
    n = m - 1
    _check_capacity(n + 1)
    head = -math.expm1(-n * l1b) * lb / n - l1b / n
    # 1/(n (1+b)^(n-1)) sum_j c_j b^j
    tail = _over_power(_stirling_sum_coeffs(n), b, n - 1) / n
    return head - tail


def h1_via_recurrence(m: int, b: float) -> float:
    """h1 from q_m = X_m ln b + Y_m ln(1+b) + Z_m with Z_m built from T_m."""
    if m < 2:
        raise DomainError(f"recurrence path needs m >= 2, got {m}")
    b = _check_b(b)
    if math.isinf(b):
        raise DomainError("recurrence path needs a finite upper limit")
    _check_capacity(m)
    k = m - 1
    lb = math.log(b)
    l1b = math.log1p(b)
    x_part = -math.expm1(-k * l1b) / k
    y_part = -1.0 / k
    t = t_polynomial(m)
    z_part = -b * _over_power([float(c) for c in t.coeffs], b, m - 2) / math.factorial(k)
    return x_part * lb + y_part * l1b + z_part


def stir2_int(n: int, a: float) -> float:
    """int_a^1 s^(n-1) ln(1-s) ds for 0 <= a < 1."""
    if n < 1:
        raise DomainError(f"stir2_int needs n >= 1, got {n}")
    a = float(a)
    if not 0.0 <= a < 1.0:
        raise DomainError(f"stir2_int needs 0 <= a < 1, got {a}")
    _check_capacity(n)
    an = a**n
    head = (1.0 - an) / (n * n) * (n * math.log1p(-a) - 1.0)
    coeffs = _stirling_sum_coeffs(n)
    tail = math.fsum(coeffs[j] * a ** (n - 1 - j) * (1.0 - a) ** j for j in range(1, n))
    return head - tail / n


def stir2_int_at_zero(n: int) -> Fraction:
    """-(1/n^2 + |s(n,2)|/n!), the a = 0 value of :func:`stir2_int`."""
    if n < 1:
        raise DomainError(f"stir2_int needs n >= 1, got {n}")
    _check_capacity(n)
    return -(Fraction(1, n * n) + Fraction(STIRLING(n, 2), math.factorial(n)))


# ---------------------------------------------------------------- f_n family


def _lambda(j: int) -> Fraction:
    return Fraction(4**j, math.comb(2 * j, j))


@lru_cache(maxsize=None)
def _prop_coeffs(n: int) -> tuple[float, tuple[float, ...]]:
    lead = Fraction(math.comb(2 * n, n), 4**n)
    inner = tuple(float(_lambda(j) / (2 * j)) for j in range(1, n + 1))
    return float(lead), inner


def _check_n(n: int) -> None:
    if n < 0:
        raise DomainError(f"index must be >= 0, got {n}")


def _check_x(x: float) -> float:
    x = float(x)
    if x < 0:
        raise DomainError(f"upper limit must be >= 0, got {x}")
    return x


def f_n(n: int, x: float) -> float:
    """int_0^x dt/(1+t^2)^(n+1) via the explicit binomial sum."""
    _check_n(n)
    x = _check_x(x)
    if math.isinf(x):
        return float(wallis(n)) * math.pi
    lead, inner = _prop_coeffs(n)
    q = 1.0 / (x * x + 1.0)
    acc = math.atan(x)
    qj = 1.0
    for c in inner:
        qj *= q
        acc += c * x * qj
    return lead * acc


def f_n_recur(n: int, x: float) -> float:
    """f_n from 2k f_k = (2k-1) f_{k-1} + x/(x^2+1)^k."""
    return f_n_sequence(n, x)[n]


def f_n_sequence(n: int, x: float) -> list[float]:
    _check_n(n)
    x = _check_x(x)
    q = 1.0 / (x * x + 1.0)
    out = [math.atan(x)]
    qk = 1.0
    for k in range(1, n + 1):
        qk *= q
        out.append(((2 * k - 1) * out[-1] + x * qk) / (2 * k))
    return out


def _double_factorial(m: int) -> int:
    return math.prod(range(m, 0, -2)) if m > 0 else 1


@lru_cache(maxsize=None)
def _doublefact_coeffs(n: int) -> tuple[float, tuple[float, ...]]:
    atan_c = Fraction(_double_factorial(2 * n - 1), 2**n * math.factorial(n))
    inner = tuple(
        float(Fraction(_double_factorial(2 * n + 1) * math.factorial(n - k),
                       _double_factorial(2 * n - 2 * k + 1) * 2**k * math.factorial(n) * (2 * n + 1)))
        for k in range(1, n + 1)
    )
    return float(atan_c), inner


def f_n_doublefact(n: int, x: float) -> float:
    """f_n in the double-factorial arrangement (table entry 2.148.4)."""
    _check_n(n)
    x = _check_x(x)
    atan_c, inner = _doublefact_coeffs(n)
    q = 1.0 / (1.0 + x * x)
    total = atan_c * math.atan(x)
    for k, c in enumerate(inner, start=1):
        total += c * x * q ** (n + 1 - k)
    return total


def solve_halfint_recurrence(z0: float, r: Sequence[float]) -> list[float]:
    """Solve 2n z_n - (2n-1) z_{n-1} = r_n given z_0 and r_1, r_2, ...

    Returns ``[z_0, z_1, ..., z_N]`` from z_n = (z_0 + sum_k lam_k r_k/(2k)) / lam_n
    with lam_j = 4^j / C(2j, j).
    """
    out = [float(z0)]
    lam = 1.0
    acc = float(z0)
    for k, rk in enumerate(r, start=1):
        lam *= 2 * k / (2 * k - 1)
        acc += lam * rk / (2 * k)
        out.append(acc / lam)
    return out


# ---------------------------------------------------------------- g_n family


def g0(x: float) -> float:
    """int_0^x ln t/(1+t^2) dt = ln x arctan x - Ti2(x)."""
    x = _check_x(x)
    if x == 0.0:
        return 0.0
    return math.log(x) * math.atan(x) - ti2(x)


def p_poly(j: int, x: float) -> float:
    """p_j(x) = sum_{k=1}^j 4^k/(2k C(2k,k)) * x/(1+x^2)^k."""
    _check_n(j)
    _, inner = _prop_coeffs(j)
    q = 1.0 / (1.0 + x * x)
    qk = 1.0
    total = 0.0
    for c in inner:
        qk *= q
        total += c * x * qk
    return total


def p_at_one(n: int) -> Fraction:
    """p_n(1) = (1/2) sum_{j=1}^n 2^j/(j C(2j,j)), exactly."""
    _check_n(n)
    return sum((Fraction(2**j, 2 * j * math.comb(2 * j, j)) for j in range(1, n + 1)), Fraction(0))


def g_n(n: int, x: float) -> float:
    """int_0^x ln t/(1+t^2)^(n+1) dt in closed form (arctan, Ti2 and p_j)."""
    _check_n(n)
    x = _check_x(x)
    if math.isinf(x):
        return halfline_log_int(n).to_float()
    if x == 0.0:
        return 0.0
    lead, inner = _prop_coeffs(n)
    lx = math.log(x)
    at = math.atan(x)
    q = 1.0 / (1.0 + x * x)
    p = [0.0]
    qk = 1.0
    for c in inner:
        qk *= q
        p.append(p[-1] + c * x * qk)
    correction = math.fsum((at + p[k - 1]) / (2 * k - 1) for k in range(1, n + 1))
    return lead * (g0(x) + p[n] * lx - correction)


def g_n_recur(n: int, x: float) -> float:
    """g_n from 2k g_k - (2k-1) g_{k-1} = 2k ln x f_k - ((2k-1) ln x + 1) f_{k-1}."""
    _check_n(n)
    x = _check_x(x)
    if x == 0.0:
        return 0.0
    lx = math.log(x)
    f = f_n_sequence(n, x)
    r = [2 * k * lx * f[k] - ((2 * k - 1) * lx + 1.0) * f[k - 1] for k in range(1, n + 1)]
    return solve_halfint_recurrence(g0(x), r)[n]


def g_n_series(n: int, x: float, tol: float = 1e-15, max_terms: int = 1_000_000) -> float:
    """g_n from the binomial series, summed in 50-digit decimal arithmetic.

    Only for 0 < x < 1: at x = 1 the terms grow like k^(n-1).
    """
    _check_n(n)
    x = float(x)
    if not 0.0 < x < 1.0:
        raise DomainError(f"series path needs 0 < x < 1, got {x}")
    lx = math.log(x)
    with localcontext() as ctx:
        ctx.prec = 50
        dx = Decimal(x)
        x2 = dx * dx
        power = dx
        sum_a = Decimal(0)
        sum_b = Decimal(0)
        binom = 1
        for k in range(max_terms):
            d = 2 * k + 1
            term = binom * power / d
            if k % 2:
                term = -term
            sum_a += term
            sum_b += term / d
            size = abs(float(term)) * (abs(lx) + 1.0 / d)
            decreasing = (n + k + 1) * x * x < (k + 1)
            if decreasing and size < 0.01 * tol:
                break
            power *= x2
            binom = binom * (n + k + 1) // (k + 1)
        else:
            raise ArithmeticError("g_n series did not reach tolerance")
        return lx * float(sum_a) - float(sum_b)


def h2(n: int, a: float, b: float) -> float:
    """int_0^b ln t/(t^2+a^2)^(n+1) dt = a^(-2n-1) (ln a f_n(b/a) + g_n(b/a))."""
    _check_n(n)
    a = float(a)
    if not a > 0:
        raise DomainError(f"h2 needs a > 0, got {a}")
    b = _check_b(b)
    if math.isinf(b):
        return entry_42317(n, a, 1.0)
    x = b / a
    scale = a ** (-2 * n - 1)
    return scale * (math.log(a) * f_n(n, x) + g_n(n, x))


# ---------------------------------------------------------------- half line


def wallis(n: int) -> Fraction:
    """int_0^inf dt/(1+t^2)^(n+1) = (this) * pi = C(2n,n)/2^(2n+1) * pi."""
    _check_n(n)
    return Fraction(math.comb(2 * n, n), 2 ** (2 * n + 1))


def halfline_log_int(n: int) -> ConstantExpr:
    """int_0^inf ln x/(1+x^2)^(n+1) dx = -pi C(2n,n)/2^(2n+1) * sum_{k<=n} 1/(2k-1)."""
    return ConstantExpr({Atom.Pi: -wallis(n) * odd_harmonic(n)})


_ASYMPTOTIC_DIGAMMA = (
    Fraction(1, 12), Fraction(-1, 120), Fraction(1, 252), Fraction(-1, 240),
    Fraction(1, 132), Fraction(-691, 32760), Fraction(1, 12),
)


def digamma(x: float) -> float:
    """Real digamma for x > 0: shift above 10, then the Stirling asymptotic series."""
    x = float(x)
    if not x > 0:
        raise DomainError(f"digamma helper needs x > 0, got {x}")
    shift = 0.0
    while x < 10.0:
        shift -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    power = inv2
    for c in _ASYMPTOTIC_DIGAMMA:
        series += float(c) * power
        power *= inv2
    return shift + math.log(x) - 0.5 / x - series


def log_gamma(x: float) -> float:
    return math.lgamma(x)


def halfline_log_power(beta: float) -> float:
    """int_0^inf ln t/(1+t^2)^beta dt for beta > 1/2.

    Differentiating B((a+1)/2, beta-(a+1)/2)/2 at a = 0 gives
    sqrt(pi) Gamma(beta-1/2) (psi(1/2) - psi(beta-1/2)) / (4 Gamma(beta)).
    """
    beta = float(beta)
    if not beta > 0.5:
        raise DivergenceError(f"int_0^inf ln t/(1+t^2)^beta diverges for beta = {beta} <= 1/2")
    ratio = math.exp(log_gamma(beta - 0.5) - log_gamma(beta))
    psi_half = -EULER_GAMMA - 2.0 * LN2
    return math.sqrt(math.pi) * ratio * (psi_half - digamma(beta - 0.5)) / 4.0


def entry_42317(n: int, a: float, b: float) -> float:
    """int_0^inf ln x/(a^2+b^2 x^2)^(n+1) dx.

    With c = a/b this is b^(-2n-2) pi/(2c)^(2n+1) C(2n,n) (ln c - sum_{k<=n} 1/(2k-1)).
    """
    _check_n(n)
    a, b = float(a), float(b)
    if not (a > 0 and b > 0):
        raise DomainError(f"entry_42317 needs a, b > 0, got ({a}, {b})")
    c = a / b
    core = math.pi / (2.0 * c) ** (2 * n + 1) * math.comb(2 * n, n)
    return b ** (-2 * n - 2) * core * (math.log(c) - float(odd_harmonic(n)))


# ---------------------------------------------------------------- trigonometric


def _check_angle(x: float) -> float:
    x = float(x)
    if not 0.0 < x <= 0.5 * math.pi:
        raise DomainError(f"angle must lie in (0, pi/2], got {x}")
    return x


def logsin_int(x: float) -> float:
    """int_0^x ln sin t dt = -x ln 2 - Cl2(2x)/2."""
    x = _check_angle(x)
    return -x * LN2 - 0.5 * clausen2(2.0 * x)


def logcos_int(x: float) -> float:
    """int_0^x ln cos t dt = -x ln 2 + Cl2(pi - 2x)/2."""
    x = _check_angle(x)
    return -x * LN2 + 0.5 * clausen2(math.pi - 2.0 * x)


def logtan_int(x: float) -> float:
    return logsin_int(x) - logcos_int(x)


def tcot_int(x: float) -> float:
    """int_0^x t cot t dt, by parts: x ln sin x - int_0^x ln sin t dt."""
    x = _check_angle(x)
    return x * math.log(math.sin(x)) - logsin_int(x)


def poly_log_piece(k: int, b: float) -> float:
    """int_0^b t^k ln t dt = b^(k+1)/(k+1) (ln b - 1/(k+1))."""
    _check_n(k)
    b = _check_b(b)
    if math.isinf(b):
        raise DivergenceError("int_0^inf t^k ln t dt diverges")
    return b ** (k + 1) / (k + 1) * (math.log(b) - 1.0 / (k + 1))
