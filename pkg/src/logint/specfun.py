"""Exact combinatorial tables and double-precision special functions.

Harmonic numbers, Stirling numbers and the half-integer values of the gamma
and digamma functions are exact (``int`` / ``Fraction``).  The dilogarithm,
inverse tangent integral, Clausen function and Lobachevsky function are
binary64.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from logint import _kernels
from logint.constexpr import Atom, ConstantExpr, catalan_float
from logint.errors import CapacityError, DomainError
from logint.oracle import tanh_sinh_rule

N_MAX = 64

PI2_6 = math.pi * math.pi / 6.0


@lru_cache(maxsize=None)
def harmonic(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0."""
    if n < 0:
        raise DomainError(f"harmonic number needs n >= 0, got {n}")
    if n == 0:
        return Fraction(0)
    return harmonic(n - 1) + Fraction(1, n)


def odd_harmonic(n: int) -> Fraction:
    """1 + 1/3 + ... + 1/(2n-1) = H_{2n} - H_n / 2."""
    if n < 0:
        raise DomainError(f"odd harmonic sum needs n >= 0, got {n}")
    return harmonic(2 * n) - harmonic(n) / 2


class StirlingTable:
    """Unsigned Stirling numbers of the first kind c(n, k) for 1 <= n <= n_max.

    Built from c(n+1, k) = c(n, k-1) + n c(n, k).  The signed numbers are
    ``(-1)**(n+k) * c(n, k)``.
    """

    def __init__(self, n_max: int = N_MAX):
        self.n_max = n_max
        rows = [(1,)]  # c(1, 1)
        for n in range(1, n_max):
            prev = rows[-1]
            row = []
            for k in range(1, n + 2):
                left = prev[k - 2] if k >= 2 else 0
                here = prev[k - 1] if k <= n else 0
                row.append(left + n * here)
            rows.append(tuple(row))
        self._rows = tuple(rows)

    def __call__(self, n: int, k: int) -> int:
        if n < 1 or n > self.n_max:
            raise CapacityError(f"Stirling table covers 1 <= n <= {self.n_max}, got n = {n}")
        if k < 1 or k > n:
            return 0
        return self._rows[n - 1][k - 1]

    def signed(self, n: int, k: int) -> int:
        return (-1) ** ((n + k) % 2) * self(n, k)

    def row(self, n: int) -> tuple[int, ...]:
        if n < 1 or n > self.n_max:
            raise CapacityError(f"Stirling table covers 1 <= n <= {self.n_max}, got n = {n}")
        return self._rows[n - 1]


STIRLING = StirlingTable()


def stirling1_unsigned(n: int, k: int) -> int:
    return STIRLING(n, k)


@dataclass(frozen=True)
class HalfGammaValue:
    """``coeff * sqrt(pi)``."""

    coeff: Fraction

    def to_float(self) -> float:
        return float(self.coeff) * math.sqrt(math.pi)


def gamma_half(n: int) -> HalfGammaValue:
    """Gamma(n + 1/2) = (2n)! / (4^n n!) * sqrt(pi)."""
    if n < 0:
        raise DomainError(f"gamma_half needs n >= 0, got {n}")
    return HalfGammaValue(Fraction(math.factorial(2 * n), 4**n * math.factorial(n)))


def digamma_half(n: int) -> ConstantExpr:
    """psi(n + 1/2) = -gamma - 2 ln 2 + 2 H_{2n} - H_n."""
    if n < 0:
        raise DomainError(f"digamma_half needs n >= 0, got {n}")
    return ConstantExpr({
        Atom.One: 2 * harmonic(2 * n) - harmonic(n),
        Atom.Ln2: -2,
        Atom.EulerGamma: -1,
    })


def dilog(x: float) -> float:
    """Real dilogarithm Li2(x) for x <= 1.

    Power series on [-1/2, 1/2]; reflection Li2(x) + Li2(1-x) on (1/2, 1);
    Landen's identity on [-1, -1/2); inversion below -1.
    """
    x = float(x)
    if x > 1.0:
        raise DomainError(f"dilog is real only for x <= 1, got {x}")
    if x == 1.0:
        return PI2_6
    if x < -1.0:
        lt = math.log(-x)
        return -PI2_6 - 0.5 * lt * lt - dilog(1.0 / x)
    if x < -0.5:
        l1 = math.log1p(-x)
        return -_kernels.dilog_series(x / (x - 1.0)) - 0.5 * l1 * l1
    if x <= 0.5:
        return _kernels.dilog_series(x)
    return PI2_6 - math.log(x) * math.log1p(-x) - _kernels.dilog_series(1.0 - x)


def ti2(x: float) -> float:
    """Inverse tangent integral Ti2(x) = int_0^x arctan(t)/t dt for x >= 0."""
    x = float(x)
    if x < 0.0:
        raise DomainError(f"ti2 is implemented for x >= 0, got {x}")
    if x <= 1.0:
        return _kernels.odd_square_alternating(x, _kernels.AVERAGED_TERMS)
    inv = 1.0 / x
    return _kernels.odd_square_alternating(inv, _kernels.AVERAGED_TERMS) + 0.5 * math.pi * math.log(x)


_CLAUSEN_OFFSETS, _CLAUSEN_WEIGHTS = tanh_sinh_rule(6)


@lru_cache(maxsize=4096)
def _clausen_reduced(theta: float) -> float:
    # theta in (0, pi]
    return -0.5 * theta * _kernels.log_chord_sum(theta, _CLAUSEN_OFFSETS, _CLAUSEN_WEIGHTS)


def clausen2(theta: float) -> float:
    """Cl2(theta) = sum sin(k theta)/k^2 = -int_0^theta ln|2 sin(t/2)| dt."""
    r = math.remainder(float(theta), 2.0 * math.pi)
    if r == 0.0:
        return 0.0
    if r < 0.0:
        return -_clausen_reduced(-r)
    return _clausen_reduced(r)


def lobachevsky(x: float) -> float:
    """L(x) = -int_0^x ln cos t dt = x ln 2 - Cl2(pi - 2x)/2 on [0, pi/2]."""
    x = float(x)
    if not 0.0 <= x <= 0.5 * math.pi:
        raise DomainError(f"lobachevsky is defined on [0, pi/2], got {x}")
    return x * math.log(2.0) - 0.5 * clausen2(math.pi - 2.0 * x)


def constants() -> dict[str, ConstantExpr]:
    return {
        "pi": ConstantExpr.of(Pi=1),
        "ln2": ConstantExpr.of(Ln2=1),
        "gamma": ConstantExpr.of(EulerGamma=1),
        "G": ConstantExpr.of(Catalan=1),
        "zeta2": ConstantExpr.of(PiSq=Fraction(1, 6)),
        "alt_zeta2": ConstantExpr.of(PiSq=Fraction(1, 12)),
        "odd_zeta2": ConstantExpr.of(PiSq=Fraction(1, 8)),
    }


def catalan() -> float:
    return catalan_float()
