import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logint import specfun
from logint.constexpr import Atom, ConstantExpr
from logint.errors import CapacityError, DomainError

mpmath.mp.dps = 30


def rel(a, b):
    return abs(a - b) / max(1.0, abs(b))


# ---------------------------------------------------------------- exact layer


def test_harmonic_small_values():
    assert specfun.harmonic(0) == 0
    assert specfun.harmonic(1) == 1
    assert specfun.harmonic(4) == Fraction(25, 12)


def test_harmonic_rejects_negative():
    with pytest.raises(DomainError):
        specfun.harmonic(-1)


def test_odd_harmonic_matches_direct_sum():
    for n in range(0, 12):
        assert specfun.odd_harmonic(n) == sum((Fraction(1, 2 * k - 1) for k in range(1, n + 1)), Fraction(0))


def test_stirling_table_rows():
    assert specfun.STIRLING.row(4) == (6, 11, 6, 1)
    assert specfun.STIRLING(5, 2) == 50
    assert specfun.STIRLING.signed(5, 2) == -50
    assert specfun.STIRLING.signed(4, 2) == 11
    assert specfun.STIRLING(3, 7) == 0


@pytest.mark.parametrize("n", [2, 5, 10, 30, 64])
def test_stirling_second_column_is_factorial_times_harmonic(n):
    assert specfun.STIRLING(n, 2) == math.factorial(n - 1) * specfun.harmonic(n - 1)


def test_stirling_row_sums_to_factorial():
    for n in (1, 7, 20):
        assert sum(specfun.STIRLING.row(n)) == math.factorial(n)


def test_stirling_capacity():
    with pytest.raises(CapacityError):
        specfun.STIRLING(65, 2)
    with pytest.raises(CapacityError):
        specfun.STIRLING(0, 0)


def test_gamma_half_values():
    assert specfun.gamma_half(0).coeff == 1
    assert specfun.gamma_half(3).coeff == Fraction(15, 8)
    for n in range(6):
        assert specfun.gamma_half(n).to_float() == pytest.approx(math.gamma(n + 0.5), rel=1e-15)


def test_digamma_half_against_mpmath():
    for n in range(0, 10):
        expr = specfun.digamma_half(n)
        assert isinstance(expr, ConstantExpr)
        assert expr.coefficient(Atom.EulerGamma) == -1
        assert expr.to_float() == pytest.approx(float(mpmath.digamma(n + 0.5)), abs=1e-14)


# ---------------------------------------------------------------- transcendental layer


@pytest.mark.parametrize("x", [-50.0, -3.0, -1.0, -0.75, -0.5, -0.1, 0.0, 0.2, 0.5, 0.7, 0.99, 1.0])
def test_dilog_against_mpmath(x):
    assert rel(specfun.dilog(x), float(mpmath.polylog(2, x))) < 1e-14


def test_dilog_domain():
    with pytest.raises(DomainError):
        specfun.dilog(1.5)


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=0.01, max_value=0.99))
def test_dilog_reflection(x):
    lhs = specfun.dilog(x) + specfun.dilog(1 - x)
    assert lhs == pytest.approx(math.pi**2 / 6 - math.log(x) * math.log(1 - x), abs=2e-15)


@pytest.mark.parametrize("x", [0.0, 0.1, 0.5, 1.0, 2.0, 10.0, 1e6])
def test_ti2_against_mpmath(x):
    ref = mpmath.quad(lambda t: mpmath.atan(t) / t, [0, 1, x]) if x > 1 else mpmath.quad(lambda t: mpmath.atan(t) / t, [0, x])
    assert rel(specfun.ti2(x), float(ref)) < 1e-14


def test_ti2_domain():
    with pytest.raises(DomainError):
        specfun.ti2(-1.0)


@pytest.mark.parametrize("theta", [0.1, 1.0, math.pi / 2, 2.0, math.pi, 4.0, -1.3, 20.0])
def test_clausen_against_mpmath(theta):
    assert abs(specfun.clausen2(theta) - float(mpmath.clsin(2, theta))) < 5e-15


def test_clausen_zeros_and_peak():
    assert specfun.clausen2(0.0) == 0.0
    assert abs(specfun.clausen2(math.pi)) < 1e-15
    assert specfun.clausen2(math.pi / 2) == pytest.approx(specfun.catalan(), abs=1e-15)


def test_lobachevsky_special_values():
    assert specfun.lobachevsky(math.pi / 2) == pytest.approx(math.pi / 2 * math.log(2), abs=1e-15)
    g = specfun.catalan()
    assert specfun.lobachevsky(math.pi / 4) == pytest.approx(math.pi / 4 * math.log(2) - g / 2, abs=1e-15)
    with pytest.raises(DomainError):
        specfun.lobachevsky(2.0)


def test_catalan_value():
    assert specfun.catalan() == pytest.approx(float(mpmath.catalan), abs=2.3e-16)


def test_constants_table():
    c = specfun.constants()
    assert set(c) == {"pi", "ln2", "gamma", "G", "zeta2", "alt_zeta2", "odd_zeta2"}
    assert c["zeta2"].to_float() == pytest.approx(math.pi**2 / 6, rel=1e-16)
    assert c["gamma"].to_float() == pytest.approx(float(mpmath.euler), rel=1e-16)


# ---------------------------------------------------------------- ConstantExpr


def test_constant_expr_algebra():
    a = ConstantExpr.of(PiSq=Fraction(-1, 12))
    b = ConstantExpr.of(PiSq=Fraction(1, 12), One=1)
    assert (a + b) == ConstantExpr.rational(1)
    assert (a * 2).symbolic() == "-pi^2/6"
    assert (a - a).is_zero()
    assert (b / 2).coefficient(Atom.One) == Fraction(1, 2)


def test_constant_expr_symbolic_forms():
    assert ConstantExpr.of(PiLn2=Fraction(-1, 8), Catalan=Fraction(-1, 2)).symbolic() == "-pi*ln2/8 - G/2"
    assert ConstantExpr().symbolic() == "0"
    assert ConstantExpr.of(One=Fraction(1, 4), Pi=Fraction(1, 8)).symbolic() == "1/4 + pi/8"


def test_constant_expr_json_round_trip():
    e = ConstantExpr.of(PiLn2=Fraction(1, 2), Catalan=-1, EulerGamma=Fraction(3, 7))
    assert ConstantExpr.from_json(e.to_json()) == e
    assert hash(ConstantExpr.from_json(e.to_json())) == hash(e)
