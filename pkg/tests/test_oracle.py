import math

import numpy as np
import pytest

from logint.oracle import (
    Interval,
    QuadratureError,
    finite_nodes,
    integrate,
    integrate_finite,
    integrate_half_line,
    tanh_sinh_rule,
)


def test_interval_validation():
    with pytest.raises(ValueError):
        Interval(1.0, 0.0)
    with pytest.raises(ValueError):
        Interval(0.0, 1.0, (0.5, 0.2))
    with pytest.raises(ValueError):
        Interval(0.0, 1.0, (1.0,))
    with pytest.raises(ValueError):
        Interval.finite(0.0, math.inf)
    assert Interval.half_line().kind == "half_line"
    assert Interval.finite(0, 2, (1,)).panels() == [(0.0, 1.0), (1.0, 2.0)]


def test_log_endpoint_singularity():
    r = integrate_finite(np.log, 0.0, 1.0)
    assert r.converged
    assert abs(r.value + 1.0) < 1e-14


def test_inverse_sqrt_singularity():
    r = integrate_finite(lambda x: 1.0 / np.sqrt(x), 0.0, 1.0)
    assert abs(r.value - 2.0) < 1e-12


def test_polynomial_is_exact():
    r = integrate_finite(lambda x: x**10, 0.0, 1.0)
    assert abs(r.value - 1.0 / 11) < 1e-15


def test_half_line_log_over_quadratic_is_zero():
    r = integrate_half_line(lambda x: np.log(x) / (1 + x * x))
    assert r.converged
    assert abs(r.value) < 1e-14


def test_half_line_shifted_start():
    r = integrate(lambda x: np.exp(-x), Interval.half_line(2.0))
    assert abs(r.value - math.exp(-2.0)) < 1e-14


def test_scalar_only_integrand_is_supported():
    r = integrate_finite(lambda x: math.log1p(x) / x, 0.0, 1.0)
    assert abs(r.value - math.pi**2 / 12) < 1e-14


def test_nan_raises_quadrature_error():
    with pytest.raises(QuadratureError) as info:
        integrate_finite(lambda x: np.where(x > 0.5, np.nan, x), 0.0, 1.0)
    assert info.value.abscissa > 0.5


def test_unreachable_tolerance_reports_non_convergence():
    r = integrate_finite(lambda x: np.abs(x - 0.3), 0.0, 1.0, tol=1e-300)
    assert not r.converged
    assert r.err_estimate > 0


def test_tolerance_must_be_positive():
    with pytest.raises(ValueError):
        integrate_finite(np.log, 0.0, 1.0, tol=0.0)


def test_nodes_stay_inside_interval():
    side, near, w = finite_nodes(8)
    assert np.all((near > 0) & (near <= 1))
    assert np.all(w > 0)
    offsets, weights = tanh_sinh_rule(6)
    # seen from the lower end, nodes crowding the upper end round to 2
    assert np.all((offsets > 0) & (offsets <= 2))
    assert abs(weights.sum() - 2.0) < 1e-14
