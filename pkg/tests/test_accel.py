import os
import subprocess
import sys

import numpy as np
import pytest

from logint import _accel, _kernels
from logint.oracle import tanh_sinh_rule


@pytest.mark.parametrize("x", [-0.5, 0.0, 0.3, 0.5])
def test_dilog_series_paths_agree(x):
    assert _kernels.dilog_series_nb(x) == pytest.approx(_kernels.dilog_series_np(x), rel=1e-15, abs=1e-17)


@pytest.mark.parametrize("x", [0.2, 0.7, 1.0])
def test_odd_square_paths_agree(x):
    a = _kernels.odd_square_alternating_nb(x, _kernels.AVERAGED_TERMS)
    b = _kernels.odd_square_alternating_np(x, _kernels.AVERAGED_TERMS)
    assert a == pytest.approx(b, rel=1e-14)


@pytest.mark.parametrize("theta", [0.1, 1.0, 3.0])
def test_log_chord_paths_agree(theta):
    offsets, weights = tanh_sinh_rule(7)
    offsets = np.ascontiguousarray(offsets)
    weights = np.ascontiguousarray(weights)
    a = _kernels.log_chord_sum_nb(theta, offsets, weights)
    b = _kernels.log_chord_sum_np(theta, offsets, weights)
    assert a == pytest.approx(b, rel=1e-13)


def test_binding_follows_switch():
    expected = _kernels.dilog_series_nb if _accel.USE_NUMBA else _kernels.dilog_series_np
    assert _kernels.dilog_series is expected


def _probe(flag):
    env = dict(os.environ)
    env.pop("LOGINT_DISABLE_NUMBA", None)
    if flag is not None:
        env["LOGINT_DISABLE_NUMBA"] = flag
    code = ("from logint import _accel, specfun;"
            "print(_accel.USE_NUMBA, repr(specfun.catalan()), repr(specfun.clausen2(1.0)))")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return out.stdout.split()


def test_env_flag_selects_numpy_and_results_match():
    fallback = _probe("1")
    assert fallback[0] == "False"
    default = _probe(None)
    assert default[0] == str(_accel.HAVE_NUMBA)
    for a, b in zip(default[1:], fallback[1:]):
        assert float(a) == pytest.approx(float(b), rel=1e-14)
