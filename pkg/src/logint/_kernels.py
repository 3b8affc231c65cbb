"""Hot scalar kernels, each with a numba loop and a numpy twin.

The ``*_nb`` functions are plain loops handed to numba; the ``*_np``
functions do the same arithmetic with array operations.  The public names at
the bottom are bound to one or the other by :data:`logint._accel.USE_NUMBA`.
"""

import math

import numpy as np

from logint._accel import USE_NUMBA, njit

DILOG_TERMS = 60
AVERAGED_TERMS = 64


@njit
def dilog_series_nb(x):
    total = 0.0
    power = 1.0
    for k in range(1, DILOG_TERMS + 1):
        power *= x
        total += power / (k * k)
    return total


def dilog_series_np(x):
    k = np.arange(1, DILOG_TERMS + 1, dtype=np.float64)
    return float(np.sum(np.power(x, k) / (k * k)))


@njit
def odd_square_alternating_nb(x, n_terms):
    # partial sums of sum_k (-1)^k x^(2k+1) / (2k+1)^2, then repeated
    # pairwise averaging (Euler / van Wijngaarden acceleration)
    sums = np.empty(n_terms)
    acc = 0.0
    x2 = x * x
    power = x
    for k in range(n_terms):
        d = 2.0 * k + 1.0
        term = power / (d * d)
        if k % 2 == 1:
            term = -term
        acc += term
        sums[k] = acc
        power *= x2
    m = n_terms
    while m > 1:
        for i in range(m - 1):
            sums[i] = 0.5 * (sums[i] + sums[i + 1])
        m -= 1
    return sums[0]


def odd_square_alternating_np(x, n_terms):
    k = np.arange(n_terms, dtype=np.float64)
    d = 2.0 * k + 1.0
    signs = np.where(k % 2 == 0, 1.0, -1.0)
    sums = np.cumsum(signs * np.power(x, d) / (d * d))
    while sums.size > 1:
        sums = 0.5 * (sums[:-1] + sums[1:])
    return float(sums[0])


@njit
def log_chord_sum_nb(theta, offsets, weights):
    # sum_i w_i * ln(2 sin(t_i / 2)) with t_i = theta * offsets_i / 2
    half = 0.5 * theta
    total = 0.0
    for i in range(offsets.shape[0]):
        t = half * offsets[i]
        if t <= 0.0 or t >= theta:
            continue
        total += weights[i] * math.log(2.0 * math.sin(0.5 * t))
    return total


def log_chord_sum_np(theta, offsets, weights):
    t = 0.5 * theta * offsets
    keep = (t > 0.0) & (t < theta)
    return float(np.sum(weights[keep] * np.log(2.0 * np.sin(0.5 * t[keep]))))


if USE_NUMBA:
    dilog_series = dilog_series_nb
    odd_square_alternating = odd_square_alternating_nb
    log_chord_sum = log_chord_sum_nb
else:
    dilog_series = dilog_series_np
    odd_square_alternating = odd_square_alternating_np
    log_chord_sum = log_chord_sum_np
