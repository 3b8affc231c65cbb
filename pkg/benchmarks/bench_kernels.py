"""Time the numba kernels against their numpy twins.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both flavours are imported directly, so the LOGINT_DISABLE_NUMBA switch
does not matter here.  Prints one line per kernel with the best time per
call and the largest disagreement seen.
"""

import argparse
import timeit

import numpy as np

from logint import _kernels as K
from logint._accel import HAVE_NUMBA
from logint.oracle import tanh_sinh_rule


def cases():
    xs = np.linspace(-0.5, 0.5, 101)
    ts = np.linspace(0.05, 1.0, 41)
    offsets, weights = tanh_sinh_rule(6)
    thetas = np.linspace(0.1, np.pi, 41)
    yield ("dilog_series", K.dilog_series_nb, K.dilog_series_np, [(float(x),) for x in xs])
    yield ("odd_square_alternating", K.odd_square_alternating_nb, K.odd_square_alternating_np,
           [(float(t), K.AVERAGED_TERMS) for t in ts])
    yield ("log_chord_sum", K.log_chord_sum_nb, K.log_chord_sum_np,
           [(float(th), offsets, weights) for th in thetas])


def bench(fn, args_list, repeat):
    for args in args_list:  # warm up / compile
        fn(*args)
    run = lambda: [fn(*args) for args in args_list]  # noqa: E731
    best = min(timeit.repeat(run, number=20, repeat=repeat))
    return best / (20 * len(args_list))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not HAVE_NUMBA:
        print("numba not installed; the *_nb kernels are plain python")
    print(f"{'kernel':<24} {'numba us':>10} {'numpy us':>10} {'speedup':>8} {'max diff':>10}")
    for name, nb, npf, arglist in cases():
        diff = max(abs(nb(*a) - npf(*a)) for a in arglist)
        t_nb = bench(nb, arglist, args.repeat)
        t_np = bench(npf, arglist, args.repeat)
        print(f"{name:<24} {t_nb * 1e6:>10.2f} {t_np * 1e6:>10.2f} {t_np / t_nb:>8.1f} {diff:>10.2e}")


if __name__ == "__main__":
    main()
