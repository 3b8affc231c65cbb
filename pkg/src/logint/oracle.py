"""Double-exponential quadrature used as the numerical ground truth.

Finite panels use the tanh-sinh map ``x = lo + (hi - lo)/2 * (1 + tanh(pi/2 sinh u))``
and half-line panels the exp-sinh map ``x = lo + exp(pi sinh u)``.  The
trapezoid rule in ``u`` is refined by halving the step until two successive
levels agree.  Nodes are generated as distances from the nearest endpoint, so
logarithmic (and weaker algebraic) endpoint singularities are absorbed without
special handling; a node that rounds onto an endpoint is dropped.

Integrands are called with a 1-d float array and should return an array of
the same shape.  Scalar-only callables are accepted and evaluated point by
point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

MAX_LEVEL = 12
MIN_LEVEL = 3

# exp-sinh panels stop where exp(pi sinh u) leaves [e^-230, e^230]
_HALF_LINE_EXPONENT = 230.0
_HALF_LINE_UMAX = math.asinh(_HALF_LINE_EXPONENT / math.pi)
# tanh-sinh offsets underflow past this
_FINITE_UMAX = math.asinh(700.0 / math.pi)


class QuadratureError(ArithmeticError):
    """The integrand produced a non-finite value at a quadrature node."""

    def __init__(self, abscissa: float, value: float):
        super().__init__(f"integrand returned {value!r} at x = {abscissa!r}")
        self.abscissa = abscissa
        self.value = value


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    err_estimate: float
    n_evals: int
    converged: bool


@dataclass(frozen=True)
class Interval:
    """``[lo, hi]``, or ``[lo, inf)`` when ``hi`` is infinite, with optional interior split points."""

    lo: float = 0.0
    hi: float = math.inf
    splits: tuple[float, ...] = ()

    def __post_init__(self):
        if not math.isfinite(self.lo):
            raise ValueError("lower limit must be finite")
        if not self.lo < self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")
        points = tuple(float(s) for s in self.splits)
        if list(points) != sorted(points) or len(set(points)) != len(points):
            raise ValueError("split points must be strictly increasing")
        if points and not (self.lo < points[0] and points[-1] < self.hi):
            raise ValueError("split points must be interior")
        object.__setattr__(self, "splits", points)

    @classmethod
    def finite(cls, lo: float, hi: float, splits=()) -> "Interval":
        if not math.isfinite(hi):
            raise ValueError("finite interval needs a finite upper limit")
        return cls(float(lo), float(hi), tuple(splits))

    @classmethod
    def half_line(cls, lo: float = 0.0, splits=()) -> "Interval":
        return cls(float(lo), math.inf, tuple(splits))

    @property
    def kind(self) -> str:
        return "half_line" if math.isinf(self.hi) else "finite"

    def panels(self) -> list[tuple[float, float]]:
        edges = [self.lo, *self.splits, self.hi]
        return list(zip(edges[:-1], edges[1:]))


def _level_steps(level: int, umax: float) -> np.ndarray:
    h = 2.0 ** (-level)
    if level == 0:
        k = np.arange(-math.floor(umax), math.floor(umax) + 1, dtype=np.float64)
        return k
    n = math.floor(umax / h)
    k = np.arange(-n, n + 1)
    k = k[k % 2 != 0]
    return k * h


def _freeze(*arrays):
    for a in arrays:
        a.setflags(write=False)
    return arrays


@lru_cache(maxsize=None)
def finite_nodes(level: int):
    """Nodes added at ``level`` on the reference panel.

    Returns ``(side, offset, weight)``: ``side`` is -1 for nodes measured from
    the lower end and +1 for the upper end, ``offset`` is the distance from
    that end in units of the half-length, ``weight`` excludes the step size
    and the half-length.
    """
    u = _level_steps(level, _FINITE_UMAX)
    s = 0.5 * math.pi * np.sinh(u)
    e = np.exp(-2.0 * np.abs(s))
    near = 2.0 * e / (1.0 + e)
    far = 2.0 / (1.0 + e)
    weight = 0.5 * math.pi * np.cosh(u) * near * far
    side = np.where(s < 0.0, -1.0, 1.0)
    keep = (near > 0.0) & (weight > 0.0)
    return _freeze(side[keep], near[keep], weight[keep])


@lru_cache(maxsize=None)
def half_line_nodes(level: int):
    """Nodes added at ``level`` for ``[0, inf)``: ``(x, weight)`` without the step size."""
    u = _level_steps(level, _HALF_LINE_UMAX)
    s = math.pi * np.sinh(u)
    x = np.exp(s)
    weight = math.pi * np.cosh(u) * x
    return _freeze(x, weight)


def tanh_sinh_rule(level: int) -> tuple[np.ndarray, np.ndarray]:
    """Complete fixed rule on ``[0, 2]`` seen from the lower end.

    Returns ``(offset, weight)`` with the step size folded into the weights;
    ``integral_0^L f ~ (L/2) * sum(weight * f(L/2 * offset))``.
    """
    offsets, weights = [], []
    for lev in range(level + 1):
        side, near, w = finite_nodes(lev)
        offsets.append(np.where(side < 0, near, 2.0 - near))
        weights.append(w)
    h = 2.0 ** (-level)
    # every level contributes with the finest step
    return np.concatenate(offsets), np.concatenate(weights) * h


def _evaluate(f: Callable, x: np.ndarray) -> np.ndarray:
    with np.errstate(all="ignore"):
        try:
            y = np.asarray(f(x), dtype=np.float64)
            if y.shape != x.shape:
                y = np.broadcast_to(y, x.shape)
        except (TypeError, ValueError):
            y = np.array([float(f(float(t))) for t in x], dtype=np.float64)
    bad = ~np.isfinite(y)
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        raise QuadratureError(float(x[i]), float(y[i]))
    return y


def _panel_sum(f, lo, hi, level):
    if math.isinf(hi):
        xs, w = half_line_nodes(level)
        x = lo + xs
        keep = x > lo
        x, w = x[keep], w[keep]
    else:
        half = 0.5 * (hi - lo)
        side, near, w = finite_nodes(level)
        x = np.where(side < 0, lo + half * near, hi - half * near)
        keep = (x > lo) & (x < hi)
        x, w = x[keep], w[keep] * half
    if x.size == 0:
        return 0.0, 0
    y = _evaluate(f, x)
    return math.fsum(w * y), x.size


def _integrate_panel(f, lo, hi, tol, max_level):
    total, n_evals = _panel_sum(f, lo, hi, 0)
    estimate = total
    err = math.inf
    for level in range(1, max_level + 1):
        h = 2.0 ** (-level)
        part, n = _panel_sum(f, lo, hi, level)
        n_evals += n
        total += part
        new_estimate = total * h
        err = abs(new_estimate - estimate)
        estimate = new_estimate
        if level >= MIN_LEVEL and err <= tol:
            return QuadratureResult(estimate, err, n_evals, True)
    return QuadratureResult(estimate, err, n_evals, False)


def integrate(f: Callable, iv: Interval, tol: float = 1e-12, max_level: int = MAX_LEVEL) -> QuadratureResult:
    """Integrate ``f`` over ``iv`` to absolute tolerance ``tol``.

    The error estimate is the difference between the last two refinement
    levels.  When ``max_level`` is reached first the best estimate is
    returned with ``converged=False``.  A NaN or infinite integrand value
    raises :class:`QuadratureError`.
    """
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    panels = iv.panels()
    panel_tol = tol / len(panels)
    results = [_integrate_panel(f, lo, hi, panel_tol, max_level) for lo, hi in panels]
    return QuadratureResult(
        value=math.fsum(r.value for r in results),
        err_estimate=math.fsum(r.err_estimate for r in results),
        n_evals=sum(r.n_evals for r in results),
        converged=all(r.converged for r in results),
    )


def integrate_finite(f: Callable, lo: float, hi: float, tol: float = 1e-12) -> QuadratureResult:
    return integrate(f, Interval.finite(lo, hi), tol)


def integrate_half_line(f: Callable, lo: float = 0.0, tol: float = 1e-12) -> QuadratureResult:
    return integrate(f, Interval.half_line(lo), tol)
