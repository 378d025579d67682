"""Bisection-based scalar root finding.

Bisection is deliberately the only method used in this package: every root
we need lives inside a guaranteed sign-change bracket, and reproducibility
across platforms matters more than iteration count.
"""

from __future__ import annotations

import math
from typing import Callable

from .errors import SolverFailure

MAX_ITER = 240


def bisect_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-12,
) -> float:
    """Root of f in [lo, hi] via bisection; requires a sign change.

    Iterates until the bracket width is <= tol (absolute) and returns the
    midpoint.  Exact zeros encountered on the way are returned immediately.
    """
    if not (lo < hi):
        raise SolverFailure(f"empty bracket [{lo}, {hi}]")
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo < 0.0) == (fhi < 0.0):
        raise SolverFailure(f"no sign change on [{lo}, {hi}]: f={flo}, {fhi}")
    for _ in range(MAX_ITER):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol or mid == lo or mid == hi:
            return mid
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def geometric_grid(lo: float, hi: float, n: int) -> list[float]:
    """n points from lo to hi with constant ratio; dense near lo."""
    if not (0.0 < lo < hi) or n < 2:
        raise SolverFailure("geometric_grid needs 0 < lo < hi and n >= 2")
    ratio = math.log(hi / lo) / (n - 1)
    grid = [lo * math.exp(i * ratio) for i in range(n)]
    grid[0], grid[-1] = lo, hi  # exp/log round-off must not leak past the ends
    return grid


def first_bracket(
    f: Callable[[float], float],
    grid: list[float],
) -> tuple[float, float]:
    """First consecutive pair of grid points where f changes sign."""
    prev_x = grid[0]
    prev_f = f(prev_x)
    if prev_f == 0.0:
        return prev_x, prev_x
    for x in grid[1:]:
        fx = f(x)
        if fx == 0.0:
            return x, x
        if (fx < 0.0) != (prev_f < 0.0):
            return prev_x, x
        prev_x, prev_f = x, fx
    raise SolverFailure(
        f"no sign change on scan grid [{grid[0]}, {grid[-1]}] ({len(grid)} points)"
    )
