"""Derivative-free one-dimensional root finding and minimization."""

from __future__ import annotations

import math
from typing import Callable

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def bisect(f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-8,
           max_iter: int = 200) -> float:
    """Root of ``f`` on ``[lo, hi]`` given a sign change between the endpoints.

    Only the sign of ``f`` is used, so ``f`` may be a predicate-like step
    function (positive on one side, non-positive on the other).
    """
    f_lo = f(lo)
    f_hi = f(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def golden_section(f: Callable[[float], float], lo: float, hi: float,
                   iterations: int = 60) -> tuple[float, float]:
    """Minimize a unimodal ``f`` on ``[lo, hi]``; returns ``(x, f(x))``."""
    x1 = hi - INV_PHI * (hi - lo)
    x2 = lo + INV_PHI * (hi - lo)
    f1 = f(x1)
    f2 = f(x2)
    for _ in range(iterations):
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - INV_PHI * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + INV_PHI * (hi - lo)
            f2 = f(x2)
    if f1 <= f2:
        return x1, f1
    return x2, f2
