"""Numerical frontier: smallest P_WW(a,a) reachable at a given probability sum.

Two independent routes are provided.

``frontier_theta_family`` searches only the one-angle family
(c1 = 0, real coefficients) with a coarse grid followed by golden-section
refinement.

``frontier_full_space`` searches over every state with the prescribed
probability sum, complex phases included, using seeded Nelder-Mead restarts.
It does not assume c1 = 0 or real amplitudes, so agreement between the two
routes is evidence that the reduction is lossless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .bounds import PS_EQ19_LIMIT
from .search import bisect, golden_section
from .spectral import NuCoefficients, p_sum_from_nu, p_ww_from_nu

PS_MAX = 1.5
ZERO_THRESHOLD = 1e-10
PENALTY = 1e6
TWO_PI = 2.0 * math.pi
_SQRT_2_3 = math.sqrt(2.0 / 3.0)
_INV_2SQRT3 = 1.0 / (2.0 * math.sqrt(3.0))


@dataclass(frozen=True)
class OptimizerConfig:
    theta_grid_size: int = 4096
    refine_iterations: int = 60
    restarts: int = 32
    seed: int = 0

    def __post_init__(self):
        for name in ("theta_grid_size", "refine_iterations", "restarts"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")


@dataclass(frozen=True)
class FrontierPoint:
    p_s: float
    p_ww_min: float
    argmin: NuCoefficients
    theta_opt: float
    converged: bool = True


def _check_ps(p_s: float) -> float:
    p_s = float(p_s)
    if not 0.0 <= p_s <= PS_MAX:
        raise ValueError(f"probability sum must lie in [0, {PS_MAX}], got {p_s}")
    return p_s


# -- one-angle family ---------------------------------------------------------

def _theta_objective(p_s: float, theta):
    s2 = np.sin(theta) ** 2
    radicand = 1.0 - p_s * (1.0 - s2 / 3.0)
    a0 = _INV_2SQRT3 * np.sqrt(np.maximum(radicand, 0.0))
    a_s = math.sqrt(p_s) * (0.5 * np.cos(theta) + (2.0 / 3.0) * np.sin(theta))
    return np.where(radicand >= 0.0, (a0 - a_s) ** 2, np.inf)


def theta_family_coefficients(p_s: float, theta: float) -> NuCoefficients:
    """c0 real non-negative, c1 = 0, c2 = sqrt(p_s) cos(theta), c3 = sqrt(2 p_s/3) sin(theta)."""
    c2 = math.sqrt(p_s) * math.cos(theta)
    c3 = math.sqrt(2.0 * p_s / 3.0) * math.sin(theta)
    c0 = math.sqrt(max(1.0 - c2 * c2 - c3 * c3, 0.0))
    return NuCoefficients(complex(c0), 0j, complex(c2), complex(c3))


def frontier_theta_family(p_s: float, cfg: OptimizerConfig = OptimizerConfig()) -> FrontierPoint:
    p_s = _check_ps(p_s)
    n = cfg.theta_grid_size
    step = TWO_PI / n
    grid = np.arange(n) * step
    values = _theta_objective(p_s, grid)
    i = int(np.argmin(values))  # first minimum -> smallest theta on ties
    theta, best = float(grid[i]), float(values[i])

    if best > 0.0:
        f = lambda t: float(_theta_objective(p_s, t))
        t_ref, v_ref = golden_section(f, theta - step, theta + step, cfg.refine_iterations)
        # keep the grid point unless refinement actually improved on it
        if v_ref < best and abs(t_ref - theta) <= step:
            theta, best = t_ref % TWO_PI, v_ref

    c = theta_family_coefficients(p_s, theta)
    p_ww = p_ww_from_nu(c)
    if p_ww <= ZERO_THRESHOLD:
        p_ww = 0.0
    return FrontierPoint(p_s, p_ww, c, theta)


def frontier_sweep(p_s_grid, cfg: OptimizerConfig = OptimizerConfig()) -> list[FrontierPoint]:
    grid = [float(p) for p in p_s_grid]
    if any(b < a for a, b in zip(grid, grid[1:])):
        raise ValueError("probability-sum grid must be ascending")
    return [frontier_theta_family(p, cfg) for p in grid]


# -- full state space ---------------------------------------------------------

def _unpack(x: np.ndarray, p_s: float):
    """Map (alpha, beta, phase2, phase3) to coefficients with probability sum p_s.

    The direction (u1, u2, u3) on the unit sphere fixes
    |c1|^2 = 2 p_s u1^2, |c2|^2 = p_s u2^2, |c3|^2 = (2/3) p_s u3^2,
    so the probability-sum constraint holds exactly. c0 is real and takes up
    whatever norm remains; a negative remainder is the only way to be
    infeasible.
    """
    alpha, beta, ph2, ph3 = x
    u1 = math.sin(alpha)
    u2 = math.cos(alpha) * math.cos(beta)
    u3 = math.cos(alpha) * math.sin(beta)
    c1 = math.sqrt(2.0 * p_s) * u1
    c2 = math.sqrt(p_s) * u2 * complex(math.cos(ph2), math.sin(ph2))
    c3 = math.sqrt(2.0 * p_s / 3.0) * u3 * complex(math.cos(ph3), math.sin(ph3))
    rest = 1.0 - (c1 * c1 + abs(c2) ** 2 + abs(c3) ** 2)
    return rest, c1, c2, c3


def _full_objective(x: np.ndarray, p_s: float) -> float:
    rest, _, c2, c3 = _unpack(x, p_s)
    c0 = math.sqrt(rest) if rest > 0.0 else 0.0
    amp = _INV_2SQRT3 * c0 - 0.5 * c2 - _SQRT_2_3 * c3
    value = amp.real * amp.real + amp.imag * amp.imag
    if rest < 0.0:
        value += PENALTY * rest * rest
    return value


def _project(weights: np.ndarray, p_s: float) -> np.ndarray:
    """Nearest (|c1|^2, |c2|^2, |c3|^2) with c0 = 0 and the right probability sum.

    Points satisfying x1 + x2 + x3 = 1 and x1/2 + x2 + 3 x3/2 = p_s form the
    line (3/2 - p_s, 0, p_s - 1/2) + t (1/2, -1, 1/2); ``t`` is clipped so
    every weight stays non-negative.
    """
    base = np.array([1.5 - p_s, 0.0, p_s - 0.5])
    d = np.array([0.5, -1.0, 0.5])
    t = float(d @ (weights - base) / (d @ d))
    t_lo = max(-base[0] / 0.5, -base[2] / 0.5)
    t = min(max(t, t_lo), 0.0)
    return np.maximum(base + t * d, 0.0)


def _coefficients(x: np.ndarray, p_s: float) -> NuCoefficients:
    rest, c1, c2, c3 = _unpack(x, p_s)
    if rest >= 0.0:
        return NuCoefficients(complex(math.sqrt(rest)), complex(c1), c2, c3)
    # final feasibility projection for runs that ended inside the penalty zone
    raw = np.array([c1, c2, c3], dtype=complex)
    phases = np.where(np.abs(raw) > 0, raw / np.where(raw == 0, 1, np.abs(raw)), 1.0)
    mags = np.sqrt(_project(np.abs(raw) ** 2, p_s))
    return NuCoefficients.from_array(np.concatenate([[0.0], mags * phases]))


def _local_search(x0: np.ndarray, p_s: float) -> tuple[np.ndarray, bool]:
    opts = {"xatol": 1e-10, "fatol": 1e-17, "maxiter": 20000, "maxfev": 40000}
    x = x0
    converged = False
    best = math.inf
    # restart from the last simplex centre until no further progress
    for _ in range(4):
        res = minimize(_full_objective, x, args=(p_s,), method="Nelder-Mead", options=opts)
        x = res.x
        converged = bool(res.success)
        if best - res.fun <= 1e-14 * max(abs(res.fun), 1e-12):
            break
        best = res.fun
    return x, converged


def frontier_full_space(p_s: float, cfg: OptimizerConfig = OptimizerConfig()) -> FrontierPoint:
    p_s = _check_ps(p_s)
    if p_s == 0.0:
        c = NuCoefficients(1 + 0j, 0j, 0j, 0j)
        return FrontierPoint(0.0, p_ww_from_nu(c), c, 0.0)

    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    starts = rng.uniform([-math.pi / 2, 0.0, 0.0, 0.0],
                         [math.pi / 2, TWO_PI, TWO_PI, TWO_PI], size=(cfg.restarts, 4))
    candidates = []
    for k, x0 in enumerate(starts):
        x, ok = _local_search(x0, p_s)
        c = _coefficients(x, p_s)
        feasible = abs(c.norm_sq - 1.0) <= 1e-10 and abs(p_sum_from_nu(c) - p_s) <= 1e-8
        candidates.append((p_ww_from_nu(c), c.magnitudes(), k, c, ok and feasible))

    # deterministic reduction: value, then smallest |c| vector, then restart index
    best_value = min(v for v, *_ in candidates)
    ties = [cand for cand in candidates if cand[0] - best_value <= 1e-15]
    p_ww, _, _, c, ok = min(ties, key=lambda cand: (cand[1], cand[2]))
    if p_ww <= ZERO_THRESHOLD:
        p_ww = 0.0
    theta = math.atan2(abs(c.c3) / _SQRT_2_3, abs(c.c2))
    return FrontierPoint(p_s, p_ww, c, theta, converged=ok)


# -- landmarks ----------------------------------------------------------------

def frontier_zero(cfg: OptimizerConfig = OptimizerConfig(), tol: float = 1e-6) -> float:
    """Smallest probability sum at which the frontier reaches zero."""
    f = lambda p: 1.0 if frontier_theta_family(p, cfg).p_ww_min > 0.0 else -1.0
    return bisect(f, float(PS_EQ19_LIMIT), 0.2, tol)


def critical_p_s_numeric(cfg: OptimizerConfig = OptimizerConfig(), tol: float = 1e-8) -> float:
    """Probability sum where the frontier crosses the diagonal P_WW = P_S."""
    f = lambda p: frontier_theta_family(p, cfg).p_ww_min - p
    return bisect(f, 0.0, float(PS_EQ19_LIMIT), tol)
