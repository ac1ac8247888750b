"""Closed-form lower bounds on P_WW(a,a) as a function of the probability sum.

With ``c1 = 0`` and real coefficients, a state with probability sum ``p_s``
is fixed by one angle ``theta``::

    c2 = sqrt(p_s) cos(theta),   c3 = sqrt(2 p_s / 3) sin(theta)

and P_WW(a,a) = (A0 - AS)^2, where A0 is the contribution of the
``phi0`` component and AS that of ``nu2``/``nu3``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .search import bisect, golden_section

P12 = Fraction(1, 12)
PS_EQ19_LIMIT = Fraction(3, 28)
PS_TIGHT = 1.0 / (5.0 + math.sqrt(17.0))
PS_EQ24_LIMIT = 0.109489
PS_FRONTIER_ZERO = 0.109612
P_CR = 0.0243
SIN_THETA_STAR = 0.7882
SIN_THETA_MAX_AS = Fraction(4, 5)

_VALIDITY_SLACK = 1e-15


class OutOfValidityError(ValueError):
    """A bound was evaluated past the probability sum where it is valid."""


@dataclass(frozen=True)
class BoundConstants:
    p12: Fraction = P12
    ps_eq16_limit: Fraction = PS_EQ19_LIMIT
    ps_tight: float = PS_TIGHT
    ps_eq22_limit: float = PS_EQ24_LIMIT
    ps_frontier_zero: float = PS_FRONTIER_ZERO
    p_cr: float = P_CR
    sin_theta_star: float = SIN_THETA_STAR
    sin_theta_max_as: Fraction = SIN_THETA_MAX_AS


CONSTANTS = BoundConstants()


@dataclass(frozen=True)
class BoundCurvePoint:
    p_s: float
    bound_eq19: float
    bound_eq24: float


def _check_ps(p_s):
    p = np.asarray(p_s, dtype=float)
    if np.any(~np.isfinite(p)) or np.any(p < 0):
        raise ValueError("probability sum must be finite and non-negative")
    return p


def _scalar_or_array(x, like):
    return float(x) if np.ndim(like) == 0 else x


def amp_a0(p_s, theta):
    p = _check_ps(p_s)
    radicand = (1.0 - p * (1.0 - np.sin(theta) ** 2 / 3.0)) / 12.0
    if np.any(radicand < 0):
        raise ValueError("A0 undefined: probability sum too large for this theta")
    out = np.sqrt(radicand)
    return _scalar_or_array(out, out)


def amp_as(p_s, theta):
    p = _check_ps(p_s)
    out = (5.0 / 6.0) * (0.6 * np.cos(theta) + 0.8 * np.sin(theta)) * np.sqrt(p)
    return _scalar_or_array(out, out)


def p_ww_of_theta(p_s, theta):
    """(A0 - AS)^2 for the one-angle family of states."""
    out = (np.asarray(amp_a0(p_s, theta)) - np.asarray(amp_as(p_s, theta))) ** 2
    return _scalar_or_array(out, out)


def _bound(p_s, a0_slope: float, limit: float, clamp: bool):
    p = _check_ps(p_s)
    beyond = p > limit + _VALIDITY_SLACK
    if np.any(beyond) and not clamp:
        raise OutOfValidityError(f"bound is only valid for p_s <= {limit}")
    pc = np.minimum(p, limit)
    diff = np.sqrt((1.0 - a0_slope * pc) / 12.0) - (5.0 / 6.0) * np.sqrt(pc)
    out = np.where(beyond, 0.0, np.maximum(diff, 0.0) ** 2)
    return _scalar_or_array(out, p)


def bound_eq19(p_s, clamp: bool = False):
    """Lower bound from bounding A0 and AS separately; valid up to 3/28."""
    return _bound(p_s, 1.0, float(PS_EQ19_LIMIT), clamp)


def bound_eq24(p_s, clamp: bool = False):
    """Tighter bound using sin(theta) >= 0.7882 for A0; valid up to 0.109489."""
    return _bound(p_s, 0.8, PS_EQ24_LIMIT, clamp)


def bound_curve(p_s_values, clamp: bool = True) -> list[BoundCurvePoint]:
    return [
        BoundCurvePoint(float(p), bound_eq19(p, clamp=clamp), bound_eq24(p, clamp=clamp))
        for p in p_s_values
    ]


def ps_zero_condition(theta):
    """Probability sum at which A0(theta) = AS(theta)."""
    denom = 5.0 - np.cos(2 * np.asarray(theta)) + 4.0 * np.sin(2 * np.asarray(theta))
    if np.any(denom <= 0):
        raise ValueError("non-positive denominator")
    out = 1.0 / denom
    return _scalar_or_array(out, out)


def theta_star() -> float:
    """Angle with cos(2 theta) = -1/sqrt(17), sin(2 theta) = 4/sqrt(17)."""
    return 0.5 * math.atan2(4.0, -1.0)


def min_ps_zero_condition(iterations: int = 80) -> tuple[float, float]:
    """Numerically minimize :func:`ps_zero_condition` over theta in [0, pi/2]."""
    return golden_section(ps_zero_condition, 0.0, 0.5 * math.pi, iterations)


def critical_p_s(tol: float = 1e-8) -> float:
    """Fixed point bound_eq24(p) = p on [0, 3/28]."""
    return bisect(lambda p: bound_eq24(p, clamp=True) - p, 0.0, float(PS_EQ19_LIMIT), tol)
