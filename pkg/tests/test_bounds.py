import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from consistency_paradox import bounds
from consistency_paradox.bounds import (
    CONSTANTS,
    OutOfValidityError,
    amp_a0,
    amp_as,
    bound_eq19,
    bound_eq24,
    critical_p_s,
    min_ps_zero_condition,
    p_ww_of_theta,
    ps_zero_condition,
    theta_star,
)
from consistency_paradox.hilbert import born_probability, product_state
from consistency_paradox.optimizer import theta_family_coefficients
from consistency_paradox.spectral import p_sum_from_nu

TIGHT = 1 / (5 + math.sqrt(17))
THETA_08 = math.asin(0.8)

# frozen with mpmath at 30 digits
B19_005 = 0.00903007728790625420
B24_005 = 0.00931296688327624449
PWW_005_SIN08 = 0.00933192835498718513
P_CR_BOUND = 0.02431118314424635332


def test_constants_ordering():
    assert float(CONSTANTS.ps_eq16_limit) < CONSTANTS.ps_tight < CONSTANTS.ps_frontier_zero
    assert CONSTANTS.p_cr < float(CONSTANTS.ps_eq16_limit)
    assert CONSTANTS.ps_tight == pytest.approx(0.109612, abs=5e-7)
    assert float(CONSTANTS.ps_eq16_limit) == pytest.approx(0.1071, abs=5e-5)


def test_amp_a0_examples():
    assert amp_a0(0.0, 1.234) == pytest.approx(math.sqrt(1 / 12), abs=1e-16)
    assert amp_a0(0.07, math.pi / 2) == pytest.approx(math.sqrt((1 - 2 / 3 * 0.07) / 12), abs=1e-16)
    thetas = np.linspace(0, 2 * np.pi, 10001)
    assert np.min(amp_a0(0.07, thetas)) == pytest.approx(math.sqrt(0.93 / 12), abs=1e-15)


def test_amp_a0_domain_error():
    with pytest.raises(ValueError):
        amp_a0(1.4, 0.0)


def test_amp_as_examples():
    assert amp_as(0.09, THETA_08) == pytest.approx(5 / 6 * 0.3, abs=1e-15)
    assert amp_as(0.0, 0.3) == 0.0
    assert amp_as(1.0, 0.0) == pytest.approx(0.5, abs=1e-16)
    thetas = np.linspace(0, 2 * np.pi, 100001)
    assert np.max(amp_as(1.0, thetas)) == pytest.approx(5 / 6, abs=1e-9)


def test_p_ww_of_theta_examples():
    assert p_ww_of_theta(0.0, 0.7) == pytest.approx(1 / 12, abs=1e-16)
    assert p_ww_of_theta(TIGHT, theta_star()) <= 1e-15
    assert p_ww_of_theta(0.05, THETA_08) == pytest.approx(PWW_005_SIN08, abs=1e-15)


@pytest.mark.parametrize("p_s", [0.0, 0.01, 0.05, 0.1, 0.3, 0.9])
@pytest.mark.parametrize("theta", [0.0, 0.4, THETA_08, 1.3, 2.5])
def test_p_ww_of_theta_matches_born_rule(p_s, theta):
    """Independent route: build the state and take the Born overlap with |a,a>."""
    c = theta_family_coefficients(p_s, theta)
    if 1 - p_s * (1 - math.sin(theta) ** 2 / 3) < 0:
        pytest.skip("outside the family")
    psi = c.to_state()
    assert p_sum_from_nu(c) == pytest.approx(p_s, abs=1e-14)
    assert p_ww_of_theta(p_s, theta) == pytest.approx(born_probability(psi, product_state("a", "a")), abs=1e-14)


def test_bound_eq19_landmarks():
    assert bound_eq19(0.0) == pytest.approx(1 / 12, abs=1e-15)
    assert bound_eq19(3 / 28) <= 1e-12
    assert bound_eq19(0.05) == pytest.approx(B19_005, abs=1e-15)
    assert 0 < bound_eq19(0.05) < bound_eq24(0.05)


def test_bound_eq24_landmarks():
    assert bound_eq24(0.0) == pytest.approx(1 / 12, abs=1e-15)
    assert bound_eq24(0.05) == pytest.approx(B24_005, abs=1e-15)
    v = bound_eq24(0.109489)
    assert 0 <= v < 1e-5
    assert bound_eq24(0.0243) == pytest.approx(0.0243, abs=5e-4)


def test_bounds_signal_out_of_validity():
    with pytest.raises(OutOfValidityError):
        bound_eq19(0.108)
    with pytest.raises(OutOfValidityError):
        bound_eq24(0.11)
    assert bound_eq19(0.108, clamp=True) == 0.0
    assert bound_eq24(0.5, clamp=True) == 0.0
    with pytest.raises(ValueError):
        bound_eq19(-0.01)


def test_bounds_vectorize():
    p = np.linspace(0, 0.2, 11)
    out = bound_eq24(p, clamp=True)
    assert out.shape == p.shape
    assert out[-1] == 0.0


def test_bound_ordering_dense():
    p = np.linspace(0, 3 / 28, 1000)
    assert np.all(bound_eq19(p) <= bound_eq24(p) + 1e-12)


@pytest.mark.parametrize("p_s", [0.01, 0.05, 0.10])
def test_theta_family_never_below_bound_eq19(p_s):
    thetas = np.linspace(0, 2 * np.pi, 10_000)
    radicand = 1 - p_s * (1 - np.sin(thetas) ** 2 / 3)
    assert np.all(radicand > 0)
    assert np.min(p_ww_of_theta(p_s, thetas)) >= bound_eq19(p_s) - 1e-10


def test_ps_zero_condition_examples():
    assert ps_zero_condition(theta_star()) == pytest.approx(TIGHT, abs=1e-15)
    assert ps_zero_condition(0.0) == pytest.approx(0.25, abs=1e-16)
    assert math.cos(2 * theta_star()) == pytest.approx(-1 / math.sqrt(17), abs=1e-15)
    assert math.sin(theta_star()) == pytest.approx(0.7882, abs=5e-5)


def test_ps_zero_condition_minimum():
    theta, value = min_ps_zero_condition()
    assert value == pytest.approx(TIGHT, abs=1e-10)
    # brute-force grid as an independent check
    grid = np.linspace(0, np.pi, 200_001)
    assert np.min(ps_zero_condition(grid)) == pytest.approx(TIGHT, abs=1e-10)


def test_ps_zero_condition_domain_error():
    # 5 - cos(2t) + 4 sin(2t) > 0 for all t since sqrt(17) < 5
    grid = np.linspace(0, 2 * np.pi, 1001)
    assert np.all(ps_zero_condition(grid) > 0)


def test_ps_zero_condition_consistent_with_amplitudes():
    for theta in np.linspace(0.1, 1.5, 15):
        p = ps_zero_condition(theta)
        assert amp_a0(p, theta) == pytest.approx(amp_as(p, theta), abs=1e-14)


def test_critical_p_s():
    p = critical_p_s()
    assert p == pytest.approx(0.0243, abs=5e-4)
    assert p == pytest.approx(P_CR_BOUND, abs=1e-8)
    assert abs(bound_eq24(p) - p) <= 1e-8
    assert p < 3 / 28


@given(st.floats(0, 3 / 28))
def test_both_bounds_are_probabilities(p):
    assert 0 <= bound_eq19(p) <= bound_eq24(p) + 1e-12 <= 1 / 12 + 1e-12
