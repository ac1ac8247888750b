import io
import math

import numpy as np
import pytest

from consistency_paradox.hilbert import StateVector, context_probabilities, phi0, product_state
from consistency_paradox.montecarlo import (
    Context,
    ShotRecord,
    context_distribution,
    estimate,
    read_records,
    sample_context,
    write_records,
)
from consistency_paradox.optimizer import frontier_theta_family
from consistency_paradox.spectral import nu_basis

from conftest import random_state


def test_eigenstate_is_deterministic():
    samples = sample_context(product_state("1", "1"), Context.FF, 1000, seed=1)
    assert all(r == ShotRecord(Context.FF, "1", "1") for r in samples)


def test_phi0_never_gives_a0():
    samples = sample_context(phi0(), "WF", 100_000, seed=2)
    assert samples.frequency(("a", "0")) == 0.0


def test_phi0_ww_frequency():
    n = 1_000_000
    f = sample_context(phi0(), Context.WW, n, seed=3).frequency(("a", "a"))
    sigma = math.sqrt((1 / 12) * (11 / 12) / n)
    assert sigma == pytest.approx(2.8e-4, abs=1e-5)
    assert abs(f - 1 / 12) <= 3 * sigma


def test_distribution_order_and_normalization(rng):
    psi = random_state(rng)
    for ctx in Context:
        p = context_distribution(psi, ctx)
        assert p.sum() == pytest.approx(1, abs=1e-15)
        for k, (x, y) in enumerate(ctx.outcomes()):
            assert p[k] == pytest.approx(abs(np.vdot(product_state(x, y).amplitudes, psi)) ** 2, abs=1e-15)


def test_frequencies_converge_across_seeds(rng):
    psi = StateVector(random_state(rng))
    n = 1_000_000
    failures = 0
    for seed in range(20):
        for ctx in Context:
            p = context_distribution(psi, ctx)
            f = sample_context(psi, ctx, n, seed=1000 + 4 * seed + ctx.index).frequencies()
            sigma = np.sqrt(p * (1 - p) / n)
            failures += int(np.any(np.abs(f - p) > 5 * sigma))
    assert failures <= 1


def test_seed_determinism():
    a = sample_context(phi0(), Context.WW, 5000, seed=11)
    b = sample_context(phi0(), Context.WW, 5000, seed=11)
    c = sample_context(phi0(), Context.WW, 5000, seed=12)
    assert np.array_equal(a.indices, b.indices)
    assert not np.array_equal(a.indices, c.indices)


def test_counts_sum_to_n(rng):
    s = sample_context(random_state(rng), Context.FW, 12345, seed=5)
    assert s.counts().sum() == 12345
    assert s.frequencies().sum() == 1.0
    assert len(s) == 12345
    assert isinstance(s[0], ShotRecord)


def test_sample_validation():
    with pytest.raises(ValueError):
        sample_context(phi0(), Context.WW, 0, seed=0)
    with pytest.raises(ValueError):
        sample_context(phi0(), "XY", 10, seed=0)
    with pytest.raises(ValueError):
        sample_context(np.array([1, 1, 0, 0]), Context.WW, 10, seed=0)


def test_shot_record_validation():
    with pytest.raises(ValueError):
        ShotRecord(Context.WF, "0", "a")
    assert ShotRecord.from_line("WW,a,a\n") == ShotRecord(Context.WW, "a", "a")
    with pytest.raises(ValueError):
        ShotRecord.from_line("WW,a")


def test_estimate_phi0_certifies_violation():
    rep = estimate(phi0(), 1_000_000, seed=7)
    assert rep.slack_estimate == pytest.approx(1 / 12, abs=5 * 2.8e-4)
    assert rep.slack_z > 5
    assert rep.estimates.p_sum == 0.0


def test_estimate_nu1():
    rep = estimate(nu_basis()[1], 100_000, seed=8)
    se = math.sqrt(sum(s * s for s in rep.std_errors))
    assert abs(rep.slack_estimate + 0.5) <= 5 * se
    assert rep.estimates.p_ww_aa == 0.0


def test_estimate_frontier_state_violates():
    pt = frontier_theta_family(0.01)
    psi = pt.argmin.to_state()
    exact = context_probabilities(psi)
    assert exact.p_sum == pytest.approx(0.01, abs=1e-12)
    rep = estimate(psi, 200_000, seed=9)
    assert rep.slack_estimate > 0
    assert rep.slack_z > 5


def test_std_errors_are_binomial():
    rep = estimate(phi0(), 10_000, seed=4)
    p = rep.estimates.p_ww_aa
    assert rep.std_errors[3] == pytest.approx(math.sqrt(p * (1 - p) / 10_000))
    assert math.isfinite(rep.slack_z)


def test_estimate_requires_shots():
    with pytest.raises(ValueError):
        estimate(phi0(), 99, seed=0)


def test_export_round_trip(tmp_path):
    samples = [sample_context(phi0(), c, 50, seed=c.index) for c in Context]
    path = tmp_path / "shots.csv"
    write_records(samples, path)
    text = path.read_text()
    assert text.count("\n") == 200
    assert text.splitlines()[0].startswith("WW,")
    records = read_records(path)
    assert records == [r for s in samples for r in s]
    buf = io.StringIO()
    write_records(samples[:1], buf)
    assert buf.getvalue() == "".join(r.to_line() + "\n" for r in samples[0])
