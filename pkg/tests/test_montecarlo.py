"""Sampling, reproducibility, and oracle agreement of the Monte Carlo engine."""

import math

import numpy as np
import pytest

from wfsaw import (
    DropDecay,
    GradualDecay,
    InsufficientSamplesError,
    RngSpec,
    SaturatingGrowth,
    StepDrop,
    analytic_mean,
    expected_survivability,
    mc_mean_trajectory,
    mc_survivability,
    sample_realization,
    z_scores,
)


def test_rng_spec_validation():
    with pytest.raises(ValueError):
        RngSpec(-1)
    with pytest.raises(ValueError):
        RngSpec(2**64)
    with pytest.raises(ValueError):
        RngSpec(3, algorithm="mt19937")


def test_sample_realization_is_repeatable(event):
    a = [sample_realization(event, RngSpec(123).generator()) for _ in range(1)]
    gen1 = RngSpec(123).generator()
    gen2 = RngSpec(123).generator()
    seq1 = [sample_realization(event, gen1) for _ in range(50)]
    seq2 = [sample_realization(event, gen2) for _ in range(50)]
    assert seq1 == seq2
    assert a[0] == seq1[0]


def test_sample_realization_moments(event):
    gen = RngSpec(99).generator()
    n = 200000
    taus = np.empty(n)
    rs = np.empty(n)
    for i in range(n):
        real = sample_realization(event, gen)
        taus[i] = real.tau
        rs[i] = real.r
    # E tau = 1/kappa with sd 1/kappa; E r = 0.5 with sd 1/sqrt(12)
    assert abs(taus.mean() - 10.0) < 3.0 * taus.std(ddof=1) / math.sqrt(n)
    assert abs(rs.mean() - 0.5) < 3.0 * rs.std(ddof=1) / math.sqrt(n)
    assert taus.min() > 0.0


def test_mc_mean_is_bitwise_reproducible(event):
    grid = np.linspace(0.0, 30.0, 7)
    model = DropDecay(alpha=0.9, mu=0.7)
    a = mc_mean_trajectory(model, event, grid, 50000, RngSpec(5))
    b = mc_mean_trajectory(model, event, grid, 50000, RngSpec(5))
    assert np.array_equal(a.mean, b.mean)
    assert np.array_equal(a.std_error, b.std_error)
    c = mc_mean_trajectory(model, event, grid, 50000, RngSpec(6))
    assert not np.array_equal(a.mean, c.mean)


def test_worker_count_does_not_change_results(event):
    grid = np.linspace(0.0, 30.0, 7)
    model = GradualDecay(alpha=0.8, mu=0.3)
    serial = mc_mean_trajectory(model, event, grid, 60000, RngSpec(17), workers=1)
    threaded = mc_mean_trajectory(model, event, grid, 60000, RngSpec(17), workers=4)
    assert np.array_equal(serial.mean, threaded.mean)
    assert np.array_equal(serial.std_error, threaded.std_error)


def test_estimate_at_time_zero_is_exact(event):
    grid = np.array([0.0, 5.0])
    for model in (
        StepDrop(alpha=0.9),
        DropDecay(alpha=0.37, mu=1.0),
        SaturatingGrowth(alpha=0.5, mu=0.5, beta=0.8),
    ):
        est = mc_mean_trajectory(model, event, grid, 10000, RngSpec(3))
        assert est.mean[0] == model.alpha
        assert est.std_error[0] == 0.0


def test_sample_count_validation(event):
    with pytest.raises(InsufficientSamplesError):
        mc_mean_trajectory(StepDrop(alpha=0.5), event, [0.0, 1.0], 1, RngSpec(0))
    est = mc_mean_trajectory(StepDrop(alpha=0.5), event, [0.0, 1.0], 2, RngSpec(0))
    assert est.n == 2
    assert np.all(np.isfinite(est.std_error))


def test_oracle_agreement_on_fixed_cases(event):
    cases = [
        StepDrop(alpha=0.9),
        DropDecay(alpha=0.9, mu=2.0),
        GradualDecay(alpha=0.5, mu=2.0),
        SaturatingGrowth(alpha=0.5, mu=0.5, beta=0.8),
    ]
    grid = np.linspace(0.0, 50.0, 11)
    for seed, model in enumerate(cases, start=40):
        est = mc_mean_trajectory(model, event, grid, 100000, RngSpec(seed))
        z = z_scores(est, analytic_mean(model, event, grid))
        assert np.max(z) < 3.5, (model, np.max(z))


def test_step_drop_anchor_with_large_sample(event):
    # the frozen anchor 0.45 (1 + e^-1) validated at one million samples
    est = mc_mean_trajectory(StepDrop(alpha=0.9), event, np.array([10.0]), 10**6, RngSpec(4))
    expected = 0.45 * (1.0 + math.exp(-1.0))
    assert abs(est.mean[0] - expected) <= 3.0 * est.std_error[0]
    assert est.std_error[0] < 4e-4


def test_oracle_agreement_at_equal_rates(event):
    # mu == kappa stresses the removable-singularity path of the closed form
    model = DropDecay(alpha=0.9, mu=0.1)
    est = mc_mean_trajectory(model, event, np.array([5.0]), 200000, RngSpec(8))
    limit_value = 0.9 * math.exp(-0.5) * 1.25
    assert abs(est.mean[0] - limit_value) <= 3.0 * est.std_error[0]


def test_standard_error_scales_with_sample_count(event):
    model = DropDecay(alpha=0.9, mu=0.5)
    grid = np.array([2.0, 10.0, 25.0])
    small = mc_mean_trajectory(model, event, grid, 20000, RngSpec(21))
    large = mc_mean_trajectory(model, event, grid, 80000, RngSpec(22))
    ratio = large.std_error / small.std_error
    assert np.all(ratio > 0.4) and np.all(ratio < 0.6)


def test_estimates_stay_in_unit_interval(event):
    grid = np.linspace(0.0, 80.0, 9)
    est = mc_mean_trajectory(SaturatingGrowth(alpha=0.1, mu=3.0, beta=1.0), event, grid, 5000, RngSpec(2))
    assert np.all(est.mean >= 0.0) and np.all(est.mean <= 1.0)
    assert np.all(est.std_error >= 0.0)


def test_survivability_estimate_at_time_zero(team1, r1, event):
    grid = np.array([0.0, 10.0])
    est = mc_survivability(team1, r1, event, grid, 5000, RngSpec(13))
    assert est.mean[0] == pytest.approx(16.5 / 21.0, abs=1e-12)
    assert est.std_error[0] == 0.0


def test_survivability_matches_expected_curve(team2, r2, event):
    grid = np.linspace(0.0, 50.0, 11)
    est = mc_survivability(team2, r2, event, grid, 100000, RngSpec(19))
    ref = np.array([expected_survivability(team2, r2, event, t) for t in grid])
    z = z_scores(est, ref)
    assert np.max(z) < 3.0, np.max(z)


def test_survivability_n2_runs(team1, r1, event):
    est = mc_survivability(team1, r1, event, [0.0, 3.0], 2, RngSpec(1))
    assert est.n == 2
    assert np.all(np.isfinite(est.std_error))


def test_z_scores_zero_se_handling(event):
    est = mc_mean_trajectory(StepDrop(alpha=0.9), event, [0.0], 100, RngSpec(0))
    assert est.std_error[0] == 0.0
    assert z_scores(est, np.array([0.9]))[0] == 0.0
    assert np.isinf(z_scores(est, np.array([0.8]))[0])
