"""Seeded Monte Carlo estimation of mean trajectories and survivability.

This module is the independent oracle for every closed form in
:mod:`wfsaw.models` and :mod:`wfsaw.aggregate`: it samples the raw
event randomness and averages the exact piecewise trajectories.

Reproducibility contract
------------------------
Estimates are a pure function of (seed, algorithm, sample count, inputs).
Samples are partitioned into fixed-size blocks of ``BLOCK_SIZE``; block
``i`` draws from ``PCG64(SeedSequence(seed, spawn_key=(i,)))``, taking the
event-time uniforms first and the drop-fraction uniforms second.  Block
moments are accumulated with a first-sample offset (so a constant sample,
e.g. at t = 0, yields its value exactly with zero standard error) and are
combined in block order.  Worker threads only change which thread computes
a block, never the partitioning or the combination order, so results are
bit-identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .aggregate import TeamProfile, WeightVector, check_grid
from .models import WF_ORDER, EventTime, Realization, WfModel, trajectory

__all__ = [
    "BLOCK_SIZE",
    "RngSpec",
    "McEstimate",
    "InsufficientSamplesError",
    "sample_realization",
    "mc_mean_trajectory",
    "mc_survivability",
    "z_scores",
]

#: Fixed sample-block size; part of the reproducibility contract.
BLOCK_SIZE = 16384

#: |mc - analytic| below this counts as agreement when the standard error is 0.
ZERO_SE_TOL = 1e-12


class InsufficientSamplesError(ValueError):
    pass


@dataclass(frozen=True)
class RngSpec:
    """Seeded, named random stream: 64-bit seed plus generator identity."""

    seed: int
    algorithm: str = "pcg64"

    def __post_init__(self):
        if not (0 <= int(self.seed) < 2**64):
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        if self.algorithm != "pcg64":
            raise ValueError(f"unknown generator algorithm {self.algorithm!r}")

    def generator(self) -> np.random.Generator:
        """Single sequential stream (used by :func:`sample_realization`)."""
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence(self.seed)))

    def block_generator(self, block: int) -> np.random.Generator:
        """Independent substream for sample block ``block``."""
        seq = np.random.SeedSequence(entropy=self.seed, spawn_key=(block,))
        return np.random.Generator(np.random.PCG64(seq))


def _as_spec(rng: "RngSpec | int") -> RngSpec:
    return rng if isinstance(rng, RngSpec) else RngSpec(int(rng))


@dataclass(frozen=True)
class McEstimate:
    """Per-grid-point sample mean and standard error over ``n`` samples.

    ``std_error`` is the unbiased sample standard deviation divided by
    ``sqrt(n)``.
    """

    mean: np.ndarray
    std_error: np.ndarray
    n: int


def sample_tau(ev: EventTime, u: np.ndarray) -> np.ndarray:
    """Inverse-CDF event time from uniforms on [0, 1).

    Uses 1 - u in (0, 1] inside the logarithm, so log(0) cannot occur.
    """
    return -np.log1p(-u) / ev.kappa


def sample_realization(ev: EventTime, rng: np.random.Generator) -> Realization:
    """Draw one (tau, r) pair: the event-time uniform first, then r."""
    tau = float(sample_tau(ev, rng.random()))
    r = float(rng.random())
    return Realization(tau=tau, r=r)


def _block_sizes(n: int):
    start = 0
    block = 0
    while start < n:
        m = min(BLOCK_SIZE, n - start)
        yield block, m
        start += m
        block += 1


def _block_moments(x: np.ndarray) -> tuple[int, np.ndarray, np.ndarray]:
    """(count, mean, sum of squared deviations) per column of ``x``.

    Accumulation is offset by the first sample so identical samples give
    an exact mean and exactly zero spread.
    """
    c = x[0]
    d = x - c
    s1 = np.add.reduce(d, axis=0)
    s2 = np.add.reduce(d * d, axis=0)
    m = x.shape[0]
    mean = c + s1 / m
    m2 = np.maximum(s2 - s1 * s1 / m, 0.0)
    return m, mean, m2


def _combine_moments(a, b):
    """Pooled mean and squared deviations of two disjoint sample sets."""
    na, mean_a, m2_a = a
    nb, mean_b, m2_b = b
    n = na + nb
    delta = mean_b - mean_a
    mean = mean_a + delta * (nb / n)
    m2 = m2_a + m2_b + delta * delta * (na * nb / n)
    return n, mean, m2


def _estimate_over_blocks(n: int, make_block, workers: int) -> McEstimate:
    jobs = list(_block_sizes(n))

    def run(job):
        block, m = job
        return _block_moments(make_block(block, m))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(job) for job in jobs]
    acc = results[0]
    for part in results[1:]:
        acc = _combine_moments(acc, part)
    total, mean, m2 = acc
    var = m2 / (total - 1)
    se = np.sqrt(var / total)
    return McEstimate(mean=np.clip(mean, 0.0, 1.0), std_error=se, n=total)


def mc_mean_trajectory(
    model: WfModel,
    ev: EventTime,
    grid,
    n: int,
    rng: RngSpec | int,
    workers: int = 1,
) -> McEstimate:
    """Monte Carlo mean of one model's trajectory at every grid point.

    One realization is drawn per sample and reused across all grid points
    (common random numbers along the curve).
    """
    if n < 2:
        raise InsufficientSamplesError(f"need at least 2 samples, got {n}")
    g = check_grid(grid)
    spec = _as_spec(rng)

    def make_block(block: int, m: int) -> np.ndarray:
        gen = spec.block_generator(block)
        tau = sample_tau(ev, gen.random(m))
        r = gen.random(m)
        return trajectory(model, tau[:, None], r[:, None], g[None, :])

    return _estimate_over_blocks(n, make_block, workers)


def mc_survivability(
    profile: TeamProfile,
    weights: WeightVector,
    ev: EventTime,
    grid,
    n: int,
    rng: RngSpec | int,
    workers: int = 1,
) -> McEstimate:
    """Monte Carlo mean survivability of a team at every grid point.

    Each sample draws an independent realization per warfighting function
    (tau matrix first, then the r matrix, both in canonical function
    order) and aggregates the six trajectories by the weighted average.
    """
    if n < 2:
        raise InsufficientSamplesError(f"need at least 2 samples, got {n}")
    g = check_grid(grid)
    weights.validate()
    spec = _as_spec(rng)
    lams = weights.as_array()
    total = lams.sum()

    def make_block(block: int, m: int) -> np.ndarray:
        gen = spec.block_generator(block)
        tau = sample_tau(ev, gen.random((m, len(WF_ORDER))))
        r = gen.random((m, len(WF_ORDER)))
        acc = np.zeros((m, g.size))
        for j, fn in enumerate(WF_ORDER):
            acc += lams[j] * trajectory(
                profile.models[fn], tau[:, j : j + 1], r[:, j : j + 1], g[None, :]
            )
        return np.clip(acc / total, 0.0, 1.0)

    return _estimate_over_blocks(n, make_block, workers)


def z_scores(estimate: McEstimate, reference) -> np.ndarray:
    """|mc - reference| in units of the standard error, elementwise.

    Grid points with zero standard error (all samples identical, e.g. at
    t = 0) score 0 when the absolute difference is below ``ZERO_SE_TOL``
    and infinity otherwise.
    """
    ref = np.asarray(reference, dtype=float)
    diff = np.abs(estimate.mean - ref)
    se = estimate.std_error
    with np.errstate(divide="ignore", invalid="ignore"):
        z = np.where(se > 0, diff / np.where(se > 0, se, 1.0), np.inf)
    return np.where((se == 0) & (diff <= ZERO_SE_TOL), 0.0, z)
