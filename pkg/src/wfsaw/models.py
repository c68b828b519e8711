"""Trajectory models for the six warfighting functions of a combat team.

Each warfighting function is scored on the unit interval and holds its
initial level ``alpha`` until a random engagement event at time ``tau``.
Four post-event behaviours are supported:

* ``StepDrop``          -- drops to ``alpha * R`` and stays there,
* ``DropDecay``         -- drops to ``alpha * R`` and decays like
                           ``exp(-mu * (t - tau))`` towards zero,
* ``GradualDecay``      -- no sudden drop, decays like
                           ``exp(-mu * (t - tau))`` towards zero,
* ``SaturatingGrowth``  -- grows towards an asymptote ``beta`` as
                           ``beta - (beta - alpha) * exp(-mu * (t - tau))``.

``R`` is a uniform random multiplier on [0, 1] capturing how severe the
event turns out to be, and ``tau`` is exponentially distributed with rate
``kappa`` (first event of a Poisson stream).  Under these assumptions each
model has a closed-form mean level, implemented in :func:`analytic_mean`
and cross-validated by the Monte Carlo engine in
:mod:`wfsaw.montecarlo`:

* StepDrop:          ``0.5 * alpha * (1 + exp(-kappa t))``
* DropDecay:         ``alpha e^{-kappa t} + 0.5 alpha kappa/(kappa-mu) (e^{-mu t} - e^{-kappa t})``
* GradualDecay:      ``alpha e^{-kappa t} + alpha kappa/(kappa-mu) (e^{-mu t} - e^{-kappa t})``
* SaturatingGrowth:  ``beta + (beta-alpha)/(kappa-mu) (mu e^{-kappa t} - kappa e^{-mu t})``

The apparent singularity at ``kappa == mu`` is removable; the
implementation evaluates an algebraically equivalent form based on
``expm1`` that is exact at the singular point and free of catastrophic
cancellation near it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "WfFunction",
    "StepDrop",
    "DropDecay",
    "GradualDecay",
    "SaturatingGrowth",
    "WfModel",
    "EventTime",
    "Realization",
    "ParamOutOfRange",
    "validate_model",
    "trajectory",
    "eval_trajectory",
    "analytic_mean",
]


class WfFunction(Enum):
    """The six warfighting functions, in canonical (I, C, M, F, L, P) order."""

    INTELLIGENCE = "I"
    COMMAND = "C"
    MANOEUVRE = "M"
    FIRES = "F"
    LOGISTICS = "L"
    PROTECTION = "P"

    @classmethod
    def from_letter(cls, letter: str) -> "WfFunction":
        for fn in cls:
            if fn.value == letter:
                return fn
        raise KeyError(f"unknown warfighting function {letter!r}")


#: Canonical ordering used for vector layout and serialization.
WF_ORDER: tuple[WfFunction, ...] = tuple(WfFunction)


class ParamOutOfRange(ValueError):
    """A model or event parameter violates its admissible range."""

    def __init__(self, field: str, value, reason: str, path: str | None = None):
        self.field = field
        self.value = value
        self.reason = reason
        self.path = path
        where = f"{path}.{field}" if path else field
        super().__init__(f"{where} = {value!r}: {reason}")


@dataclass(frozen=True)
class StepDrop:
    """Holds at ``alpha``, drops to ``alpha * R`` at the event time."""

    alpha: float


@dataclass(frozen=True)
class DropDecay:
    """Drops to ``alpha * R`` at the event time, then decays at rate ``mu``."""

    alpha: float
    mu: float


@dataclass(frozen=True)
class GradualDecay:
    """Holds at ``alpha``, then decays continuously at rate ``mu``."""

    alpha: float
    mu: float


@dataclass(frozen=True)
class SaturatingGrowth:
    """Grows from ``alpha`` towards ``beta`` at rate ``mu`` after the event."""

    alpha: float
    mu: float
    beta: float


WfModel = StepDrop | DropDecay | GradualDecay | SaturatingGrowth


@dataclass(frozen=True)
class EventTime:
    """Exponential first-engagement time with rate ``kappa`` (> 0)."""

    kappa: float

    def __post_init__(self):
        if not (np.isfinite(self.kappa) and self.kappa > 0):
            raise ParamOutOfRange("kappa", self.kappa, "must be finite and > 0")


@dataclass(frozen=True)
class Realization:
    """One sampled outcome of the event randomness.

    ``r`` is only meaningful for the variants with a sudden drop
    (StepDrop, DropDecay); the other variants ignore it.  Carrying it
    uniformly lets one draw drive any model variant.
    """

    tau: float
    r: float


def validate_model(model: WfModel) -> None:
    """Raise :class:`ParamOutOfRange` unless every parameter is admissible.

    Admissible ranges: ``0 <= alpha <= 1``; ``mu >= 0`` where present;
    for saturating growth additionally ``alpha < beta <= 1``.
    """
    alpha = model.alpha
    if not (np.isfinite(alpha) and 0.0 <= alpha <= 1.0):
        raise ParamOutOfRange("alpha", alpha, "must lie in [0, 1]")
    mu = getattr(model, "mu", None)
    if mu is not None and not (np.isfinite(mu) and mu >= 0.0):
        raise ParamOutOfRange("mu", mu, "must be >= 0")
    if isinstance(model, SaturatingGrowth):
        beta = model.beta
        if not (np.isfinite(beta) and alpha < beta <= 1.0):
            raise ParamOutOfRange("beta", beta, "must satisfy alpha < beta <= 1")
    elif not isinstance(model, (StepDrop, DropDecay, GradualDecay)):
        raise TypeError(f"not a warfighting-function model: {model!r}")


def trajectory(model: WfModel, tau, r, t):
    """Evaluate the piecewise trajectory; broadcasts over array arguments.

    The post-event branch applies at ``t >= tau`` (closed boundary).
    """
    tau = np.asarray(tau, dtype=float)
    r = np.asarray(r, dtype=float)
    t = np.asarray(t, dtype=float)
    after = t >= tau
    # exponent is masked pre-event so exp() cannot overflow for t < tau
    dt = np.where(after, t - tau, 0.0)
    if isinstance(model, StepDrop):
        post = model.alpha * r
    elif isinstance(model, DropDecay):
        post = model.alpha * r * np.exp(-model.mu * dt)
    elif isinstance(model, GradualDecay):
        post = model.alpha * np.exp(-model.mu * dt)
    elif isinstance(model, SaturatingGrowth):
        post = model.beta - (model.beta - model.alpha) * np.exp(-model.mu * dt)
    else:
        raise TypeError(f"not a warfighting-function model: {model!r}")
    return np.where(after, post, model.alpha)


def eval_trajectory(model: WfModel, real: Realization, t: float) -> float:
    """Deterministic trajectory level at time ``t >= 0`` for one realization."""
    if np.any(np.asarray(t) < 0):
        raise ValueError("t must be >= 0")
    out = trajectory(model, real.tau, real.r, t)
    return float(out) if out.ndim == 0 else out


def _post_event_mean_factor(kappa: float, mu: float, t: np.ndarray) -> np.ndarray:
    """E[exp(-mu * (t - tau)) if tau <= t else 1] for tau ~ Exponential(kappa).

    Both the regular expression ``e^{-kt} + k (e^{-mt} - e^{-kt}) / (k - m)``
    and its limit at ``k == m`` are covered by one evaluation: near the
    singular point the ``expm1``-based form is used, away from it the direct
    difference (which no longer cancels).
    """
    if mu == 0.0:
        return np.ones_like(t)
    ekt = np.exp(-kappa * t)
    x = (kappa - mu) * t
    out = np.empty_like(t)
    near = np.abs(x) < 0.5
    xs = x[near]
    phi = np.ones_like(xs)  # expm1(x)/x, continued by 1 at x = 0
    nz = xs != 0.0
    phi[nz] = np.expm1(xs[nz]) / xs[nz]
    out[near] = ekt[near] * (1.0 + kappa * t[near] * phi)
    far = ~near
    out[far] = ekt[far] + kappa * (np.exp(-mu * t[far]) - ekt[far]) / (kappa - mu)
    return out


def analytic_mean(model: WfModel, ev: EventTime, t):
    """Mean trajectory level at time ``t`` over the event randomness.

    Accepts a scalar or array of times and returns a matching float or
    array; results are clipped to [0, 1] to absorb last-ulp rounding.
    """
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise ValueError("t must be >= 0")
    scalar = t.ndim == 0
    tt = np.atleast_1d(t)
    ekt = np.exp(-ev.kappa * tt)
    if isinstance(model, StepDrop):
        v = 0.5 * model.alpha * (1.0 + ekt)
    elif isinstance(model, DropDecay):
        g = _post_event_mean_factor(ev.kappa, model.mu, tt)
        v = 0.5 * model.alpha * (ekt + g)
    elif isinstance(model, GradualDecay):
        v = model.alpha * _post_event_mean_factor(ev.kappa, model.mu, tt)
    elif isinstance(model, SaturatingGrowth):
        g = _post_event_mean_factor(ev.kappa, model.mu, tt)
        v = model.beta - (model.beta - model.alpha) * g
    else:
        raise TypeError(f"not a warfighting-function model: {model!r}")
    v = np.clip(v, 0.0, 1.0)
    return float(v[0]) if scalar else v
