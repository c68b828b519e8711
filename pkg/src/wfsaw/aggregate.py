"""Simple-additive-weighting survivability of a combat team.

A team's survivability at time ``t`` is the importance-weighted average
of its six warfighting-function levels,

    Z(t) = sum_u lambda_u x_u(t) / sum_u lambda_u,

which lies in [0, 1] by construction.  The expected survivability curve
replaces each ``x_u(t)`` with its closed-form mean.  An upper-bound
"LIMIT" curve is obtained by pushing every model of a template profile
to its maximal configuration.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .models import (
    WF_ORDER,
    DropDecay,
    EventTime,
    GradualDecay,
    Realization,
    SaturatingGrowth,
    StepDrop,
    WfFunction,
    WfModel,
    analytic_mean,
    eval_trajectory,
)

__all__ = [
    "WeightVector",
    "TeamProfile",
    "SurvivabilityCurve",
    "Dominance",
    "PairComparison",
    "ComparisonReport",
    "GridError",
    "EmptyGridError",
    "NonMonotoneGridError",
    "FewerThanTwoProfilesError",
    "survivability_sample",
    "expected_survivability",
    "survivability_curve",
    "limit_profile",
    "limit_curve",
    "compare_teams",
    "check_grid",
]

DEFAULT_TIE_TOL = 1e-9


class GridError(ValueError):
    """A time grid violates its preconditions."""


class EmptyGridError(GridError):
    pass


class NonMonotoneGridError(GridError):
    pass


class FewerThanTwoProfilesError(ValueError):
    pass


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative importance weights, one per warfighting function.

    Stored as a tuple in canonical (I, C, M, F, L, P) order.  Weights need
    not be normalised; all aggregation divides by their sum.
    """

    values: tuple[float, float, float, float, float, float]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if len(self.values) != len(WF_ORDER):
            raise ValueError("a weight vector needs exactly six entries")

    @classmethod
    def from_mapping(cls, mapping: Mapping) -> "WeightVector":
        """Build from a mapping keyed by WfFunction or by letter (I..P)."""
        vals = []
        for fn in WF_ORDER:
            if fn in mapping:
                vals.append(mapping[fn])
            elif fn.value in mapping:
                vals.append(mapping[fn.value])
            else:
                raise KeyError(f"missing weight for function {fn.value}")
        return cls(tuple(vals))

    def __getitem__(self, fn: WfFunction) -> float:
        return self.values[WF_ORDER.index(fn)]

    def total(self) -> float:
        return float(sum(self.values))

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=float)

    def validate(self) -> None:
        for fn, v in zip(WF_ORDER, self.values):
            if not (np.isfinite(v) and v >= 0.0):
                raise ValueError(f"weight for {fn.value} must be finite and >= 0, got {v!r}")
        if self.total() <= 0.0:
            raise ValueError("weights must not all be zero")


@dataclass(frozen=True)
class TeamProfile:
    """A named assignment of one trajectory model to each warfighting function."""

    label: str
    models: Mapping[WfFunction, WfModel]

    def __post_init__(self):
        object.__setattr__(self, "models", dict(self.models))
        missing = [fn.value for fn in WF_ORDER if fn not in self.models]
        if missing:
            raise ValueError(f"profile {self.label!r} missing models for {missing}")


@dataclass(frozen=True)
class SurvivabilityCurve:
    """Expected survivability sampled on a time grid."""

    label: str
    grid: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "grid", np.asarray(self.grid, dtype=float))
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))
        if self.values.shape != self.grid.shape:
            raise ValueError("curve values and grid must have matching length")


class Dominance(Enum):
    FIRST_DOMINATES = "FIRST_DOMINATES"
    SECOND_DOMINATES = "SECOND_DOMINATES"
    MIXED = "MIXED"
    TIED = "TIED"


@dataclass(frozen=True)
class PairComparison:
    """Pointwise comparison of two curves sharing a grid."""

    first: str
    second: str
    difference: np.ndarray
    max_abs_gap: float
    verdict: Dominance


@dataclass(frozen=True)
class ComparisonReport:
    grid: np.ndarray
    curves: tuple[SurvivabilityCurve, ...]
    pairs: tuple[PairComparison, ...]
    tie_tol: float


def check_grid(grid) -> np.ndarray:
    """Validate a time grid: nonempty, times >= 0, strictly increasing."""
    g = np.asarray(grid, dtype=float)
    if g.ndim != 1 or g.size == 0:
        raise EmptyGridError("time grid must be a nonempty 1-d sequence")
    if np.any(g < 0):
        raise GridError("time grid must not contain negative times")
    if g.size > 1 and np.any(np.diff(g) <= 0):
        raise NonMonotoneGridError("time grid must be strictly increasing")
    return g


def _weighted_average(weights: WeightVector, levels: Sequence[float]) -> float:
    num = 0.0
    den = 0.0
    for lam, x in zip(weights.values, levels):
        num += lam * x
        den += lam
    if den <= 0.0:
        raise ValueError("weights must not all be zero")
    return min(1.0, max(0.0, num / den))


def survivability_sample(
    profile: TeamProfile,
    weights: WeightVector,
    reals: Mapping[WfFunction, Realization],
    t: float,
) -> float:
    """Survivability of one joint realization at time ``t``."""
    levels = [eval_trajectory(profile.models[fn], reals[fn], t) for fn in WF_ORDER]
    return _weighted_average(weights, levels)


def expected_survivability(
    profile: TeamProfile, weights: WeightVector, ev: EventTime, t: float
) -> float:
    """Mean survivability at time ``t`` from the closed-form model means."""
    levels = [analytic_mean(profile.models[fn], ev, t) for fn in WF_ORDER]
    return _weighted_average(weights, levels)


def survivability_curve(
    profile: TeamProfile, weights: WeightVector, ev: EventTime, grid
) -> SurvivabilityCurve:
    """Expected survivability evaluated pointwise over ``grid``."""
    g = check_grid(grid)
    num = np.zeros_like(g)
    den = 0.0
    for lam, fn in zip(weights.values, WF_ORDER):
        num += lam * analytic_mean(profile.models[fn], ev, g)
        den += lam
    if den <= 0.0:
        raise ValueError("weights must not all be zero")
    values = np.clip(num / den, 0.0, 1.0)
    return SurvivabilityCurve(label=profile.label, grid=g, values=values)


def limit_profile(template: TeamProfile, label: str = "LIMIT") -> TeamProfile:
    """Maximal configuration of a template's model-variant layout.

    Every initial level and growth asymptote becomes 1 and every growth
    rate becomes 1; decay rates are kept from the template.  The
    saturating-growth entries end up with ``alpha == beta == 1``, a
    degenerate constant-1 model that deliberately sits outside the strict
    ``alpha < beta`` user-facing invariant; all evaluation handles it.
    """
    maxed: dict[WfFunction, WfModel] = {}
    for fn, m in template.models.items():
        if isinstance(m, StepDrop):
            maxed[fn] = StepDrop(alpha=1.0)
        elif isinstance(m, DropDecay):
            maxed[fn] = DropDecay(alpha=1.0, mu=m.mu)
        elif isinstance(m, GradualDecay):
            maxed[fn] = GradualDecay(alpha=1.0, mu=m.mu)
        elif isinstance(m, SaturatingGrowth):
            maxed[fn] = SaturatingGrowth(alpha=1.0, mu=1.0, beta=1.0)
        else:
            raise TypeError(f"not a warfighting-function model: {m!r}")
    return TeamProfile(label=label, models=maxed)


def limit_curve(
    weights: WeightVector, ev: EventTime, template: TeamProfile, grid
) -> SurvivabilityCurve:
    """Upper-bound survivability curve for the template's variant layout."""
    return survivability_curve(limit_profile(template), weights, ev, grid)


def _verdict(diff: np.ndarray, tie_tol: float) -> tuple[float, Dominance]:
    max_abs = float(np.max(np.abs(diff)))
    if max_abs <= tie_tol:
        return max_abs, Dominance.TIED
    # points within tie_tol of zero count as equal on either side
    if np.all(diff >= -tie_tol):
        return max_abs, Dominance.FIRST_DOMINATES
    if np.all(diff <= tie_tol):
        return max_abs, Dominance.SECOND_DOMINATES
    return max_abs, Dominance.MIXED


def compare_teams(
    profiles: Sequence[TeamProfile],
    weights: WeightVector,
    ev: EventTime,
    grid,
    tie_tol: float = DEFAULT_TIE_TOL,
) -> ComparisonReport:
    """Curves for every profile plus a dominance verdict per ordered pair."""
    if len(profiles) < 2:
        raise FewerThanTwoProfilesError("need at least two team profiles to compare")
    g = check_grid(grid)
    curves = tuple(survivability_curve(p, weights, ev, g) for p in profiles)
    pairs = []
    for i, a in enumerate(curves):
        for j, b in enumerate(curves):
            if i == j:
                continue
            diff = a.values - b.values
            max_abs, verdict = _verdict(diff, tie_tol)
            pairs.append(
                PairComparison(
                    first=a.label,
                    second=b.label,
                    difference=diff,
                    max_abs_gap=max_abs,
                    verdict=verdict,
                )
            )
    return ComparisonReport(grid=g, curves=curves, pairs=tuple(pairs), tie_tol=tie_tol)
