"""Stochastic warfighting-function models and SAW survivability comparison.

A combat team is described by six warfighting functions (Intelligence,
Command and Control, Movement and Manoeuvre, Fires, Logistics, Force
Protection), each modelled as a unit-interval trajectory that reacts to a
random engagement event.  Expected survivability is the importance-weighted
average of the six mean trajectories; competing team designs are compared
by their curves under different importance rankings.  Every closed-form
mean is cross-validated by a seeded Monte Carlo oracle.
"""

from .aggregate import (
    ComparisonReport,
    Dominance,
    EmptyGridError,
    FewerThanTwoProfilesError,
    GridError,
    NonMonotoneGridError,
    PairComparison,
    SurvivabilityCurve,
    TeamProfile,
    WeightVector,
    compare_teams,
    expected_survivability,
    limit_curve,
    limit_profile,
    survivability_curve,
    survivability_sample,
)
from .models import (
    WF_ORDER,
    DropDecay,
    EventTime,
    GradualDecay,
    ParamOutOfRange,
    Realization,
    SaturatingGrowth,
    StepDrop,
    WfFunction,
    WfModel,
    analytic_mean,
    eval_trajectory,
    trajectory,
    validate_model,
)
from .montecarlo import (
    InsufficientSamplesError,
    McEstimate,
    RngSpec,
    mc_mean_trajectory,
    mc_survivability,
    sample_realization,
    z_scores,
)
from .scenario import (
    GridSpec,
    McSettings,
    Ranking,
    Scenario,
    SchemaError,
    ScenarioLookupError,
    ScenarioSyntaxError,
    builtin_presets,
    load_scenario,
    parse_scenario,
    serialize_scenario,
)

__version__ = "0.1.0"

__all__ = [
    "WfFunction",
    "WF_ORDER",
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
    "RngSpec",
    "McEstimate",
    "InsufficientSamplesError",
    "sample_realization",
    "mc_mean_trajectory",
    "mc_survivability",
    "z_scores",
    "GridSpec",
    "McSettings",
    "Ranking",
    "Scenario",
    "SchemaError",
    "ScenarioSyntaxError",
    "ScenarioLookupError",
    "parse_scenario",
    "serialize_scenario",
    "builtin_presets",
    "load_scenario",
    "__version__",
]
