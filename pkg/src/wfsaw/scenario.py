"""Scenario configuration: YAML schema, parsing, serialization, presets.

A scenario document is a YAML mapping with these keys (unknown keys are
rejected everywhere, as are unknown model-type tags):

.. code-block:: yaml

    kappa: 0.1                    # engagement rate, > 0
    grid: {start: 0.0, end: 50.0, step: 0.5}   # optional; this is the default
    mc: {n: 100000, seed: 7}      # optional Monte Carlo settings
    teams:
      - label: Team1
        models:                   # one model per function I|C|M|F|L|P
          I: {type: saturating_growth, alpha: 0.9, mu: 2.0, beta: 1.0}
          C: {type: step_drop, alpha: 0.9}
          # ...
    rankings:
      - {name: r1, I: 6.0, C: 4.0, M: 3.0, F: 5.0, L: 1.0, P: 2.0}

Model-type tags: ``step_drop`` (alpha), ``drop_decay`` (alpha, mu),
``gradual_decay`` (alpha, mu), ``saturating_growth`` (alpha, mu, beta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import yaml

from .aggregate import TeamProfile, WeightVector
from .models import (
    WF_ORDER,
    DropDecay,
    EventTime,
    GradualDecay,
    ParamOutOfRange,
    SaturatingGrowth,
    StepDrop,
    WfFunction,
    WfModel,
    validate_model,
)

__all__ = [
    "GridSpec",
    "DEFAULT_GRID",
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
]

MODEL_TAGS: dict[str, type] = {
    "step_drop": StepDrop,
    "drop_decay": DropDecay,
    "gradual_decay": GradualDecay,
    "saturating_growth": SaturatingGrowth,
}
_TAG_OF_TYPE = {cls: tag for tag, cls in MODEL_TAGS.items()}
_PARAMS_OF_TAG = {
    "step_drop": ("alpha",),
    "drop_decay": ("alpha", "mu"),
    "gradual_decay": ("alpha", "mu"),
    "saturating_growth": ("alpha", "mu", "beta"),
}


class ScenarioSyntaxError(ValueError):
    """The document is not well-formed YAML."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"syntax error{where}: {message}")


class SchemaError(ValueError):
    """The document is well-formed but violates the scenario schema."""

    def __init__(self, path: str, reason: str):
        self.path = path or "<document>"
        self.reason = reason
        super().__init__(f"{self.path}: {reason}")


class ScenarioLookupError(ValueError):
    """A scenario reference matches neither a preset nor an existing file."""


@dataclass(frozen=True)
class GridSpec:
    """Uniform time grid from ``start`` to ``end`` in steps of ``step``."""

    start: float
    end: float
    step: float

    def times(self) -> np.ndarray:
        count = int(math.floor((self.end - self.start) / self.step + 1e-9)) + 1
        return self.start + self.step * np.arange(count)


#: Grid used when a document does not specify one: five mean inter-event
#: times at the default kappa = 0.1, fine enough to show every regime.
DEFAULT_GRID = GridSpec(start=0.0, end=50.0, step=0.5)


@dataclass(frozen=True)
class McSettings:
    n: int
    seed: int


@dataclass(frozen=True)
class Ranking:
    name: str
    weights: WeightVector


@dataclass(frozen=True)
class Scenario:
    kappa: float
    teams: tuple[TeamProfile, ...]
    rankings: tuple[Ranking, ...]
    grid: GridSpec
    mc: McSettings | None = None

    def event(self) -> EventTime:
        return EventTime(self.kappa)

    def team(self, label: str) -> TeamProfile:
        for t in self.teams:
            if t.label == label:
                return t
        raise KeyError(f"no team labelled {label!r}")

    def ranking(self, name: str) -> Ranking:
        for r in self.rankings:
            if r.name == name:
                return r
        raise KeyError(f"no ranking named {name!r}")


def _join(path: str, key) -> str:
    if isinstance(key, int):
        return f"{path}[{key}]"
    return f"{path}.{key}" if path else str(key)


def _require_mapping(node, path: str) -> dict:
    if not isinstance(node, dict):
        raise SchemaError(path, f"expected a mapping, got {type(node).__name__}")
    return node


def _require_list(node, path: str) -> list:
    if not isinstance(node, list):
        raise SchemaError(path, f"expected a list, got {type(node).__name__}")
    return node


def _check_keys(node: dict, path: str, required: tuple, optional: tuple = ()):
    for key in node:
        if key not in required and key not in optional:
            raise SchemaError(path, f"unknown key {key!r}")
    for key in required:
        if key not in node:
            raise SchemaError(path, f"missing required key {key!r}")


def _number(node, path: str) -> float:
    if isinstance(node, bool) or not isinstance(node, (int, float)):
        raise SchemaError(path, f"expected a number, got {node!r}")
    v = float(node)
    if not math.isfinite(v):
        raise SchemaError(path, f"expected a finite number, got {node!r}")
    return v


def _integer(node, path: str) -> int:
    if isinstance(node, bool) or not isinstance(node, int):
        raise SchemaError(path, f"expected an integer, got {node!r}")
    return node


def _string(node, path: str) -> str:
    if not isinstance(node, str) or not node:
        raise SchemaError(path, f"expected a nonempty string, got {node!r}")
    return node


def _parse_model(node, path: str) -> WfModel:
    node = _require_mapping(node, path)
    if "type" not in node:
        raise SchemaError(path, "missing required key 'type'")
    tag = _string(node["type"], _join(path, "type"))
    if tag not in MODEL_TAGS:
        raise SchemaError(
            _join(path, "type"),
            f"unknown model type {tag!r}; expected one of {sorted(MODEL_TAGS)}",
        )
    params = _PARAMS_OF_TAG[tag]
    _check_keys(node, path, required=("type",) + params)
    values = {p: _number(node[p], _join(path, p)) for p in params}
    model = MODEL_TAGS[tag](**values)
    try:
        validate_model(model)
    except ParamOutOfRange as exc:
        raise ParamOutOfRange(exc.field, exc.value, exc.reason, path=path) from None
    return model


def _parse_team(node, path: str) -> TeamProfile:
    node = _require_mapping(node, path)
    _check_keys(node, path, required=("label", "models"))
    label = _string(node["label"], _join(path, "label"))
    models_node = _require_mapping(node["models"], _join(path, "models"))
    letters = tuple(fn.value for fn in WF_ORDER)
    for key in models_node:
        if key not in letters:
            raise SchemaError(_join(path, "models"), f"unknown warfighting function {key!r}")
    models: dict[WfFunction, WfModel] = {}
    for fn in WF_ORDER:
        if fn.value not in models_node:
            raise SchemaError(
                _join(path, "models"), f"missing warfighting function {fn.value!r}"
            )
        models[fn] = _parse_model(models_node[fn.value], _join(_join(path, "models"), fn.value))
    return TeamProfile(label=label, models=models)


def _parse_ranking(node, path: str) -> Ranking:
    node = _require_mapping(node, path)
    letters = tuple(fn.value for fn in WF_ORDER)
    _check_keys(node, path, required=("name",) + letters)
    name = _string(node["name"], _join(path, "name"))
    weights = {}
    for letter in letters:
        v = _number(node[letter], _join(path, letter))
        if v < 0:
            raise SchemaError(_join(path, letter), "weights must be >= 0")
        weights[letter] = v
    if sum(weights.values()) <= 0:
        raise SchemaError(path, "weights must not all be zero")
    return Ranking(name=name, weights=WeightVector.from_mapping(weights))


def _parse_grid(node, path: str) -> GridSpec:
    node = _require_mapping(node, path)
    _check_keys(node, path, required=("start", "end", "step"))
    start = _number(node["start"], _join(path, "start"))
    end = _number(node["end"], _join(path, "end"))
    step = _number(node["step"], _join(path, "step"))
    if start < 0:
        raise SchemaError(_join(path, "start"), "must be >= 0")
    if end <= start:
        raise SchemaError(_join(path, "end"), "must be greater than start")
    if step <= 0:
        raise SchemaError(_join(path, "step"), "must be > 0")
    return GridSpec(start=start, end=end, step=step)


def _parse_mc(node, path: str) -> McSettings:
    node = _require_mapping(node, path)
    _check_keys(node, path, required=("n", "seed"))
    n = _integer(node["n"], _join(path, "n"))
    if n < 2:
        raise SchemaError(_join(path, "n"), "must be >= 2")
    seed = _integer(node["seed"], _join(path, "seed"))
    if not 0 <= seed < 2**64:
        raise SchemaError(_join(path, "seed"), "must be an unsigned 64-bit integer")
    return McSettings(n=n, seed=seed)


def parse_scenario(text: str) -> Scenario:
    """Parse and fully validate a scenario document."""
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        if mark is not None:
            raise ScenarioSyntaxError(str(exc), mark.line + 1, mark.column + 1) from None
        raise ScenarioSyntaxError(str(exc)) from None
    doc = _require_mapping(doc, "")
    _check_keys(doc, "", required=("kappa", "teams", "rankings"), optional=("grid", "mc"))

    kappa = _number(doc["kappa"], "kappa")
    if kappa <= 0:
        raise ParamOutOfRange("kappa", kappa, "must be finite and > 0")
    grid = _parse_grid(doc["grid"], "grid") if "grid" in doc else DEFAULT_GRID
    mc = _parse_mc(doc["mc"], "mc") if "mc" in doc else None

    teams_node = _require_list(doc["teams"], "teams")
    if not teams_node:
        raise SchemaError("teams", "need at least one team")
    teams = tuple(_parse_team(node, _join("teams", i)) for i, node in enumerate(teams_node))
    labels = [t.label for t in teams]
    if len(set(labels)) != len(labels):
        raise SchemaError("teams", f"team labels must be unique, got {labels}")

    rankings_node = _require_list(doc["rankings"], "rankings")
    if not rankings_node:
        raise SchemaError("rankings", "need at least one ranking")
    rankings = tuple(
        _parse_ranking(node, _join("rankings", i)) for i, node in enumerate(rankings_node)
    )
    names = [r.name for r in rankings]
    if len(set(names)) != len(names):
        raise SchemaError("rankings", f"ranking names must be unique, got {names}")

    return Scenario(kappa=kappa, teams=teams, rankings=rankings, grid=grid, mc=mc)


def _model_node(model: WfModel) -> dict:
    tag = _TAG_OF_TYPE[type(model)]
    node = {"type": tag}
    for p in _PARAMS_OF_TAG[tag]:
        node[p] = float(getattr(model, p))
    return node


def serialize_scenario(s: Scenario) -> str:
    """Render a scenario back to a document; parse(serialize(s)) == s."""
    doc: dict = {
        "kappa": float(s.kappa),
        "grid": {"start": float(s.grid.start), "end": float(s.grid.end), "step": float(s.grid.step)},
    }
    if s.mc is not None:
        doc["mc"] = {"n": int(s.mc.n), "seed": int(s.mc.seed)}
    doc["teams"] = [
        {
            "label": t.label,
            "models": {fn.value: _model_node(t.models[fn]) for fn in WF_ORDER},
        }
        for t in s.teams
    ]
    doc["rankings"] = [
        {"name": r.name, **{fn.value: float(w) for fn, w in zip(WF_ORDER, r.weights.values)}}
        for r in s.rankings
    ]
    return yaml.safe_dump(doc, sort_keys=False)


# Built-in study preset: a technology-enhanced future team design (Team1)
# against a conventional design (Team2), compared under four importance
# rankings of the warfighting functions.
_PAPER_TABLE1_DOC = """\
kappa: 0.1
grid: {start: 0.0, end: 50.0, step: 0.5}
mc: {n: 100000, seed: 7}
teams:
  - label: Team1
    models:
      I: {type: saturating_growth, alpha: 0.9, mu: 2.0, beta: 1.0}
      C: {type: step_drop, alpha: 0.9}
      M: {type: step_drop, alpha: 0.5}
      F: {type: drop_decay, alpha: 0.9, mu: 2.0}
      L: {type: gradual_decay, alpha: 0.5, mu: 2.0}
      P: {type: drop_decay, alpha: 0.5, mu: 0.5}
  - label: Team2
    models:
      I: {type: saturating_growth, alpha: 0.5, mu: 0.5, beta: 0.8}
      C: {type: step_drop, alpha: 0.7}
      M: {type: step_drop, alpha: 0.7}
      F: {type: drop_decay, alpha: 0.5, mu: 0.5}
      L: {type: gradual_decay, alpha: 0.7, mu: 1.0}
      P: {type: drop_decay, alpha: 0.5, mu: 2.0}
rankings:
  - {name: r1, I: 6.0, C: 4.0, M: 3.0, F: 5.0, L: 1.0, P: 2.0}
  - {name: r2, I: 1.0, C: 2.0, M: 4.0, F: 3.0, L: 6.0, P: 5.0}
  - {name: r3, I: 1.0, C: 1.0, M: 6.0, F: 1.0, L: 6.0, P: 1.0}
  - {name: r4, I: 6.0, C: 6.0, M: 1.0, F: 6.0, L: 1.0, P: 1.0}
"""

PRESET_DOCS: dict[str, str] = {
    "paper_table1": _PAPER_TABLE1_DOC,
}


def builtin_presets() -> dict[str, Scenario]:
    """Shipped scenarios, parsed from their documents."""
    return {name: parse_scenario(doc) for name, doc in PRESET_DOCS.items()}


def load_scenario(ref: "str | Path") -> Scenario:
    """Resolve a preset name or a file path to a parsed scenario."""
    if isinstance(ref, str) and ref in PRESET_DOCS:
        return parse_scenario(PRESET_DOCS[ref])
    path = Path(ref)
    if not path.is_file():
        raise ScenarioLookupError(
            f"{ref!r} is neither a builtin preset ({', '.join(sorted(PRESET_DOCS))}) "
            "nor an existing scenario file"
        )
    return parse_scenario(path.read_text())
