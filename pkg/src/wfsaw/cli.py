"""Command-line interface.

Commands
--------
* ``eval``      -- expected-survivability curves for selected teams plus a
                   LIMIT upper-bound column, as CSV.
* ``compare``   -- dominance verdicts and max gaps for every ranking and
                   ordered team pair, plus per-ranking curve CSVs.
* ``mc-check``  -- Monte Carlo validation of every closed-form curve;
                   exits 1 when the z-score criteria fail.
* ``sweep``     -- dominance verdicts across weight vectors (scenario
                   rankings or random draws from the weight simplex).
* ``plot``      -- render a curve CSV as a static SVG chart.

Exit codes: 0 success, 1 validation failed, 2 usage or input validation
error, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

import numpy as np

from .aggregate import (
    Dominance,
    FewerThanTwoProfilesError,
    WeightVector,
    compare_teams,
    expected_survivability,
    limit_curve,
    survivability_curve,
)
from .models import WF_ORDER, analytic_mean
from .montecarlo import (
    InsufficientSamplesError,
    RngSpec,
    mc_mean_trajectory,
    mc_survivability,
    z_scores,
)
from .scenario import GridSpec, Scenario, load_scenario
from .svgplot import render_curve_svg
from .tables import curve_table, read_curve_csv, render_curve_csv

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_VALIDATION_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

Z_WARN = 3.0
Z_FAIL = 5.0
WITHIN_WARN_FRACTION = 0.99


class UsageError(ValueError):
    pass


def _parse_grid_flag(text: str) -> GridSpec:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"--grid must look like start:end:step, got {text!r}")
    try:
        start, end, step = (float(p) for p in parts)
    except ValueError:
        raise UsageError(f"--grid must contain numbers, got {text!r}") from None
    if start < 0 or end <= start or step <= 0:
        raise UsageError(f"--grid needs 0 <= start < end and step > 0, got {text!r}")
    return GridSpec(start=start, end=end, step=step)


def _times(scenario: Scenario, args) -> np.ndarray:
    grid = _parse_grid_flag(args.grid) if args.grid else scenario.grid
    return grid.times()


def _resolve_teams(scenario: Scenario, team_flag: "str | None"):
    if team_flag is None:
        return list(scenario.teams)
    labels = [s for s in (part.strip() for part in team_flag.split(",")) if s]
    if not labels:
        raise UsageError("--teams must name at least one team")
    try:
        return [scenario.team(label) for label in labels]
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None


def _resolve_ranking(scenario: Scenario, name: str) -> WeightVector:
    try:
        return scenario.ranking(name).weights
    except KeyError:
        known = ", ".join(r.name for r in scenario.rankings)
        raise UsageError(f"no ranking named {name!r} (known: {known})") from None


def _mc_settings(scenario: Scenario, args) -> tuple[int, int]:
    n = args.n if args.n is not None else (scenario.mc.n if scenario.mc else 100000)
    seed = args.seed if args.seed is not None else (scenario.mc.seed if scenario.mc else 0)
    if n < 2:
        raise InsufficientSamplesError(f"need at least 2 samples, got {n}")
    if not 0 <= seed < 2**64:
        raise UsageError(f"--seed must be an unsigned 64-bit integer, got {seed}")
    return n, seed


def _case_seed(base_seed: int, index: int) -> int:
    """Independent 64-bit seed for validation case ``index``."""
    return int(np.random.SeedSequence((base_seed, index)).generate_state(1, np.uint64)[0])


def _write_text(path: str, text: str) -> None:
    Path(path).write_text(text)


def cmd_eval(args) -> int:
    scenario = load_scenario(args.scenario)
    times = _times(scenario, args)
    weights = _resolve_ranking(scenario, args.ranking)
    teams = _resolve_teams(scenario, args.teams)
    curves = [survivability_curve(team, weights, scenario.event(), times) for team in teams]
    if args.limit_template:
        try:
            template = scenario.team(args.limit_template)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    else:
        template = teams[0]
    curves.append(limit_curve(weights, scenario.event(), template, times))
    _write_text(args.out, render_curve_csv(curve_table(curves)))
    print(f"wrote {len(curves)} curves x {times.size} points to {args.out}")
    return EXIT_OK


def cmd_compare(args) -> int:
    scenario = load_scenario(args.scenario)
    times = _times(scenario, args)
    out = Path(args.out)

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["ranking", "first", "second", "max_abs_gap", "verdict"])
    curve_files = []
    for ranking in scenario.rankings:
        report = compare_teams(
            scenario.teams, ranking.weights, scenario.event(), times, tie_tol=args.tie_tol
        )
        for pair in report.pairs:
            writer.writerow(
                [ranking.name, pair.first, pair.second, f"{pair.max_abs_gap:.9g}",
                 pair.verdict.value]
            )
        curve_path = out.with_name(f"{out.stem}_curves_{ranking.name}.csv")
        _write_text(curve_path, render_curve_csv(curve_table(report.curves)))
        curve_files.append(curve_path)
        first_pair = report.pairs[0]
        print(
            f"{ranking.name}: {first_pair.first} vs {first_pair.second}: "
            f"{first_pair.verdict.value} (max gap {first_pair.max_abs_gap:.6f})"
        )
    _write_text(out, buf.getvalue())
    print(f"wrote verdicts to {out} and curves to {len(curve_files)} files")
    return EXIT_OK


def cmd_mc_check(args) -> int:
    scenario = load_scenario(args.scenario)
    times = _times(scenario, args)
    n, seed = _mc_settings(scenario, args)
    ev = scenario.event()

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["team", "ranking_or_function", "t", "analytic", "mc_mean", "std_error", "z"])
    all_z = []
    case = 0
    for team in scenario.teams:
        for fn in WF_ORDER:
            model = team.models[fn]
            est = mc_mean_trajectory(model, ev, times, n, RngSpec(_case_seed(seed, case)))
            case += 1
            ref = analytic_mean(model, ev, times)
            z = z_scores(est, ref)
            all_z.append(z)
            for i, t in enumerate(times):
                writer.writerow(
                    [team.label, fn.value, repr(float(t)), f"{ref[i]:.9g}",
                     f"{est.mean[i]:.9g}", f"{est.std_error[i]:.9g}", f"{z[i]:.9g}"]
                )
        for ranking in scenario.rankings:
            est = mc_survivability(
                team, ranking.weights, ev, times, n, RngSpec(_case_seed(seed, case))
            )
            case += 1
            ref = np.array(
                [expected_survivability(team, ranking.weights, ev, t) for t in times]
            )
            z = z_scores(est, ref)
            all_z.append(z)
            for i, t in enumerate(times):
                writer.writerow(
                    [team.label, ranking.name, repr(float(t)), f"{ref[i]:.9g}",
                     f"{est.mean[i]:.9g}", f"{est.std_error[i]:.9g}", f"{z[i]:.9g}"]
                )
    _write_text(args.out, buf.getvalue())

    z = np.concatenate(all_z)
    within = float(np.mean(z <= Z_WARN))
    worst = float(np.max(z))
    ok = within >= WITHIN_WARN_FRACTION and worst <= Z_FAIL
    print(
        f"mc-check: n={n} seed={seed} points={z.size} "
        f"within 3 SE: {within:.2%} (need >= {WITHIN_WARN_FRACTION:.0%}), "
        f"max z={worst:.3f} (need <= {Z_FAIL:g}) -> {'PASS' if ok else 'FAIL'}"
    )
    return EXIT_OK if ok else EXIT_VALIDATION_FAILED


def _sweep_rows(scenario: Scenario, named_weights, times, tie_tol):
    first, second = scenario.teams[0], scenario.teams[1]
    for name, weights in named_weights:
        report = compare_teams([first, second], weights, scenario.event(), times, tie_tol)
        pair = report.pairs[0]
        yield name, weights, pair


def cmd_sweep(args) -> int:
    scenario = load_scenario(args.scenario)
    if len(scenario.teams) < 2:
        raise FewerThanTwoProfilesError("sweep needs at least two teams in the scenario")
    times = _times(scenario, args)

    if args.mode == "rankings":
        named = [(r.name, r.weights) for r in scenario.rankings]
    else:
        if args.count is None or args.count < 1:
            raise UsageError("--count must be >= 1 in random-simplex mode")
        seed = args.seed if args.seed is not None else (
            scenario.mc.seed if scenario.mc else 0
        )
        gen = RngSpec(seed).generator()
        width = len(str(args.count - 1))
        named = [
            (f"draw_{i:0{width}d}", WeightVector(tuple(gen.dirichlet(np.ones(len(WF_ORDER))))))
            for i in range(args.count)
        ]

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    letters = [fn.value for fn in WF_ORDER]
    writer.writerow(["name"] + letters + ["first", "second", "max_abs_gap", "verdict"])
    tally = {verdict: 0 for verdict in Dominance}
    rows = 0
    for name, weights, pair in _sweep_rows(scenario, named, times, args.tie_tol):
        writer.writerow(
            [name] + [f"{w:.9g}" for w in weights.values]
            + [pair.first, pair.second, f"{pair.max_abs_gap:.9g}", pair.verdict.value]
        )
        tally[pair.verdict] += 1
        rows += 1
    _write_text(args.out, buf.getvalue())

    print(f"sweep: {rows} weight vectors -> {args.out}")
    if args.mode == "random-simplex":
        first, second = scenario.teams[0].label, scenario.teams[1].label
        print(f"fraction {first} dominates:  {tally[Dominance.FIRST_DOMINATES] / rows:.3f}")
        print(f"fraction {second} dominates: {tally[Dominance.SECOND_DOMINATES] / rows:.3f}")
        print(f"fraction mixed:              {tally[Dominance.MIXED] / rows:.3f}")
        print(f"fraction tied:               {tally[Dominance.TIED] / rows:.3f}")
    return EXIT_OK


def cmd_plot(args) -> int:
    path = Path(args.csv)
    if not path.is_file():
        raise UsageError(f"no such CSV file: {args.csv}")
    table = read_curve_csv(path)
    _write_text(args.out, render_curve_svg(table))
    print(f"wrote SVG chart with {len(table.columns)} curves to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wfsaw",
        description="Expected-survivability curves and comparisons of combat team designs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, ranking=False, teams=False, mc=False, limit=False, tie=False):
        p.add_argument("--scenario", required=True,
                       help="builtin preset name or scenario file path")
        p.add_argument("--grid", default=None,
                       help="override time grid as start:end:step")
        p.add_argument("--out", required=True, help="output file path")
        if ranking:
            p.add_argument("--ranking", required=True, help="ranking name from the scenario")
        if teams:
            p.add_argument("--teams", default=None,
                           help="comma-separated team labels (default: all teams)")
        if mc:
            p.add_argument("--n", type=int, default=None, help="Monte Carlo sample count")
            p.add_argument("--seed", type=int, default=None, help="random seed (u64)")
        if limit:
            p.add_argument("--limit-template", default=None,
                           help="team whose layout parameterises the LIMIT curve "
                                "(default: first requested team)")
        if tie:
            p.add_argument("--tie-tol", type=float, default=1e-9,
                           help="max gap treated as a tie (default 1e-9)")

    p_eval = sub.add_parser("eval", help="write survivability curves plus a LIMIT column")
    add_common(p_eval, ranking=True, teams=True, limit=True)
    p_eval.set_defaults(func=cmd_eval)

    p_cmp = sub.add_parser("compare", help="dominance verdicts for every ranking")
    add_common(p_cmp, tie=True)
    p_cmp.set_defaults(func=cmd_compare)

    p_mc = sub.add_parser("mc-check", help="validate closed forms against Monte Carlo")
    add_common(p_mc, mc=True)
    p_mc.set_defaults(func=cmd_mc_check)

    p_sweep = sub.add_parser("sweep", help="dominance verdicts across weight vectors")
    add_common(p_sweep, tie=True)
    p_sweep.add_argument("--mode", choices=["rankings", "random-simplex"],
                         default="rankings")
    p_sweep.add_argument("--count", type=int, default=None,
                         help="number of random weight vectors (random-simplex mode)")
    p_sweep.add_argument("--seed", type=int, default=None, help="random seed (u64)")
    p_sweep.set_defaults(func=cmd_sweep)

    p_plot = sub.add_parser("plot", help="render a curve CSV as a static SVG chart")
    p_plot.add_argument("csv", help="curve CSV produced by eval or compare")
    p_plot.add_argument("--out", required=True, help="output SVG path")
    p_plot.set_defaults(func=cmd_plot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else int(exc.code)
    try:
        return args.func(args)
    except ValueError as exc:
        # UsageError, ScenarioLookupError, ScenarioSyntaxError, SchemaError,
        # ParamOutOfRange, GridError, FewerThanTwoProfilesError,
        # InsufficientSamplesError, CsvFormatError: all input validation
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
