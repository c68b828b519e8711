"""Acceptance suite: one printed PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import math
import random

import numpy as np

from wfsaw import (
    Dominance,
    DropDecay,
    EventTime,
    GradualDecay,
    RngSpec,
    SaturatingGrowth,
    StepDrop,
    WF_ORDER,
    analytic_mean,
    compare_teams,
    expected_survivability,
    load_scenario,
    mc_mean_trajectory,
    mc_survivability,
    parse_scenario,
    serialize_scenario,
    survivability_curve,
    z_scores,
)
from wfsaw.cli import main

from conftest import make_random_scenario

SWEEP_SEED = 2025
VARIANTS = (StepDrop, DropDecay, GradualDecay, SaturatingGrowth)


def _report(cid: str, ok: bool, detail: str) -> bool:
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {cid}: {detail}")
    return ok


def _variant_sweep(variant_index: int, n_sets: int = 50, n: int = 100000) -> np.ndarray:
    """Randomised parameters for one variant; z-scores of mc vs closed form."""
    variant = VARIANTS[variant_index]
    gen = np.random.Generator(
        np.random.PCG64(np.random.SeedSequence((SWEEP_SEED, variant_index)))
    )
    zs = []
    for _ in range(n_sets):
        alpha = gen.uniform(0.0, 1.0)
        mu = float(np.exp(gen.uniform(np.log(0.01), np.log(10.0))))
        kappa = float(np.exp(gen.uniform(np.log(0.01), np.log(10.0))))
        if variant is StepDrop:
            model = StepDrop(alpha)
        elif variant is SaturatingGrowth:
            alpha = gen.uniform(0.0, 0.99)
            beta = gen.uniform(alpha + 1e-6, 1.0)
            model = SaturatingGrowth(alpha, mu, beta)
        else:
            model = variant(alpha, mu)
        ev = EventTime(kappa)
        grid = np.linspace(0.0, 5.0 / kappa, 11)
        case_seed = int(gen.integers(0, 2**63))
        est = mc_mean_trajectory(model, ev, grid, n, RngSpec(case_seed))
        zs.append(z_scores(est, analytic_mean(model, ev, grid)))
    return np.concatenate(zs)


def test_criterion_1_closed_form_oracle_equivalence():
    z = np.concatenate([_variant_sweep(i) for i in range(len(VARIANTS))])
    within3 = float(np.mean(z <= 3.0))
    worst = float(np.max(z))
    ok = within3 >= 0.99 and worst <= 5.0
    assert _report(
        "1 (closed form vs oracle)",
        ok,
        f"{z.size} points, {within3:.2%} within 3 SE (need >= 99%), max z {worst:.2f} (need <= 5)",
    )


def test_criterion_2_survivability_oracle():
    s = load_scenario("paper_table1")
    ev = s.event()
    times = s.grid.times()
    worst = 0.0
    case = 0
    for team in s.teams:
        for ranking in s.rankings:
            seed = int(
                np.random.SeedSequence((s.mc.seed, case)).generate_state(1, np.uint64)[0]
            )
            est = mc_survivability(team, ranking.weights, ev, times, s.mc.n, RngSpec(seed))
            ref = np.array(
                [expected_survivability(team, ranking.weights, ev, t) for t in times]
            )
            worst = max(worst, float(np.max(z_scores(est, ref))))
            case += 1
    ok = worst < 3.0
    assert _report(
        "2 (survivability oracle)",
        ok,
        f"8 curves x {times.size} points, n={s.mc.n}, max z {worst:.2f} (need < 3)",
    )


def test_criterion_3_ranking_verdicts():
    s = load_scenario("paper_table1")
    ev = s.event()
    times = s.grid.times()
    curves = {
        (team.label, r.name): survivability_curve(team, r.weights, ev, times).values
        for team in s.teams
        for r in s.rankings
    }

    d1 = curves[("Team1", "r1")] - curves[("Team2", "r1")]
    ok_r1 = bool(np.all(d1 >= 0.0) and np.all(d1[times > 0] > 0.0))
    assert _report("3a (r1 Team1 dominates)", ok_r1, f"min gap {d1.min():.6f}")

    d2 = curves[("Team1", "r2")] - curves[("Team2", "r2")]
    gap2 = float(np.max(np.abs(d2)))
    ok_r2 = gap2 < 0.01
    assert _report("3b (r2 near tie)", ok_r2, f"max |gap| {gap2:.6f} (need < 0.01)")

    report3 = compare_teams(s.teams, s.rankings[2].weights, ev, times)
    ok_r3 = report3.pairs[0].verdict is Dominance.SECOND_DOMINATES
    assert _report(
        "3c (r3 Team2 dominates)", ok_r3, f"verdict {report3.pairs[0].verdict.value}"
    )

    report4 = compare_teams(s.teams, s.rankings[3].weights, ev, times)
    gap1 = float(np.max(np.abs(d1)))
    gap4 = report4.pairs[0].max_abs_gap
    ok_r4 = report4.pairs[0].verdict is Dominance.FIRST_DOMINATES and gap4 > gap1
    assert _report(
        "3d (r4 Team1 dominates, wider than r1)",
        ok_r4,
        f"verdict {report4.pairs[0].verdict.value}, max gap {gap4:.6f} vs r1 {gap1:.6f}",
    )


def test_criterion_4_anchor_values():
    s = load_scenario("paper_table1")
    ev = s.event()
    r1 = s.rankings[0].weights
    # hand sums over the study table under ranking (6, 4, 3, 5, 1, 2)
    team1_hand = (6 * 0.9 + 4 * 0.9 + 3 * 0.5 + 5 * 0.9 + 1 * 0.5 + 2 * 0.5) / 21.0  # 16.5/21
    team2_hand = (6 * 0.5 + 4 * 0.7 + 3 * 0.7 + 5 * 0.5 + 1 * 0.7 + 2 * 0.5) / 21.0  # 12.1/21
    got1 = expected_survivability(s.teams[0], r1, ev, 0.0)
    got2 = expected_survivability(s.teams[1], r1, ev, 0.0)
    step_hand = 0.45 * (1.0 + math.exp(-1.0))
    got_step = analytic_mean(StepDrop(alpha=0.9), ev, 10.0)
    ok = (
        abs(got1 - team1_hand) < 1e-6
        and abs(got2 - team2_hand) < 1e-6
        and abs(got_step - step_hand) < 1e-6
    )
    assert _report(
        "4 (hand-derived anchors)",
        ok,
        f"EZ(0): {got1:.9f} vs {team1_hand:.9f}, {got2:.9f} vs {team2_hand:.9f}; "
        f"step mean {got_step:.9f} vs {step_hand:.9f}",
    )


def test_criterion_5_singularity_handling():
    kappa = 0.1
    ev = EventTime(kappa)
    grid = np.linspace(0.0, 50.0, 11)
    makers = (
        lambda mu: DropDecay(alpha=0.9, mu=mu),
        lambda mu: GradualDecay(alpha=0.7, mu=mu),
        lambda mu: SaturatingGrowth(alpha=0.5, mu=mu, beta=0.8),
    )
    worst_gap = 0.0
    worst_z = 0.0
    for i, make in enumerate(makers):
        at = analytic_mean(make(kappa), ev, grid)
        for side in (1.0 + 1e-6, 1.0 - 1e-6):
            near = analytic_mean(make(kappa * side), ev, grid)
            worst_gap = max(worst_gap, float(np.max(np.abs(at - near))))
        est = mc_mean_trajectory(make(kappa), ev, grid, 100000, RngSpec(300 + i))
        worst_z = max(worst_z, float(np.max(z_scores(est, at))))
    ok = worst_gap <= 1e-4 and worst_z <= 3.0
    assert _report(
        "5 (removable singularity at mu == kappa)",
        ok,
        f"max |mean(mu=k) - mean(mu=k(1+/-1e-6))| = {worst_gap:.2e} (need <= 1e-4), "
        f"max oracle z {worst_z:.2f} (need <= 3)",
    )


def _asymptote(model) -> float:
    if isinstance(model, StepDrop):
        return 0.5 * model.alpha
    if isinstance(model, SaturatingGrowth):
        return model.beta
    return 0.0


def test_criterion_6_boundary_laws():
    s = load_scenario("paper_table1")
    ev = s.event()
    worst_t0 = 0.0
    worst_tail = 0.0
    for team in s.teams:
        for fn in WF_ORDER:
            model = team.models[fn]
            worst_t0 = max(worst_t0, abs(analytic_mean(model, ev, 0.0) - model.alpha))
            rates = [ev.kappa] + (
                [model.mu] if not isinstance(model, StepDrop) else []
            )
            t_tail = 21.0 / min(rates)  # e^{-min rate * t} < 1e-9 there
            worst_tail = max(
                worst_tail, abs(analytic_mean(model, ev, t_tail) - _asymptote(model))
            )
    ok = worst_t0 <= 1e-12 and worst_tail <= 1e-6
    assert _report(
        "6 (initial value and asymptote)",
        ok,
        f"max |mean(0) - alpha| = {worst_t0:.2e} (need <= 1e-12), "
        f"max tail error {worst_tail:.2e} (need <= 1e-6)",
    )


def test_criterion_7_determinism(tmp_path):
    mc_args = ["mc-check", "--scenario", "paper_table1", "--n", "2000", "--seed", "11",
               "--grid", "0:10:2"]
    out_a = tmp_path / "mc_a.csv"
    out_b = tmp_path / "mc_b.csv"
    code_a = main(mc_args + ["--out", str(out_a)])
    code_b = main(mc_args + ["--out", str(out_b)])
    same_mc = code_a == code_b and out_a.read_bytes() == out_b.read_bytes()

    eval_a = tmp_path / "eval_a.csv"
    eval_b = tmp_path / "eval_b.csv"
    for out in (eval_a, eval_b):
        assert main(["eval", "--scenario", "paper_table1", "--ranking", "r1",
                     "--out", str(out)]) == 0
    cmp_a = tmp_path / "cmp_a.csv"
    cmp_b = tmp_path / "cmp_b.csv"
    for out in (cmp_a, cmp_b):
        assert main(["compare", "--scenario", "paper_table1", "--out", str(out)]) == 0
    same_eval = eval_a.read_bytes() == eval_b.read_bytes()
    same_cmp = cmp_a.read_bytes() == cmp_b.read_bytes() and (
        (tmp_path / "cmp_a_curves_r2.csv").read_bytes()
        == (tmp_path / "cmp_b_curves_r2.csv").read_bytes()
    )
    ok = same_mc and same_eval and same_cmp
    assert _report(
        "7 (byte-identical reruns)",
        ok,
        f"mc-check identical: {same_mc}, eval identical: {same_eval}, "
        f"compare identical: {same_cmp}",
    )


def test_criterion_8_scenario_round_trip():
    s = load_scenario("paper_table1")
    ok_preset = parse_scenario(serialize_scenario(s)) == s
    rng = random.Random(12021)
    failures = 0
    for _ in range(100):
        candidate = make_random_scenario(rng)
        if parse_scenario(serialize_scenario(candidate)) != candidate:
            failures += 1
    ok = ok_preset and failures == 0
    assert _report(
        "8 (parse/serialize round trip)",
        ok,
        f"preset identity: {ok_preset}, randomised failures: {failures}/100",
    )
