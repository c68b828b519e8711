"""Comparing two team designs under four importance rankings.

The builtin ``paper_table1`` scenario pits a technology-enhanced team
design (Team1) against a conventional one (Team2).  Which design looks
better depends strongly on how the six warfighting functions are ranked:
this script evaluates the expected-survivability curves under each of the
four shipped rankings, prints the dominance verdicts, and renders one SVG
chart per ranking (including the LIMIT upper bound).

Run:  python demos/02_team_comparison.py
"""

from pathlib import Path

from wfsaw import compare_teams, limit_curve, load_scenario
from wfsaw.svgplot import render_curve_svg
from wfsaw.tables import curve_table

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

scenario = load_scenario("paper_table1")
ev = scenario.event()
times = scenario.grid.times()

print(f"teams: {', '.join(t.label for t in scenario.teams)}   kappa = {scenario.kappa}")
print()

for ranking in scenario.rankings:
    weights = dict(zip("ICMFLP", ranking.weights.values))
    report = compare_teams(scenario.teams, ranking.weights, ev, times)
    pair = report.pairs[0]  # Team1 vs Team2

    curves = list(report.curves)
    curves.append(limit_curve(ranking.weights, ev, scenario.teams[0], times))
    svg_path = OUT / f"comparison_{ranking.name}.svg"
    svg_path.write_text(render_curve_svg(curve_table(curves), title=f"ranking {ranking.name}"))

    print(f"ranking {ranking.name}: {weights}")
    print(f"  verdict: {pair.verdict.value}   max gap {pair.max_abs_gap:.4f}")
    print(f"  chart:   {svg_path}")
    print()

print("Under the intelligence-led ranking r1 the enhanced design dominates;")
print("discounting its strengths (r3) flips the verdict, and r2 makes the")
print("two designs nearly indistinguishable. The ranking choice drives the")
print("assessment outcome.")
