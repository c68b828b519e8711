"""How sensitive is the team comparison to the importance weights?

Instead of hand-picking rankings, draw weight vectors uniformly from the
6-simplex and record which team dominates under each draw.  The dominance
fractions summarise how robust a design advantage is across the whole
space of importance assignments.

Run:  python demos/04_weight_sensitivity.py
"""

import numpy as np

from wfsaw import Dominance, RngSpec, WeightVector, compare_teams, load_scenario

scenario = load_scenario("paper_table1")
ev = scenario.event()
times = scenario.grid.times()
team1, team2 = scenario.teams

count = 500
gen = RngSpec(123).generator()
tally = {verdict: 0 for verdict in Dominance}
extremes = []

for i in range(count):
    weights = WeightVector(tuple(gen.dirichlet(np.ones(6))))
    report = compare_teams([team1, team2], weights, ev, times)
    pair = report.pairs[0]
    tally[pair.verdict] += 1
    extremes.append((pair.max_abs_gap, pair.verdict, weights))

print(f"{count} weight vectors drawn uniformly from the simplex:")
for verdict, hits in tally.items():
    print(f"  {verdict.value:17s} {hits / count:6.1%}")

extremes.sort(key=lambda row: row[0], reverse=True)
print()
print("largest observed gaps:")
for gap, verdict, weights in extremes[:3]:
    pretty = ", ".join(f"{k}={v:.2f}" for k, v in zip("ICMFLP", weights.values))
    print(f"  gap {gap:.3f}  {verdict.value:17s}  ({pretty})")

equal = WeightVector((1, 1, 1, 1, 1, 1))
pair = compare_teams([team1, team2], equal, ev, times).pairs[0]
print()
print(f"equal weights: {pair.verdict.value} with max gap {pair.max_abs_gap:.4f}")
