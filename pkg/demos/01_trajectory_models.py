"""The four warfighting-function model shapes, sampled and in expectation.

Each function holds its initial level until a random engagement at time
tau, then reacts in one of four ways.  This script draws a handful of
random realizations for each model type and overlays the closed-form mean
curve, reproducing the four characteristic shapes.

Run:  python demos/01_trajectory_models.py
Writes demos/output/trajectory_models.png
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from wfsaw import (
    DropDecay,
    EventTime,
    GradualDecay,
    RngSpec,
    SaturatingGrowth,
    StepDrop,
    analytic_mean,
    eval_trajectory,
    sample_realization,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

ev = EventTime(kappa=0.1)  # mean time to first engagement: 10 time units
models = [
    ("sudden drop to a fixed level", StepDrop(alpha=0.9)),
    ("drop, then decay", DropDecay(alpha=0.9, mu=0.3)),
    ("gradual decay", GradualDecay(alpha=0.9, mu=0.3)),
    ("growth towards an asymptote", SaturatingGrowth(alpha=0.5, mu=0.3, beta=0.95)),
]

grid = np.linspace(0.0, 50.0, 501)
gen = RngSpec(2).generator()

fig, axes = plt.subplots(2, 2, figsize=(10, 7), sharex=True, sharey=True)
for ax, (name, model) in zip(axes.ravel(), models):
    for _ in range(5):
        real = sample_realization(ev, gen)
        ax.plot(grid, [eval_trajectory(model, real, t) for t in grid],
                color="steelblue", alpha=0.45, lw=1)
    ax.plot(grid, analytic_mean(model, ev, grid), color="crimson", lw=2,
            label="mean level")
    ax.set_title(name, fontsize=10)
    ax.set_ylim(0, 1.02)
    ax.legend(loc="best", fontsize=8)

for ax in axes[1]:
    ax.set_xlabel("t")
for ax in axes[:, 0]:
    ax.set_ylabel("level")
fig.suptitle("Warfighting-function models: realizations and their means")
fig.tight_layout()
fig.savefig(OUT / "trajectory_models.png", dpi=120)
print(f"wrote {OUT / 'trajectory_models.png'}")

# the mean at t = 0 is always the initial level, and each shape has a
# known long-run limit
for name, model in models:
    at0 = analytic_mean(model, ev, 0.0)
    late = analytic_mean(model, ev, 400.0)
    print(f"{name:32s} mean(0) = {at0:.3f}   mean(400) = {late:.3f}")
