import random

import pytest

from wfsaw import (
    DropDecay,
    EventTime,
    GradualDecay,
    GridSpec,
    McSettings,
    Ranking,
    SaturatingGrowth,
    Scenario,
    StepDrop,
    TeamProfile,
    WF_ORDER,
    WeightVector,
    WfFunction,
)

I, C, M, F, L, P = WfFunction


@pytest.fixture
def event():
    return EventTime(0.1)


@pytest.fixture
def team1():
    # study parameterisation, written out independently of the preset
    return TeamProfile(
        label="Team1",
        models={
            I: SaturatingGrowth(alpha=0.9, mu=2.0, beta=1.0),
            C: StepDrop(alpha=0.9),
            M: StepDrop(alpha=0.5),
            F: DropDecay(alpha=0.9, mu=2.0),
            L: GradualDecay(alpha=0.5, mu=2.0),
            P: DropDecay(alpha=0.5, mu=0.5),
        },
    )


@pytest.fixture
def team2():
    return TeamProfile(
        label="Team2",
        models={
            I: SaturatingGrowth(alpha=0.5, mu=0.5, beta=0.8),
            C: StepDrop(alpha=0.7),
            M: StepDrop(alpha=0.7),
            F: DropDecay(alpha=0.5, mu=0.5),
            L: GradualDecay(alpha=0.7, mu=1.0),
            P: DropDecay(alpha=0.5, mu=2.0),
        },
    )


@pytest.fixture
def r1():
    return WeightVector((6, 4, 3, 5, 1, 2))


@pytest.fixture
def r2():
    return WeightVector((1, 2, 4, 3, 6, 5))


@pytest.fixture
def r3():
    return WeightVector((1, 1, 6, 1, 6, 1))


@pytest.fixture
def r4():
    return WeightVector((6, 6, 1, 6, 1, 1))


def make_random_scenario(rng: random.Random) -> Scenario:
    """A structurally valid scenario with randomised contents."""

    def model():
        kind = rng.randrange(4)
        alpha = rng.uniform(0.0, 1.0)
        mu = rng.uniform(0.0, 5.0)
        if kind == 0:
            return StepDrop(alpha)
        if kind == 1:
            return DropDecay(alpha, mu)
        if kind == 2:
            return GradualDecay(alpha, mu)
        alpha = rng.uniform(0.0, 0.9)
        beta = rng.uniform(alpha + 0.01, 1.0)
        return SaturatingGrowth(alpha, mu, beta)

    teams = tuple(
        TeamProfile(label=f"Team{i + 1}", models={fn: model() for fn in WF_ORDER})
        for i in range(rng.randint(1, 3))
    )
    rankings = []
    for i in range(rng.randint(1, 3)):
        vals = [rng.uniform(0.0, 10.0) for _ in WF_ORDER]
        vals[rng.randrange(len(vals))] = rng.uniform(0.5, 10.0)
        rankings.append(Ranking(name=f"w{i}", weights=WeightVector(tuple(vals))))
    start = rng.uniform(0.0, 5.0)
    grid = GridSpec(start=start, end=start + rng.uniform(1.0, 50.0), step=rng.uniform(0.1, 2.0))
    mc = None
    if rng.random() < 0.5:
        mc = McSettings(n=rng.randint(2, 10**6), seed=rng.randrange(2**64))
    return Scenario(
        kappa=rng.uniform(0.01, 5.0),
        teams=teams,
        rankings=tuple(rankings),
        grid=grid,
        mc=mc,
    )


@pytest.fixture
def scenario_factory():
    return make_random_scenario
