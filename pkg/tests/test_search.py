import numpy as np
import pytest

from crosscountry.elimination import order_cost, run_order
from crosscountry.errors import InvalidConfig, TooLarge
from crosscountry.graph import CompGraph, check_complete
from crosscountry.search import (
    SearchConfig,
    brute_force,
    mcts_search,
    portfolio_search,
    simulated_annealing,
)
from crosscountry.randgen import random_program
from crosscountry.strategies import STRATEGIES, baseline_order
from crosscountry.trace import trace

from conftest import SCALAR_DENSE, V1, V2, worked_graph, random_graph


def chain(n: int) -> CompGraph:
    g = CompGraph(1, n, 1)
    for v in range(n + 1):
        g.add_edge(v, v + 1, SCALAR_DENSE)
    return g


def test_brute_force_worked():
    r = brute_force(worked_graph())
    assert r.best_cost == 6 and r.best_order == [V2, V1]
    assert r.provenance == "brute_force"


def test_brute_force_single_vertex():
    g = CompGraph(1, 1, 2)
    g.add_edge(0, 1, SCALAR_DENSE).add_edge(1, 2, SCALAR_DENSE).add_edge(1, 3, SCALAR_DENSE)
    r = brute_force(g)
    assert r.best_order == [1] and r.best_cost == 2


def test_brute_force_limit():
    with pytest.raises(TooLarge):
        brute_force(chain(12), limit=9)


@pytest.mark.parametrize("seed", range(12))
def test_brute_force_matches_enumeration(seed):
    import itertools

    g = trace(random_program(seed, n_in=2, n_out=2, n_intermediates=3 + seed % 4, vector=seed % 2 == 1))
    costs = {o: order_cost(g, o) for o in itertools.permutations(g.intermediates)}
    best = min(costs.values())
    r = brute_force(g)
    assert r.best_cost == best
    assert tuple(r.best_order) == min(o for o, c in costs.items() if c == best)


@pytest.mark.parametrize("budget", [2, 5, 50])
def test_mcts_worked(budget):
    r = mcts_search(worked_graph(), budget=budget)
    assert r.best_cost == 6


def test_mcts_budget_one_random_rollout():
    g = random_graph(4)
    r = mcts_search(g, budget=1, rollout="random", seed=3)
    check_complete(g, r.best_order)
    assert r.best_cost >= brute_force(g).best_cost


def test_mcts_config_errors():
    with pytest.raises(InvalidConfig):
        mcts_search(worked_graph(), budget=0)
    with pytest.raises(InvalidConfig):
        mcts_search(worked_graph(), rollout="greedy")


def test_mcts_accepts_prior():
    calls = []

    def prior(tensor, mask):
        calls.append(mask.copy())
        return np.where(mask, 0.0, -1e9)

    r = mcts_search(worked_graph(), budget=4, prior=prior)
    assert calls and r.best_cost == 6


def test_annealing_zero_steps():
    g = worked_graph()
    r = simulated_annealing(g, init=[V1, V2], steps=0)
    assert r.best_order == [V1, V2] and r.best_cost == 8


def test_annealing_worked():
    r = simulated_annealing(worked_graph(), init=[V1, V2], steps=100, t0=10.0, alpha=0.95, seed=0)
    assert r.best_cost == 6


@pytest.mark.parametrize("seed", range(8))
def test_annealing_never_worse_than_init(seed):
    g = random_graph(seed, vector=True)
    init = baseline_order(g, "forward")
    r = simulated_annealing(g, init=init, steps=300, seed=seed)
    assert r.best_cost <= order_cost(g, init)
    assert run_order(g.copy(), r.best_order).total_mults == r.best_cost


def test_portfolio_worked():
    assert portfolio_search(worked_graph()).best_cost == 6


@pytest.mark.parametrize("seed", range(8))
def test_portfolio_dominates_and_is_deterministic(seed):
    g = random_graph(seed, vector=seed % 2 == 0)
    cfg = SearchConfig(mcts_budget=20, anneal_steps=500, seed=seed)
    r = portfolio_search(g, cfg)
    assert r.best_cost <= min(order_cost(g, baseline_order(g, s)) for s in STRATEGIES)
    assert run_order(g.copy(), r.best_order).total_mults == r.best_cost
    assert portfolio_search(g, cfg) == r
    if g.n_intermediates <= 9:
        assert r.best_cost >= brute_force(g).best_cost


def test_portfolio_unknown_method():
    with pytest.raises(InvalidConfig):
        portfolio_search(worked_graph(), SearchConfig(methods=("genetic",)))


def test_search_result_dict():
    d = brute_force(worked_graph()).as_dict()
    assert d == {"best_order": [V2, V1], "best_cost": 6, "evaluations": d["evaluations"], "provenance": "brute_force"}
