"""Search for cheap elimination orders."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .elimination import eliminate_vertex, order_cost
from .errors import InvalidConfig, TooLarge
from .game import scale_return
from .graph import CompGraph, check_complete
from .strategies import STRATEGIES, baseline_order

Prior = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass
class SearchResult:
    best_order: list
    best_cost: int
    evaluations: int
    provenance: str

    def as_dict(self) -> dict:
        return {
            "best_order": list(self.best_order),
            "best_cost": self.best_cost,
            "evaluations": self.evaluations,
            "provenance": self.provenance,
        }


# -- exhaustive ------------------------------------------------------------------


def _state_key(g: CompGraph) -> frozenset:
    return frozenset(g.edges.items())


def brute_force(g: CompGraph, limit: int = 9) -> SearchResult:
    """Exact minimum over all complete orders.

    Partial eliminations that lead to identical graphs are solved once, so
    the work is bounded by the number of distinct intermediate graphs rather
    than by n!.  Among optimal orders the lexicographically smallest wins.
    """
    remaining = g.remaining()
    if len(remaining) > limit:
        raise TooLarge(f"{len(remaining)} intermediates exceed the limit of {limit}")
    memo: dict = {}
    evals = 0

    def solve(h: CompGraph, rest: tuple) -> tuple:
        nonlocal evals
        if not rest:
            evals += 1
            return (0, ())
        key = (rest, _state_key(h))
        hit = memo.get(key)
        if hit is not None:
            return hit
        best = None
        for v in rest:
            child = h.copy()
            m, _ = eliminate_vertex(child, v)
            sub_cost, sub_order = solve(child, tuple(x for x in rest if x != v))
            cand = (m + sub_cost, (v,) + sub_order)
            if best is None or cand < best:
                best = cand
        memo[key] = best
        return best

    cost, order = solve(g.copy(), tuple(remaining))
    return SearchResult(list(order), cost, max(evals, 1), "brute_force")


# -- Monte-Carlo tree search ---------------------------------------------------------


class _Node:
    __slots__ = ("children", "priors", "visits", "value_sum")

    def __init__(self):
        self.children: Optional[dict] = None
        self.priors: dict = {}
        self.visits = 0
        self.value_sum = 0.0

    def mean(self) -> float:
        return self.value_sum / self.visits


def _uniform_priors(actions: Sequence[int]) -> dict:
    p = 1.0 / len(actions)
    return {a: p for a in actions}


def _prior_probs(prior: Optional[Prior], h: CompGraph, actions: Sequence[int]) -> dict:
    if prior is None:
        return _uniform_priors(actions)
    mask = np.zeros(h.n_intermediates, dtype=bool)
    idx = [a - h.n_inputs for a in actions]
    mask[idx] = True
    logits = np.asarray(prior(h.to_tensor(), mask), dtype=float)[idx]
    logits = logits - logits.max()
    w = np.exp(logits)
    w /= w.sum()
    return dict(zip(actions, w))


def _markowitz_completion(h: CompGraph, rest: list, rng) -> tuple[int, list]:
    cost = 0
    order = []
    rest = list(rest)
    while rest:
        v = min(rest, key=lambda j: (len(h.preds[j]) * len(h.succs[j]), j))
        cost += eliminate_vertex(h, v)[0]
        rest.remove(v)
        order.append(v)
    return cost, order


def _random_completion(h: CompGraph, rest: list, rng) -> tuple[int, list]:
    order = [rest[i] for i in rng.permutation(len(rest))]
    return sum(eliminate_vertex(h, v)[0] for v in order), order


ROLLOUTS = {"markowitz_completion": _markowitz_completion, "random": _random_completion}


def mcts_search(
    g: CompGraph,
    budget: int = 200,
    prior: Optional[Prior] = None,
    rollout: str = "markowitz_completion",
    seed: int = 0,
    c_puct: float = 1.5,
    incumbent: Optional[tuple] = None,
) -> SearchResult:
    """Sequential PUCT search committing one elimination per game step.

    ``prior(tensor, mask)`` may supply action logits over all intermediates;
    the default is uniform.  Leaves are valued by completing the episode with
    ``rollout`` and scaling the negated total cost.  ``incumbent`` is an
    optional ``(cost, order)`` pair the result never falls behind.
    """
    if budget < 1:
        raise InvalidConfig("budget must be at least 1")
    if rollout not in ROLLOUTS:
        raise InvalidConfig(f"unknown rollout {rollout!r}")
    complete = ROLLOUTS[rollout]
    rng = np.random.default_rng(seed)
    cur = g.copy()
    committed: list = []
    committed_cost = 0
    root = _Node()
    best_cost, best_order = math.inf, None
    lo, hi = math.inf, -math.inf
    evals = 0

    def normalise(v: float) -> float:
        return 0.5 if hi <= lo else (v - lo) / (hi - lo)

    while True:
        rest = cur.remaining()
        if not rest:
            break
        if len(rest) > 1:
            for _ in range(budget):
                h = cur.copy()
                node, path, cost, actions = root, [root], committed_cost, []
                left = list(rest)
                while node.children is not None and left:
                    sqrt_n = math.sqrt(node.visits)
                    best_a, best_s = None, -math.inf
                    for a in left:
                        child = node.children[a]
                        q = normalise(child.mean()) if child.visits else 1.0
                        s = q + c_puct * node.priors[a] * sqrt_n / (1 + child.visits)
                        if s > best_s:
                            best_a, best_s = a, s
                    cost += eliminate_vertex(h, best_a)[0]
                    actions.append(best_a)
                    left.remove(best_a)
                    node = node.children[best_a]
                    path.append(node)
                if left:
                    node.children = {a: _Node() for a in left}
                    node.priors = _prior_probs(prior, h, left)
                tail_cost, tail = complete(h, left, rng)
                total = cost + tail_cost
                evals += 1
                if total < best_cost:
                    best_cost, best_order = total, committed + actions + tail
                value = scale_return(-float(total))
                lo, hi = min(lo, value), max(hi, value)
                for n in path:
                    n.visits += 1
                    n.value_sum += value
            a = max(
                root.children,
                key=lambda k: (root.children[k].visits, root.children[k].value_sum / max(root.children[k].visits, 1), -k),
            )
            root = root.children[a]
        else:
            a = rest[0]
            root = _Node()
        committed_cost += eliminate_vertex(cur, a)[0]
        committed.append(a)

    provenance = "mcts"
    if best_order is None or committed_cost <= best_cost:
        best_cost, best_order = committed_cost, committed
    else:
        provenance = "mcts (best rollout)"
    if incumbent is not None and incumbent[0] < best_cost:
        best_cost, best_order = incumbent
        provenance = "incumbent"
    return SearchResult(list(best_order), int(best_cost), max(evals, 1), provenance)


# -- simulated annealing -----------------------------------------------------------


class _CostCache:
    def __init__(self, g: CompGraph):
        self.g = g
        self.memo: dict = {}
        self.evaluations = 0

    def __call__(self, order: Sequence[int]) -> int:
        key = tuple(order)
        c = self.memo.get(key)
        if c is None:
            c = order_cost(self.g, key)
            self.evaluations += 1
            if len(self.memo) < 200_000:
                self.memo[key] = c
        return c


def calibrate_temperature(g: CompGraph, order: Sequence[int], rng, samples: int = 100, cost=None) -> float:
    """Mean absolute cost change of ``samples`` random swaps around ``order``."""
    cost = cost or _CostCache(g)
    n = len(order)
    if n < 2:
        return 0.0
    base = cost(order)
    deltas = []
    for _ in range(samples):
        i, j = rng.choice(n, size=2, replace=False)
        cand = list(order)
        cand[i], cand[j] = cand[j], cand[i]
        deltas.append(abs(cost(cand) - base))
    return float(np.mean(deltas))


def simulated_annealing(
    g: CompGraph,
    init: Optional[Sequence[int]] = None,
    steps: int = 10_000,
    t0: Optional[float] = None,
    alpha: float = 0.97,
    seed: int = 0,
) -> SearchResult:
    """Swap-neighbourhood annealing; returns the best order ever visited.

    The temperature decays geometrically by ``alpha`` once per sweep of
    ``n_intermediates`` proposals.
    """
    rng = np.random.default_rng(seed)
    order = list(init) if init is not None else baseline_order(g, "markowitz")
    check_complete(g, order)
    cost = _CostCache(g)
    cur_cost = cost(order)
    best, best_cost = list(order), cur_cost
    n = len(order)
    if steps <= 0 or n < 2:
        return SearchResult(best, best_cost, cost.evaluations, "anneal")
    temp = calibrate_temperature(g, order, rng, cost=cost) if t0 is None else float(t0)
    for step in range(steps):
        i, j = rng.choice(n, size=2, replace=False)
        order[i], order[j] = order[j], order[i]
        c = cost(order)
        delta = c - cur_cost
        if delta <= 0 or (temp > 0 and rng.random() < math.exp(-delta / temp)):
            cur_cost = c
            if c < best_cost:
                best, best_cost = list(order), c
        else:
            order[i], order[j] = order[j], order[i]
        if (step + 1) % n == 0:
            temp *= alpha
    return SearchResult(best, best_cost, cost.evaluations, "anneal")


# -- portfolio ---------------------------------------------------------------------


@dataclass
class SearchConfig:
    mcts_budget: int = 200
    rollout: str = "markowitz_completion"
    anneal_steps: int = 10_000
    anneal_alpha: float = 0.97
    seed: int = 0
    methods: tuple = ("mcts", "anneal")
    prior: Optional[Prior] = field(default=None, repr=False, compare=False)

    def describe(self) -> str:
        return (
            f"mcts_budget={self.mcts_budget} rollout={self.rollout} anneal_steps={self.anneal_steps} "
            f"anneal_alpha={self.anneal_alpha} seed={self.seed} methods={','.join(self.methods)}"
        )


def portfolio_search(g: CompGraph, config: SearchConfig = SearchConfig()) -> SearchResult:
    """Best of the baselines and every configured searcher."""
    evals = 0
    best: Optional[tuple] = None
    for name in STRATEGIES:
        order = baseline_order(g, name)
        c = order_cost(g, order)
        evals += 1
        if best is None or c < best[0]:
            best = (c, order, name)
    for method in config.methods:
        if method == "mcts":
            r = mcts_search(
                g,
                budget=config.mcts_budget,
                prior=config.prior,
                rollout=config.rollout,
                seed=config.seed,
                incumbent=best[:2],
            )
        elif method == "anneal":
            r = simulated_annealing(
                g, init=best[1], steps=config.anneal_steps, alpha=config.anneal_alpha, seed=config.seed
            )
        else:
            raise InvalidConfig(f"unknown search method {method!r}")
        evals += r.evaluations
        if r.best_cost < best[0]:
            best = (r.best_cost, r.best_order, r.provenance)
    return SearchResult(list(best[1]), int(best[0]), evals, best[2])
