"""Baseline elimination orders."""

from __future__ import annotations

from .elimination import eliminate_vertex
from .errors import InvalidConfig
from .graph import CompGraph

STRATEGIES = ("forward", "reverse", "markowitz")
_ALIASES = {"min_markowitz": "markowitz"}


def forward_order(g: CompGraph) -> list[int]:
    return g.remaining()


def reverse_order(g: CompGraph) -> list[int]:
    return g.remaining()[::-1]


def markowitz_order(g: CompGraph) -> list[int]:
    """Greedy minimal Markowitz degree, recomputed after every elimination.

    Ties go to the lowest vertex id.
    """
    h = g.copy()
    order = []
    remaining = h.remaining()
    while remaining:
        v = min(remaining, key=lambda j: (len(h.preds[j]) * len(h.succs[j]), j))
        eliminate_vertex(h, v)
        remaining.remove(v)
        order.append(v)
    return order


def baseline_order(g: CompGraph, strategy: str) -> list[int]:
    strategy = _ALIASES.get(strategy, strategy)
    if strategy == "forward":
        return forward_order(g)
    if strategy == "reverse":
        return reverse_order(g)
    if strategy == "markowitz":
        return markowitz_order(g)
    raise InvalidConfig(f"unknown strategy {strategy!r}; choose from {', '.join(STRATEGIES)}")
