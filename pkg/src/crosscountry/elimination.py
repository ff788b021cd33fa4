"""Vertex elimination with multiplication-cost accounting."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import AlreadyEliminated, NotIntermediate
from .graph import CompGraph, check_complete
from .sparsity import contract, merge_add, merge_adds


@dataclass
class CostReport:
    per_step: list = field(default_factory=list)  # (vertex, mults, adds)
    order: list = field(default_factory=list)

    @property
    def total_mults(self) -> int:
        return sum(m for _, m, _ in self.per_step)

    @property
    def total_adds(self) -> int:
        return sum(a for _, _, a in self.per_step)

    def format(self, n_inputs: int = 0) -> str:
        lines = [f"{'step':>5} {'vertex':>7} {'mults':>10} {'adds':>10}"]
        for n, (v, m, a) in enumerate(self.per_step, 1):
            lines.append(f"{n:>5} {v - n_inputs + 1:>7} {m:>10} {a:>10}")
        lines.append(f"{'total':>5} {'':>7} {self.total_mults:>10} {self.total_adds:>10}")
        return "\n".join(lines) + "\n"


def _check_vertex(g: CompGraph, j: int) -> None:
    if not g.is_intermediate(j):
        raise NotIntermediate(f"vertex {j} is not an intermediate")
    if j in g.eliminated:
        raise AlreadyEliminated(f"vertex {j} is already eliminated")


def elimination_pairs(g: CompGraph, j: int) -> list[tuple[int, int]]:
    """(pred, succ) pairs touched when eliminating ``j``, in canonical order."""
    return [(i, k) for i in sorted(g.preds[j]) for k in sorted(g.succs[j])]


def eliminate_vertex(g: CompGraph, j: int) -> tuple[int, int]:
    """Eliminate intermediate ``j`` in place; returns ``(mults, adds)``."""
    _check_vertex(g, j)
    mults = adds = 0
    edges = g.edges
    for i, k in elimination_pairs(g, j):
        spec, m = contract(edges[(i, j)], edges[(j, k)])
        mults += m
        old = edges.get((i, k))
        if old is not None:
            spec = merge_add(old, spec)
            adds += merge_adds(spec)
        g._set_edge(i, k, spec)
    for i in list(g.preds[j]):
        g._remove_edge(i, j)
    for k in list(g.succs[j]):
        g._remove_edge(j, k)
    g.eliminated.add(j)
    return mults, adds


def run_order(g: CompGraph, order: Sequence[int]) -> CostReport:
    """Eliminate every vertex of the complete ``order`` in place."""
    check_complete(g, order)
    report = CostReport(order=list(order))
    for v in order:
        m, a = eliminate_vertex(g, v)
        report.per_step.append((v, m, a))
    return report


def order_cost(g: CompGraph, order: Sequence[int]) -> int:
    """Total multiplications of ``order`` evaluated on a scratch copy."""
    return run_order(g.copy(), order).total_mults


def markowitz_degree(g: CompGraph, j: int) -> int:
    _check_vertex(g, j)
    return len(g.preds[j]) * len(g.succs[j])
