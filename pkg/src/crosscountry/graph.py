"""Computational graph with structured edge Jacobians.

Vertices are numbered in three contiguous blocks: inputs, intermediates,
outputs.  Each edge ``(src, dst)`` stores the :class:`JacobianSpec` of the
local partial ``d dst / d src``.
"""

from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    AlreadyEliminated,
    DuplicateEdge,
    DuplicateVertex,
    GraphError,
    IllegalEndpoint,
    IncompleteOrder,
    NotIntermediate,
    ShapeMismatch,
    VertexEliminated,
)
from .sparsity import JacobianSpec

__all__ = ["CompGraph", "JacobianSpec", "read_graph", "write_graph", "read_order", "write_order"]

SCALAR = (1, 1)


class CompGraph:
    def __init__(
        self,
        n_inputs: int,
        n_intermediates: int,
        n_outputs: int,
        vertex_shapes: Optional[Sequence] = None,
    ):
        if min(n_inputs, n_intermediates, n_outputs) < 0:
            raise GraphError("vertex counts must be non-negative")
        self.n_inputs = n_inputs
        self.n_intermediates = n_intermediates
        self.n_outputs = n_outputs
        n = self.n_vertices
        if vertex_shapes is None:
            self.vertex_shapes = [SCALAR] * n
        else:
            if len(vertex_shapes) != n:
                raise ShapeMismatch(f"expected {n} vertex shapes, got {len(vertex_shapes)}")
            self.vertex_shapes = [tuple(int(d) for d in s) for s in vertex_shapes]
        self.edges: dict[tuple[int, int], JacobianSpec] = {}
        self.preds: list[set] = [set() for _ in range(n)]
        self.succs: list[set] = [set() for _ in range(n)]
        self.eliminated: set[int] = set()

    # -- vertex classes -----------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return self.n_inputs + self.n_intermediates + self.n_outputs

    @property
    def intermediates(self) -> range:
        return range(self.n_inputs, self.n_inputs + self.n_intermediates)

    @property
    def outputs(self) -> range:
        return range(self.n_inputs + self.n_intermediates, self.n_vertices)

    def is_input(self, v: int) -> bool:
        return 0 <= v < self.n_inputs

    def is_intermediate(self, v: int) -> bool:
        return self.n_inputs <= v < self.n_inputs + self.n_intermediates

    def is_output(self, v: int) -> bool:
        return self.n_inputs + self.n_intermediates <= v < self.n_vertices

    # -- edges --------------------------------------------------------------

    def add_edge(self, src: int, dst: int, spec: JacobianSpec) -> "CompGraph":
        n = self.n_vertices
        if not (0 <= src < n and 0 <= dst < n):
            raise IllegalEndpoint(f"vertex out of range in edge {src}->{dst}")
        if src >= dst:
            raise IllegalEndpoint(f"edge {src}->{dst} violates topological numbering")
        if self.is_output(src):
            raise IllegalEndpoint(f"edge {src}->{dst} leaves an output vertex")
        if self.is_input(dst):
            raise IllegalEndpoint(f"edge {src}->{dst} enters an input vertex")
        if src in self.eliminated or dst in self.eliminated:
            raise VertexEliminated(f"edge {src}->{dst} touches an eliminated vertex")
        if (src, dst) in self.edges:
            raise DuplicateEdge(f"edge {src}->{dst} already present")
        if tuple(spec.in_shape) != self.vertex_shapes[src]:
            raise ShapeMismatch(
                f"edge {src}->{dst}: in_shape {spec.in_shape} != vertex shape {self.vertex_shapes[src]}"
            )
        if tuple(spec.out_shape) != self.vertex_shapes[dst]:
            raise ShapeMismatch(
                f"edge {src}->{dst}: out_shape {spec.out_shape} != vertex shape {self.vertex_shapes[dst]}"
            )
        self._set_edge(src, dst, spec)
        return self

    def _set_edge(self, src: int, dst: int, spec: JacobianSpec) -> None:
        self.edges[(src, dst)] = spec
        self.succs[src].add(dst)
        self.preds[dst].add(src)

    def _remove_edge(self, src: int, dst: int) -> None:
        del self.edges[(src, dst)]
        self.succs[src].discard(dst)
        self.preds[dst].discard(src)

    def edge(self, src: int, dst: int) -> Optional[JacobianSpec]:
        return self.edges.get((src, dst))

    def neighbors(self, v: int) -> tuple[set, set]:
        if v in self.eliminated:
            raise VertexEliminated(f"vertex {v} is eliminated")
        return set(self.preds[v]), set(self.succs[v])

    def is_bipartite(self) -> bool:
        return all(not self.preds[v] and not self.succs[v] for v in self.intermediates)

    @property
    def is_fresh(self) -> bool:
        return not self.eliminated

    def remaining(self) -> list[int]:
        return [v for v in self.intermediates if v not in self.eliminated]

    def copy(self) -> "CompGraph":
        g = CompGraph.__new__(CompGraph)
        g.n_inputs = self.n_inputs
        g.n_intermediates = self.n_intermediates
        g.n_outputs = self.n_outputs
        g.vertex_shapes = list(self.vertex_shapes)
        g.edges = dict(self.edges)
        g.preds = [set(s) for s in self.preds]
        g.succs = [set(s) for s in self.succs]
        g.eliminated = set(self.eliminated)
        return g

    def structure(self) -> tuple:
        """Hashable summary used for equality and reproducibility hashes."""
        return (
            self.n_inputs,
            self.n_intermediates,
            self.n_outputs,
            tuple(self.vertex_shapes),
            tuple(sorted((k, v.as_tuple()) for k, v in self.edges.items())),
            tuple(sorted(self.eliminated)),
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, CompGraph) and self.structure() == other.structure()

    def __repr__(self) -> str:
        return (
            f"CompGraph(in={self.n_inputs}, mid={self.n_intermediates}, "
            f"out={self.n_outputs}, edges={len(self.edges)})"
        )

    def digest(self) -> str:
        return hashlib.sha256(format_graph(self).encode()).hexdigest()[:16]

    # -- tensor encoding ----------------------------------------------------

    def to_tensor(self) -> np.ndarray:
        rows = self.n_inputs + self.n_intermediates
        cols = self.n_intermediates + self.n_outputs
        t = np.zeros((rows, cols, 5), dtype=np.int64)
        for (src, dst), spec in self.edges.items():
            t[src, dst - self.n_inputs] = spec.as_tuple()
        return t

    @classmethod
    def from_tensor(
        cls,
        tensor: np.ndarray,
        n_inputs: int,
        eliminated: Iterable[int] = (),
        vertex_shapes: Optional[Sequence] = None,
    ) -> "CompGraph":
        rows, cols, _ = tensor.shape
        n_mid = rows - n_inputs
        n_out = cols - n_mid
        if n_mid < 0 or n_out < 0:
            raise GraphError(f"tensor shape {tensor.shape} inconsistent with {n_inputs} inputs")
        g = cls(n_inputs, n_mid, n_out)
        shapes: list = [None] * g.n_vertices
        for src, c in zip(*np.nonzero(tensor[:, :, 0])):
            code, ir, ic, orr, oc = (int(x) for x in tensor[src, c])
            shapes[src] = (ir, ic)
            shapes[n_inputs + c] = (orr, oc)
        if vertex_shapes is not None:
            g.vertex_shapes = [tuple(s) for s in vertex_shapes]
        else:
            g.vertex_shapes = [s if s is not None else SCALAR for s in shapes]
        for src, c in zip(*np.nonzero(tensor[:, :, 0])):
            code, ir, ic, orr, oc = (int(x) for x in tensor[src, c])
            g.add_edge(int(src), n_inputs + int(c), JacobianSpec(code, (ir, ic), (orr, oc)))
        g.eliminated = set(eliminated)
        return g


# -- text formats -------------------------------------------------------------


def format_graph(g: CompGraph) -> str:
    lines = [f"{g.n_inputs} {g.n_intermediates} {g.n_outputs}"]
    for (src, dst), spec in sorted(g.edges.items()):
        lines.append(f"{src} {dst} " + " ".join(str(x) for x in spec.as_tuple()))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> CompGraph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphError("empty graph file")
    try:
        n_in, n_mid, n_out = (int(x) for x in rows[0])
        edges = [tuple(int(x) for x in r) for r in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed graph file: {exc}") from None
    g = CompGraph(n_in, n_mid, n_out)
    shapes: list = [None] * g.n_vertices
    for e in edges:
        if len(e) != 7:
            raise GraphError(f"edge line needs 7 fields, got {len(e)}")
        src, dst, _, ir, ic, orr, oc = e
        for v, s in ((src, (ir, ic)), (dst, (orr, oc))):
            if not 0 <= v < g.n_vertices:
                raise IllegalEndpoint(f"vertex {v} out of range")
            if shapes[v] is not None and shapes[v] != s:
                raise ShapeMismatch(f"vertex {v} used with shapes {shapes[v]} and {s}")
            shapes[v] = s
    g.vertex_shapes = [s if s is not None else SCALAR for s in shapes]
    for src, dst, code, ir, ic, orr, oc in edges:
        g.add_edge(src, dst, JacobianSpec(code, (ir, ic), (orr, oc)))
    return g


def write_graph(g: CompGraph, path) -> None:
    Path(path).write_text(format_graph(g))


def read_graph(path) -> CompGraph:
    return parse_graph(Path(path).read_text())


def format_order(g: CompGraph, order: Sequence[int]) -> str:
    """Serialise an order with 1-based intermediate numbering."""
    for v in order:
        if not g.is_intermediate(v):
            raise NotIntermediate(f"vertex {v} is not an intermediate")
    return " ".join(str(v - g.n_inputs + 1) for v in order) + "\n"


def parse_order(g: CompGraph, text: str) -> list[int]:
    order = []
    for tok in text.split():
        k = int(tok)
        if not 1 <= k <= g.n_intermediates:
            raise NotIntermediate(f"order entry {k} outside 1..{g.n_intermediates}")
        order.append(g.n_inputs + k - 1)
    return order


def write_order(g: CompGraph, order: Sequence[int], path) -> None:
    Path(path).write_text(format_order(g, order))


def read_order(g: CompGraph, path) -> list[int]:
    return parse_order(g, Path(path).read_text())


def check_complete(g: CompGraph, order: Sequence[int]) -> None:
    """Raise unless ``order`` is a permutation of the remaining intermediates."""
    seen = set()
    for v in order:
        if v in seen:
            raise DuplicateVertex(f"vertex {v} appears twice in the order")
        if not g.is_intermediate(v):
            raise NotIntermediate(f"vertex {v} is not an intermediate")
        if v in g.eliminated:
            raise AlreadyEliminated(f"vertex {v} is already eliminated")
        seen.add(v)
    missing = set(g.remaining()) - seen
    if missing or len(seen) != len(g.remaining()):
        raise IncompleteOrder(f"order misses vertices {sorted(missing)}")
