"""Numeric vertex elimination on traced programs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .dual import dual_jacobian, fd_jacobian
from .elimination import _check_vertex, elimination_pairs
from .errors import CrossCountryError, ShapeError
from .graph import CompGraph, check_complete
from .ops import evaluate
from .program import Program, is_ref
from .sparsity import (
    DENSE,
    JacobianSpec,
    add_numeric,
    contract_numeric,
    materialize_dense,
)
from .trace import identity_copy, layout, program_edges


@dataclass
class NumericEdge:
    spec: JacobianSpec
    data: Optional[np.ndarray]

    def dense(self) -> np.ndarray:
        return materialize_dense(self.spec, self.data)

    def block(self) -> np.ndarray:
        """Jacobian block as an (out_rows*out_cols, in_rows*in_cols) matrix."""
        o = self.spec.out_shape[0] * self.spec.out_shape[1]
        i = self.spec.in_shape[0] * self.spec.in_shape[1]
        return self.dense().reshape(o, i)

    def promoted(self) -> "NumericEdge":
        """Same partial stored as a dense code-1 edge."""
        spec = JacobianSpec(DENSE, self.spec.in_shape, self.spec.out_shape)
        return NumericEdge(spec, self.dense())


def prepare_inputs(p: Program, x) -> list:
    """Coerce ``x`` into one float64 array per program input."""
    if isinstance(x, np.ndarray) and x.ndim == 1 or (
        isinstance(x, (list, tuple)) and all(np.ndim(v) == 0 for v in x)
    ):
        flat = np.asarray(x, dtype=float).ravel()
        sizes = [r * c for _, (r, c) in p.inputs]
        if flat.size != sum(sizes):
            raise ShapeError(f"expected {sum(sizes)} input scalars, got {flat.size}")
        out, k = [], 0
        for (_, shape), n in zip(p.inputs, sizes):
            out.append(flat[k : k + n].reshape(shape).copy())
            k += n
        return out
    if len(x) != p.n_inputs:
        raise ShapeError(f"expected {p.n_inputs} inputs, got {len(x)}")
    out = []
    for (name, shape), v in zip(p.inputs, x):
        arr = np.asarray(v, dtype=float)
        if arr.size != shape[0] * shape[1]:
            raise ShapeError(f"input {name}: expected shape {shape}, got {arr.shape}")
        out.append(arr.reshape(shape).copy())
    return out


def evaluate_values(p: Program, x) -> list:
    values = prepare_inputs(p, x)
    for op in p.ops:
        args = [values[o] if is_ref(o) else float(o) for o in op.operands]
        values.append(evaluate(op.kind, args, op.attrs))
    return values


def evaluate_primal(p: Program, x) -> list:
    values = evaluate_values(p, x)
    return [values[o] for o in p.outputs]


def numeric_graph(p: Program, x, forced_dense: bool = False) -> tuple[CompGraph, dict]:
    """Traced graph of ``p`` with the partial values at ``x`` on every edge."""
    values = evaluate_values(p, x)
    lay = layout(p)
    edges: dict = {}
    for src, dst, spec, data in program_edges(p, values):
        key = (lay.vertex_of[src], lay.vertex_of[dst])
        edge = NumericEdge(spec, data)
        if key in edges:
            old = edges[key]
            spec, data, _ = add_numeric(old.spec, old.data, spec, data)
            edge = NumericEdge(spec, data)
        edges[key] = edge
    for t in lay.copies:
        src = lay.vertex_of[p.outputs[t]]
        edges[(src, lay.output_vertices[t])] = NumericEdge(*identity_copy(p.shapes[p.outputs[t]]))
    if forced_dense:
        edges = {k: e.promoted() for k, e in edges.items()}
    g = CompGraph(lay.n_inputs, lay.n_intermediates, lay.n_outputs, lay.vertex_shapes)
    for (src, dst), e in sorted(edges.items()):
        g.add_edge(src, dst, e.spec)
    return g, edges


def eliminate_numeric(g: CompGraph, edges: dict, j: int) -> tuple[int, int]:
    """Numeric counterpart of ``eliminate_vertex``; returns executed (mults, adds)."""
    _check_vertex(g, j)
    mults = adds = 0
    for i, k in elimination_pairs(g, j):
        a, b = edges[(i, j)], edges[(j, k)]
        spec, data, m = contract_numeric(a.spec, a.data, b.spec, b.data)
        mults += m
        old = edges.get((i, k))
        if old is not None:
            spec, data, n_add = add_numeric(old.spec, old.data, spec, data)
            adds += n_add
        edges[(i, k)] = NumericEdge(spec, data)
        g._set_edge(i, k, spec)
    for i in list(g.preds[j]):
        g._remove_edge(i, j)
        del edges[(i, j)]
    for k in list(g.succs[j]):
        g._remove_edge(j, k)
        del edges[(j, k)]
    g.eliminated.add(j)
    return mults, adds


def run_order_numeric(g: CompGraph, edges: dict, order: Sequence[int]) -> int:
    """Eliminate ``order`` numerically; returns the executed multiplications."""
    check_complete(g, order)
    return sum(eliminate_numeric(g, edges, v)[0] for v in order)


def jacobian_blocks(p: Program, g: CompGraph, edges: dict) -> list:
    if not g.is_bipartite():
        raise CrossCountryError("graph still has intermediate edges")
    lay = layout(p)
    blocks = []
    for t, vo in enumerate(lay.output_vertices):
        o_shape = p.shapes[p.outputs[t]]
        row = []
        for s, (_, i_shape) in enumerate(p.inputs):
            e = edges.get((s, vo))
            if e is None:
                row.append(np.zeros((o_shape[0] * o_shape[1], i_shape[0] * i_shape[1])))
            else:
                row.append(e.block())
        blocks.append(row)
    return blocks


def accumulate_jacobian(p: Program, x, order: Sequence[int], forced_dense: bool = False) -> list:
    """Jacobian blocks ``J[output][input]`` obtained by eliminating ``order``."""
    g, edges = numeric_graph(p, x, forced_dense)
    run_order_numeric(g, edges, order)
    return jacobian_blocks(p, g, edges)


def reference_jacobian(p: Program, x, method: str = "dual") -> list:
    xs = prepare_inputs(p, x)
    if method == "dual":
        return dual_jacobian(p, xs)
    if method == "fd":
        return fd_jacobian(p, xs)
    raise CrossCountryError(f"unknown reference method {method!r}")


def max_relative_error(got: list, ref: list, floor: float = 1e-300) -> float:
    """Norm-wise relative error ``max|J - R| / max|R|`` over all blocks."""
    diff = max((np.max(np.abs(a - b)) for ra, rb in zip(got, ref) for a, b in zip(ra, rb) if a.size), default=0.0)
    scale = max((np.max(np.abs(b)) for rb in ref for b in rb if b.size), default=0.0)
    return float(diff / max(scale, floor)) if diff else 0.0


def probe_point(p: Program, spec: str = "random:0") -> list:
    """Input point named ``zero``, ``ones`` or ``random:SEED``."""
    if spec == "zero":
        return [np.zeros(s) for _, s in p.inputs]
    if spec == "ones":
        return [np.ones(s) for _, s in p.inputs]
    if spec.startswith("random:"):
        rng = np.random.default_rng(int(spec.split(":", 1)[1]))
        return [rng.uniform(-1.0, 1.0, size=s) for _, s in p.inputs]
    raise CrossCountryError(f"unknown point {spec!r}; use zero, ones or random:SEED")
