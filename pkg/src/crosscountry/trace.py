"""Turn a :class:`Program` into a :class:`CompGraph`."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import CompGraph
from .ops import evaluate, local_partials
from .program import Program, is_ref
from .sparsity import COPY, JacobianSpec, merge_add


@dataclass
class Layout:
    """Where every program value lives in the traced graph.

    ``vertex_of[v]`` is the vertex holding value ``v`` (``None`` for values
    that only reach the graph through output copies).  ``output_vertices[t]``
    is the vertex of output position ``t`` and ``copies`` lists output
    positions realised as identity copies of ``output_values[t]``.
    """

    n_inputs: int
    n_intermediates: int
    n_outputs: int
    vertex_of: list
    output_vertices: list
    copies: list
    vertex_shapes: list


def layout(p: Program) -> Layout:
    n_in = p.n_inputs
    consumed = set()
    for op in p.ops:
        consumed.update(op.value_operands())
    direct: dict = {}  # output position -> op value that becomes the output vertex
    for t, v in enumerate(p.outputs):
        if v >= n_in and v not in consumed and p.outputs.count(v) == 1:
            direct[t] = v
    direct_values = set(direct.values())
    mids = [v for v in range(n_in, p.n_values) if v not in direct_values]
    n_mid = len(mids)
    n_out = len(p.outputs)
    vertex_of: list = [None] * p.n_values
    for v in range(n_in):
        vertex_of[v] = v
    for k, v in enumerate(mids):
        vertex_of[v] = n_in + k
    output_vertices = []
    copies = []
    for t, v in enumerate(p.outputs):
        vid = n_in + n_mid + t
        output_vertices.append(vid)
        if t in direct:
            vertex_of[v] = vid
        else:
            copies.append(t)
    shapes = [None] * (n_in + n_mid + n_out)
    for v, vid in enumerate(vertex_of):
        if vid is not None:
            shapes[vid] = p.shapes[v]
    for t in copies:
        shapes[output_vertices[t]] = p.shapes[p.outputs[t]]
    return Layout(n_in, n_mid, n_out, vertex_of, output_vertices, copies, shapes)


def identity_copy(shape) -> tuple:
    n = shape[0] * shape[1]
    return JacobianSpec(COPY, tuple(shape), tuple(shape)), np.arange(n, dtype=np.int64).reshape(shape)


def program_edges(p: Program, values: list):
    """Yield ``(src_value, dst_value, spec, data)`` for every op operand.

    Repeated operands of one op are yielded once per occurrence; callers
    merge them.
    """
    n_in = p.n_inputs
    for t, op in enumerate(p.ops):
        vid = n_in + t
        args = [values[o] if is_ref(o) else float(o) for o in op.operands]
        for o, edge in zip(op.operands, local_partials(op.kind, args, op.attrs, values[vid])):
            if edge is not None:
                yield o, vid, edge[0], edge[1]


def structural_edges(p: Program):
    """Edge specs of every op operand, derived at a benign point.

    Codes depend only on op kinds and operand shapes, so evaluating each op
    on arrays filled with 0.5 (inside every op's domain) is enough.
    """
    n_in = p.n_inputs
    for t, op in enumerate(p.ops):
        vid = n_in + t
        args = [np.full(p.shapes[o], 0.5) if is_ref(o) else float(o) for o in op.operands]
        y = evaluate(op.kind, args, op.attrs)
        for o, edge in zip(op.operands, local_partials(op.kind, args, op.attrs, y)):
            if edge is not None:
                yield o, vid, edge[0]


def trace(p: Program) -> CompGraph:
    """Computational graph of ``p`` with one vertex per op output."""
    lay = layout(p)
    g = CompGraph(lay.n_inputs, lay.n_intermediates, lay.n_outputs, lay.vertex_shapes)
    specs: dict = {}
    for src, dst, spec in structural_edges(p):
        key = (lay.vertex_of[src], lay.vertex_of[dst])
        specs[key] = merge_add(specs[key], spec) if key in specs else spec
    for t in lay.copies:
        src = lay.vertex_of[p.outputs[t]]
        specs[(src, lay.output_vertices[t])] = identity_copy(p.shapes[p.outputs[t]])[0]
    for (src, dst), spec in sorted(specs.items()):
        g.add_edge(src, dst, spec)
    return g
