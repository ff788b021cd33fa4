"""Reference Jacobians: multi-tangent dual numbers and central differences.

These code paths share nothing with the graph machinery beyond primal op
evaluation, so they serve as an independent oracle.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError, UnsupportedOp
from .ops import evaluate
from .program import Program, is_ref

_TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)
_erf = np.vectorize(math.erf, otypes=[float])


class Dual:
    """Value ``val`` of shape (r, c) with tangents ``tan`` of shape (r, c, n)."""

    __slots__ = ("val", "tan")

    def __init__(self, val, tan):
        self.val = np.asarray(val, dtype=float)
        self.tan = np.asarray(tan, dtype=float)

    @classmethod
    def constant(cls, c, n):
        return cls(np.full((1, 1), float(c)), np.zeros((1, 1, n)))

    def chain(self, dval, new_val):
        """Elementwise map with derivative ``dval``."""
        return Dual(new_val, dval[..., None] * self.tan)


def _ew_tan(a: Dual, b: Dual, da, db):
    return da[..., None] * a.tan + db[..., None] * b.tan


def _apply(kind: str, xs: list, attrs: dict) -> Dual:
    a = xs[0]
    x = a.val
    if kind == "neg":
        return Dual(-x, -a.tan)
    if kind == "scale_const":
        return Dual(attrs["c"] * x, attrs["c"] * a.tan)
    if kind == "sin":
        return a.chain(np.cos(x), np.sin(x))
    if kind == "cos":
        return a.chain(-np.sin(x), np.cos(x))
    if kind == "exp":
        e = np.exp(x)
        return a.chain(e, e)
    if kind == "log":
        if np.any(x <= 0):
            raise DomainError("log of a non-positive value")
        return a.chain(1.0 / x, np.log(x))
    if kind == "sqrt":
        if np.any(x <= 0):
            raise DomainError("sqrt at or below zero")
        r = np.sqrt(x)
        return a.chain(0.5 / r, r)
    if kind == "tanh":
        t = np.tanh(x)
        return a.chain(1.0 - t * t, t)
    if kind == "arctan":
        return a.chain(1.0 / (1.0 + x * x), np.arctan(x))
    if kind == "abs":
        return a.chain(np.sign(x), np.abs(x))
    if kind == "erf":
        return a.chain(_TWO_OVER_SQRT_PI * np.exp(-x * x), _erf(x))
    if kind == "pow_const":
        p = attrs["p"]
        val = evaluate("pow_const", [x], attrs)
        d = p * np.power(x, p - 1) if p != 0 else np.zeros_like(x)
        return a.chain(d, val)
    if kind in ("add", "sub", "mul", "div", "arctan2"):
        b = xs[1]
        u, v = a.val, b.val
        if kind == "add":
            return Dual(u + v, a.tan + b.tan)
        if kind == "sub":
            return Dual(u - v, a.tan - b.tan)
        if kind == "mul":
            return Dual(u * v, _ew_tan(a, b, v, u))
        if kind == "div":
            if np.any(v == 0):
                raise DomainError("division by zero")
            q = u / v
            return Dual(q, _ew_tan(a, b, 1.0 / v, -q / v))
        r2 = u * u + v * v
        if np.any(r2 == 0):
            raise DomainError("arctan2 at the origin")
        return Dual(np.arctan2(u, v), _ew_tan(a, b, v / r2, -u / r2))
    if kind in ("matvec", "matmul"):
        b = xs[1]
        tan = np.einsum("ikn,kj->ijn", a.tan, b.val) + np.einsum("ik,kjn->ijn", a.val, b.tan)
        return Dual(a.val @ b.val, tan)
    if kind == "dot":
        b = xs[1]
        val = np.sum(a.val * b.val).reshape(1, 1)
        tan = np.einsum("ikn,ik->n", a.tan, b.val) + np.einsum("ik,ikn->n", a.val, b.tan)
        return Dual(val, tan.reshape(1, 1, -1))
    if kind == "sum_reduce":
        return Dual(x.sum().reshape(1, 1), a.tan.sum(axis=(0, 1)).reshape(1, 1, -1))
    if kind == "transpose":
        return Dual(x.T, a.tan.transpose(1, 0, 2))
    if kind == "slice":
        r0, r1 = attrs.get("rows", (0, x.shape[0]))
        c0, c1 = attrs.get("cols", (0, x.shape[1]))
        return Dual(x[r0:r1, c0:c1], a.tan[r0:r1, c0:c1])
    if kind == "concat":
        axis = attrs.get("axis", 0)
        return Dual(
            np.concatenate([d.val for d in xs], axis=axis),
            np.concatenate([d.tan for d in xs], axis=axis),
        )
    raise UnsupportedOp(kind)


def _input_offsets(p: Program) -> list:
    offsets, n = [], 0
    for _, (r, c) in p.inputs:
        offsets.append(n)
        n += r * c
    return offsets + [n]


def _blocks_from_tangents(p: Program, outs: list) -> list:
    offsets = _input_offsets(p)
    blocks = []
    for d in outs:
        r, c, n = d.tan.shape
        flat = d.tan.reshape(r * c, n)
        blocks.append([flat[:, offsets[s] : offsets[s + 1]].copy() for s in range(p.n_inputs)])
    return blocks


def dual_jacobian(p: Program, xs: list) -> list:
    offsets = _input_offsets(p)
    n = offsets[-1]
    values = []
    for s, x in enumerate(xs):
        tan = np.zeros((*x.shape, n))
        k = offsets[s]
        for e in range(x.size):
            tan[e // x.shape[1], e % x.shape[1], k + e] = 1.0
        values.append(Dual(x, tan))
    for op in p.ops:
        args = [values[o] if is_ref(o) else Dual.constant(o, n) for o in op.operands]
        values.append(_apply(op.kind, args, op.attrs))
    return _blocks_from_tangents(p, [values[o] for o in p.outputs])


def _primal(p: Program, xs: list) -> list:
    values = list(xs)
    for op in p.ops:
        args = [values[o] if is_ref(o) else float(o) for o in op.operands]
        values.append(evaluate(op.kind, args, op.attrs))
    return [values[o] for o in p.outputs]


def fd_jacobian(p: Program, xs: list, rel_step: float = 1e-6) -> list:
    """Central differences with step ``rel_step * max(1, |x_i|)``."""
    blocks = [[np.zeros((p.shapes[o][0] * p.shapes[o][1], x.size)) for x in xs] for o in p.outputs]
    for s, x in enumerate(xs):
        for e in range(x.size):
            h = rel_step * max(1.0, abs(x.flat[e]))
            up = [v.copy() for v in xs]
            dn = [v.copy() for v in xs]
            up[s].flat[e] += h
            dn[s].flat[e] -= h
            fu, fd = _primal(p, up), _primal(p, dn)
            for t in range(len(p.outputs)):
                blocks[t][s][:, e] = ((fu[t] - fd[t]) / (2 * h)).ravel()
    return blocks
