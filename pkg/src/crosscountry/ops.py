"""Primal evaluation and local partials of elemental operations.

``local_partials`` returns, for every operand, the edge Jacobian of the op
output with respect to that operand as ``(JacobianSpec, data)`` in the
layout defined by :mod:`crosscountry.sparsity`, or ``None`` for literals.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError, UnsupportedOp
from .program import SCALAR
from .sparsity import COPY, JacobianSpec

_erf = np.vectorize(math.erf, otypes=[float])
_TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)


def _check_domain(kind: str, x: np.ndarray, attrs: dict) -> None:
    if kind == "log" and np.any(x <= 0):
        raise DomainError("log of a non-positive value")
    if kind == "sqrt" and np.any(x < 0):
        raise DomainError("sqrt of a negative value")
    if kind == "pow_const":
        p = attrs["p"]
        if p != int(p) and np.any(x < 0):
            raise DomainError(f"non-integer power {p} of a negative value")
        if p < 1 and np.any(x == 0):
            raise DomainError(f"power {p} at zero")


def evaluate(kind: str, args: list, attrs: dict) -> np.ndarray:
    """Primal value of one op; ``args`` holds 2-d arrays or floats."""
    a = [np.asarray(x, dtype=float) if isinstance(x, np.ndarray) else np.full((1, 1), float(x)) for x in args]
    x = a[0]
    if kind in ("log", "sqrt", "pow_const"):
        _check_domain(kind, x, attrs)
    if kind == "neg":
        return -x
    if kind == "sqrt":
        return np.sqrt(x)
    if kind == "sin":
        return np.sin(x)
    if kind == "cos":
        return np.cos(x)
    if kind == "arctan":
        return np.arctan(x)
    if kind == "log":
        return np.log(x)
    if kind == "exp":
        return np.exp(x)
    if kind == "tanh":
        return np.tanh(x)
    if kind == "abs":
        return np.abs(x)
    if kind == "erf":
        return _erf(x)
    if kind == "pow_const":
        return np.power(x, attrs["p"])
    if kind == "scale_const":
        return attrs["c"] * x
    if kind == "add":
        return a[0] + a[1]
    if kind == "sub":
        return a[0] - a[1]
    if kind == "mul":
        return a[0] * a[1]
    if kind == "div":
        if np.any(a[1] == 0):
            raise DomainError("division by zero")
        return a[0] / a[1]
    if kind == "arctan2":
        return np.arctan2(a[0], a[1])
    if kind in ("matvec", "matmul"):
        return a[0] @ a[1]
    if kind == "dot":
        return (a[0].T @ a[1]).reshape(1, 1)
    if kind == "sum_reduce":
        return np.full((1, 1), x.sum())
    if kind == "transpose":
        return x.T.copy()
    if kind == "slice":
        r0, r1 = attrs.get("rows", (0, x.shape[0]))
        c0, c1 = attrs.get("cols", (0, x.shape[1]))
        return x[r0:r1, c0:c1].copy()
    if kind == "concat":
        return np.concatenate(a, axis=attrs.get("axis", 0))
    raise UnsupportedOp(kind)


def unary_derivative(kind: str, x: np.ndarray, y: np.ndarray, attrs: dict) -> np.ndarray:
    """Elementwise derivative of a unary op at ``x`` with value ``y``."""
    if kind == "sqrt":
        if np.any(y == 0):
            raise DomainError("sqrt is not differentiable at zero")
        return 0.5 / y
    if kind == "sin":
        return np.cos(x)
    if kind == "cos":
        return -np.sin(x)
    if kind == "arctan":
        return 1.0 / (1.0 + x * x)
    if kind == "log":
        return 1.0 / x
    if kind == "exp":
        return y
    if kind == "tanh":
        return 1.0 - y * y
    if kind == "abs":
        return np.sign(x)
    if kind == "erf":
        return _TWO_OVER_SQRT_PI * np.exp(-x * x)
    if kind == "pow_const":
        p = attrs["p"]
        return p * np.power(x, p - 1) if p != 0 else np.zeros_like(x)
    raise UnsupportedOp(kind)


# -- edge construction ---------------------------------------------------------


def diag_edge(shape: tuple, d: np.ndarray) -> tuple:
    """Elementwise partial on a value of ``shape`` with derivative array ``d``."""
    r, c = shape
    if shape == SCALAR:
        return JacobianSpec(1, shape, shape), d.reshape(1, 1, 1, 1)
    if c == 1:
        return JacobianSpec(8, shape, shape), d[:, 0].copy()
    if r == 1:
        return JacobianSpec(-8, shape, shape), d[0, :].copy()
    return JacobianSpec(6, shape, shape), d.copy()


def identity_edge(shape: tuple) -> tuple:
    if shape == SCALAR:
        return JacobianSpec(1, shape, shape), np.ones((1, 1, 1, 1))
    return JacobianSpec(-6, shape, shape), None


def const_edge(shape: tuple, c: float) -> tuple:
    """Partial equal to ``c`` times the identity on a value of ``shape``.

    The code never depends on the value of ``c`` so that traced and numeric
    graphs agree structurally at every point.
    """
    if shape == SCALAR:
        return JacobianSpec(1, shape, shape), np.full((1, 1, 1, 1), float(c))
    return JacobianSpec(10, shape, shape), np.array(float(c))


def broadcast_edge(out_shape: tuple, d) -> tuple:
    """Partial of an array output with respect to a broadcast scalar operand."""
    data = np.broadcast_to(np.asarray(d, dtype=float), out_shape).reshape(*out_shape, 1, 1)
    return JacobianSpec(1, SCALAR, out_shape), data.copy()


def _elementwise(op_shape, out_shape, kind_of, value):
    """Edge for one operand of an elementwise op.

    ``kind_of`` is ``"one"``, ``"const"`` (scalar ``value``) or ``"diag"``
    (array ``value`` broadcastable to ``out_shape``).
    """
    if op_shape != out_shape:
        return broadcast_edge(out_shape, value if kind_of != "one" else 1.0)
    if kind_of == "one":
        return identity_edge(out_shape)
    if kind_of == "const":
        return const_edge(out_shape, float(np.asarray(value).reshape(-1)[0]))
    return diag_edge(out_shape, np.broadcast_to(value, out_shape))


def _shape(x) -> tuple:
    return x.shape if isinstance(x, np.ndarray) else SCALAR


def _is_broadcast_scalar(x, out_shape) -> bool:
    return _shape(x) == SCALAR and out_shape != SCALAR


def copy_map(in_shape: tuple, out_shape: tuple, pairs) -> np.ndarray:
    """Copy-gradient index map from ``(out_flat, in_flat)`` pairs."""
    sel = np.full(out_shape[0] * out_shape[1], -1, dtype=np.int64)
    for o, i in pairs:
        sel[o] = i
    return sel.reshape(out_shape)


def local_partials(kind: str, args: list, attrs: dict, y: np.ndarray) -> list:
    """Edge Jacobians of ``y = kind(*args)`` with respect to each operand."""
    out_shape = y.shape
    if kind == "neg":
        return [const_edge(out_shape, -1.0)]
    if kind == "scale_const":
        return [const_edge(out_shape, attrs["c"])]
    if kind in ("sqrt", "sin", "cos", "arctan", "log", "exp", "tanh", "abs", "erf", "pow_const"):
        return [diag_edge(out_shape, unary_derivative(kind, args[0], y, attrs))]
    if kind in ("add", "sub", "mul", "div", "arctan2"):
        a, b = args
        sa, sb = _shape(a), _shape(b)
        if kind in ("add", "sub"):
            specs = [("one", None), ("one", None) if kind == "add" else ("const", -1.0)]
        elif kind == "mul":
            specs = [
                ("const", b) if _is_broadcast_scalar(b, out_shape) else ("diag", b),
                ("const", a) if _is_broadcast_scalar(a, out_shape) else ("diag", a),
            ]
        elif kind == "div":
            if np.any(np.asarray(b) == 0):
                raise DomainError("division by zero")
            inv = 1.0 / np.asarray(b, dtype=float)
            specs = [
                ("const", inv) if _is_broadcast_scalar(b, out_shape) else ("diag", inv),
                ("diag", -np.asarray(y) * inv),
            ]
        else:
            r2 = np.asarray(a, dtype=float) ** 2 + np.asarray(b, dtype=float) ** 2
            if np.any(r2 == 0):
                raise DomainError("arctan2 is not differentiable at the origin")
            specs = [("diag", np.asarray(b) / r2), ("diag", -np.asarray(a) / r2)]
        out = []
        for arg, s, (k, v) in zip((a, b), (sa, sb), specs):
            if not isinstance(arg, np.ndarray):
                out.append(None)
            elif k == "const" and out_shape == SCALAR:
                out.append(const_edge(out_shape, float(np.asarray(v).reshape(-1)[0])))
            elif s == out_shape or k != "diag":
                out.append(_elementwise(s, out_shape, k, v))
            else:
                out.append(broadcast_edge(out_shape, v))
        return out
    if kind == "matvec":
        w, x = args
        m, n = w.shape
        return [
            (JacobianSpec(-2, w.shape, out_shape), x.reshape(1, n).copy()),
            (JacobianSpec(1, x.shape, out_shape), w.reshape(m, 1, n, 1).copy()),
        ]
    if kind == "matmul":
        a, b = args
        return [
            (JacobianSpec(-2, a.shape, out_shape), b.T.copy()),
            (JacobianSpec(-3, b.shape, out_shape), a.copy()),
        ]
    if kind == "dot":
        x, z = args
        n = x.shape[0]
        return [
            (JacobianSpec(1, x.shape, SCALAR), z.reshape(1, 1, n, 1).copy()),
            (JacobianSpec(1, z.shape, SCALAR), x.reshape(1, 1, n, 1).copy()),
        ]
    if kind == "sum_reduce":
        return [(JacobianSpec(1, args[0].shape, SCALAR), np.ones((1, 1, *args[0].shape)))]
    if kind == "transpose":
        s = args[0].shape
        if s == (1, 1) or s[0] == 1 or s[1] == 1:
            # row <-> column vectors keep their flat layout
            n = s[0] * s[1]
            return [(JacobianSpec(COPY, s, out_shape), np.arange(n).reshape(out_shape))]
        return [(JacobianSpec(-7, s, out_shape), None)]
    if kind == "slice":
        r, c = args[0].shape
        r0, r1 = attrs.get("rows", (0, r))
        c0, c1 = attrs.get("cols", (0, c))
        rows, cols = np.meshgrid(np.arange(r0, r1), np.arange(c0, c1), indexing="ij")
        return [(JacobianSpec(COPY, (r, c), out_shape), (rows * c + cols).astype(np.int64))]
    if kind == "concat":
        axis = attrs.get("axis", 0)
        out = []
        offset = 0
        cols_out = out_shape[1]
        for arg in args:
            r, c = arg.shape
            rr, cc = np.meshgrid(np.arange(r), np.arange(c), indexing="ij")
            if axis == 0:
                dst = (rr + offset) * cols_out + cc
                offset += r
            else:
                dst = rr * cols_out + cc + offset
                offset += c
            pairs = zip(dst.ravel(), (rr * c + cc).ravel())
            out.append((JacobianSpec(COPY, (r, c), out_shape), copy_map((r, c), out_shape, pairs)))
        return out
    raise UnsupportedOp(kind)
