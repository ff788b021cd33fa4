"""Straight-line programs of elemental operations.

Values are referenced by integer ids: inputs take ``0 .. n_inputs - 1`` and
op ``t`` defines value ``n_inputs + t``.  Operands of elementwise binary ops
may also be float literals, which are constants and never become graph
vertices.

Text format (one statement per line)::

    in %0 (1,1) x1
    %2 = mul %0 %1
    %3 = pow_const %2 p=2.0
    out %3
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .errors import ProgramError, ShapeError, UnsupportedOp

Shape = tuple
Operand = Union[int, float]

UNARY = frozenset(
    {"neg", "sqrt", "sin", "cos", "arctan", "log", "exp", "tanh", "abs", "erf", "pow_const", "scale_const"}
)
BINARY = frozenset({"add", "sub", "mul", "div", "arctan2"})
LINALG = frozenset({"matvec", "matmul", "dot"})
REDUCE = frozenset({"sum_reduce"})
RESHAPE = frozenset({"concat", "slice", "transpose"})
KINDS = UNARY | BINARY | LINALG | REDUCE | RESHAPE

SCALAR: Shape = (1, 1)


@dataclass
class ElementalOp:
    kind: str
    operands: tuple
    attrs: dict = field(default_factory=dict)

    def value_operands(self) -> list[int]:
        return [o for o in self.operands if is_ref(o)]


def is_ref(o) -> bool:
    return isinstance(o, int) and not isinstance(o, bool)


def _check_shape(shape) -> Shape:
    shape = tuple(int(d) for d in shape)
    if len(shape) != 2:
        raise ShapeError(f"values must have rank 2 (rows, cols), got {shape}")
    if min(shape) < 1:
        raise ShapeError(f"non-positive dimension in {shape}")
    return shape


def infer_shape(kind: str, shapes: Sequence[Optional[Shape]], attrs: dict) -> Shape:
    """Output shape of ``kind``; ``None`` entries are scalar literals."""
    if kind not in KINDS:
        raise UnsupportedOp(f"unsupported op kind {kind!r}")
    shapes = [SCALAR if s is None else s for s in shapes]

    def arity(n):
        if len(shapes) != n:
            raise ShapeError(f"{kind} takes {n} operands, got {len(shapes)}")

    if kind in UNARY:
        arity(1)
        if kind == "pow_const" and "p" not in attrs:
            raise ProgramError("pow_const needs attribute p")
        if kind == "scale_const" and "c" not in attrs:
            raise ProgramError("scale_const needs attribute c")
        return shapes[0]
    if kind in BINARY:
        arity(2)
        a, b = shapes
        if a == b or b == SCALAR:
            return a
        if a == SCALAR:
            return b
        raise ShapeError(f"{kind}: cannot broadcast {a} with {b}")
    if kind == "matvec":
        arity(2)
        (m, n), (n2, c) = shapes
        if n != n2 or c != 1:
            raise ShapeError(f"matvec: {shapes[0]} x {shapes[1]}")
        return (m, 1)
    if kind == "matmul":
        arity(2)
        (m, n), (n2, p) = shapes
        if n != n2:
            raise ShapeError(f"matmul: {shapes[0]} x {shapes[1]}")
        return (m, p)
    if kind == "dot":
        arity(2)
        if shapes[0] != shapes[1] or shapes[0][1] != 1:
            raise ShapeError(f"dot needs equal column vectors, got {shapes}")
        return SCALAR
    if kind == "sum_reduce":
        arity(1)
        return SCALAR
    if kind == "transpose":
        arity(1)
        return (shapes[0][1], shapes[0][0])
    if kind == "slice":
        arity(1)
        r, c = shapes[0]
        r0, r1 = attrs.get("rows", (0, r))
        c0, c1 = attrs.get("cols", (0, c))
        if not (0 <= r0 < r1 <= r and 0 <= c0 < c1 <= c):
            raise ShapeError(f"slice rows={r0}:{r1} cols={c0}:{c1} outside {shapes[0]}")
        return (r1 - r0, c1 - c0)
    if kind == "concat":
        if not shapes:
            raise ShapeError("concat needs operands")
        axis = attrs.get("axis", 0)
        if axis not in (0, 1):
            raise ShapeError(f"concat axis must be 0 or 1, got {axis}")
        other = {s[1 - axis] for s in shapes}
        if len(other) != 1:
            raise ShapeError(f"concat along {axis}: mismatched shapes {shapes}")
        total = sum(s[axis] for s in shapes)
        return (total, other.pop()) if axis == 0 else (other.pop(), total)
    raise UnsupportedOp(kind)  # pragma: no cover


@dataclass
class Program:
    inputs: list  # (name, shape)
    ops: list
    outputs: list
    shapes: list = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.inputs = [(str(n), _check_shape(s)) for n, s in self.inputs]
        self.outputs = list(self.outputs)
        shapes = [s for _, s in self.inputs]
        for t, op in enumerate(self.ops):
            vid = len(shapes)
            if not op.value_operands():
                raise ProgramError(f"op %{vid} ({op.kind}) has no value operand")
            if op.kind not in BINARY and len(op.value_operands()) != len(op.operands):
                raise ProgramError(f"op %{vid} ({op.kind}) only accepts value operands")
            operand_shapes = []
            for o in op.operands:
                if is_ref(o):
                    if not 0 <= o < vid:
                        raise ProgramError(f"op %{vid} reads undefined value %{o}")
                    operand_shapes.append(shapes[o])
                else:
                    operand_shapes.append(None)
            shapes.append(_check_shape(infer_shape(op.kind, operand_shapes, op.attrs)))
        for o in self.outputs:
            if not is_ref(o) or not 0 <= o < len(shapes):
                raise ProgramError(f"output %{o} is undefined")
        self.shapes = shapes

    @property
    def n_inputs(self) -> int:
        return len(self.inputs)

    @property
    def n_values(self) -> int:
        return len(self.shapes)

    def op_of(self, vid: int) -> ElementalOp:
        return self.ops[vid - self.n_inputs]

    def to_text(self) -> str:
        return format_program(self)


# -- text format --------------------------------------------------------------

_FLOAT_ATTRS = {"p", "c"}


def _fmt_operand(o) -> str:
    return f"%{o}" if is_ref(o) else repr(float(o))


def _fmt_attr(k, v) -> str:
    if isinstance(v, tuple):
        return f"{k}={v[0]}:{v[1]}"
    if isinstance(v, float):
        return f"{k}={v!r}"
    return f"{k}={v}"


def format_program(p: Program) -> str:
    lines = []
    for n, (name, (r, c)) in enumerate(p.inputs):
        lines.append(f"in %{n} ({r},{c}) {name}")
    for t, op in enumerate(p.ops):
        parts = [f"%{p.n_inputs + t} = {op.kind}"]
        parts += [_fmt_operand(o) for o in op.operands]
        parts += [_fmt_attr(k, v) for k, v in sorted(op.attrs.items())]
        lines.append(" ".join(parts))
    lines.append("out " + " ".join(f"%{o}" for o in p.outputs))
    return "\n".join(lines) + "\n"


_IN_RE = re.compile(r"^in\s+%(\d+)\s+\((\d+)\s*,\s*(\d+)\)\s*(\S*)$")
_OP_RE = re.compile(r"^%(\d+)\s*=\s*(\w+)\s*(.*)$")


def _parse_attr(key: str, val: str):
    if ":" in val:
        a, b = val.split(":")
        return (int(a), int(b))
    if key in _FLOAT_ATTRS:
        return float(val)
    try:
        return int(val)
    except ValueError:
        return float(val)


def parse_program(text: str) -> Program:
    inputs, ops, outputs = [], [], None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("in "):
                m = _IN_RE.match(line)
                if not m or int(m.group(1)) != len(inputs):
                    raise ProgramError(f"bad input declaration {line!r}")
                name = m.group(4) or f"x{len(inputs)}"
                inputs.append((name, (int(m.group(2)), int(m.group(3)))))
            elif line.startswith("out"):
                outputs = [int(tok.lstrip("%")) for tok in line.split()[1:]]
            else:
                m = _OP_RE.match(line)
                if not m:
                    raise ProgramError(f"cannot parse {line!r}")
                if int(m.group(1)) != len(inputs) + len(ops):
                    raise ProgramError(f"values must be numbered consecutively at {line!r}")
                operands, attrs = [], {}
                for tok in m.group(3).split():
                    if tok.startswith("%"):
                        operands.append(int(tok[1:]))
                    elif "=" in tok:
                        k, v = tok.split("=", 1)
                        attrs[k] = _parse_attr(k, v)
                    else:
                        operands.append(float(tok))
                ops.append(ElementalOp(m.group(2), tuple(operands), attrs))
        except ValueError as exc:
            raise ProgramError(f"line {lineno}: {exc}") from None
    if outputs is None:
        raise ProgramError("program has no 'out' line")
    return Program(inputs, ops, outputs)


# -- builder DSL --------------------------------------------------------------


class Var:
    """Handle to a value inside a :class:`ProgramBuilder`."""

    __array_priority__ = 1000

    def __init__(self, builder: "ProgramBuilder", vid: int):
        self.builder = builder
        self.id = vid

    @property
    def shape(self) -> Shape:
        return self.builder.shapes[self.id]

    def _bin(self, kind, other, swap=False):
        a, b = (other, self) if swap else (self, other)
        return self.builder.op(kind, a, b)

    def __add__(self, o):
        return self._bin("add", o)

    def __radd__(self, o):
        return self._bin("add", o, True)

    def __sub__(self, o):
        return self._bin("sub", o)

    def __rsub__(self, o):
        return self._bin("sub", o, True)

    def __mul__(self, o):
        return self._bin("mul", o)

    def __rmul__(self, o):
        return self._bin("mul", o, True)

    def __truediv__(self, o):
        return self._bin("div", o)

    def __rtruediv__(self, o):
        return self._bin("div", o, True)

    def __neg__(self):
        return self.builder.op("neg", self)

    def __pow__(self, p):
        return self.builder.op("pow_const", self, p=float(p))

    def __matmul__(self, o):
        kind = "matvec" if o.shape[1] == 1 else "matmul"
        return self.builder.op(kind, self, o)

    @property
    def T(self):
        return self.builder.op("transpose", self)

    def __getitem__(self, key):
        rows, cols = key if isinstance(key, tuple) else (key, slice(None))
        r, c = self.shape

        def span(k, n):
            if isinstance(k, int):
                return (k, k + 1)
            start, stop, stride = k.indices(n)
            if stride != 1:
                raise ShapeError("strided slices are not supported")
            return (start, stop)

        return self.builder.op("slice", self, rows=span(rows, r), cols=span(cols, c))

    def __repr__(self):
        return f"Var(%{self.id}, shape={self.shape})"


class ProgramBuilder:
    def __init__(self):
        self.inputs: list = []
        self.ops: list = []
        self.shapes: list = []

    def input(self, name: str, shape: Shape = SCALAR) -> Var:
        if self.ops:
            raise ProgramError("declare all inputs before the first op")
        shape = _check_shape(shape)
        self.inputs.append((name, shape))
        self.shapes.append(shape)
        return Var(self, len(self.shapes) - 1)

    def op(self, kind: str, *operands, **attrs) -> Var:
        refs = []
        for o in operands:
            if isinstance(o, Var):
                if o.builder is not self:
                    raise ProgramError("operand belongs to another builder")
                refs.append(o.id)
            elif isinstance(o, (int, float)):
                refs.append(float(o))
            else:
                raise ProgramError(f"unsupported operand {o!r}")
        shapes = [self.shapes[r] if is_ref(r) else None for r in refs]
        shape = infer_shape(kind, shapes, attrs)
        self.ops.append(ElementalOp(kind, tuple(refs), dict(attrs)))
        self.shapes.append(shape)
        return Var(self, len(self.shapes) - 1)

    def build(self, *outputs: Var) -> Program:
        return Program(list(self.inputs), list(self.ops), [v.id for v in outputs])


def _unary(kind):
    def f(v: Var, **attrs) -> Var:
        return v.builder.op(kind, v, **attrs)

    f.__name__ = kind
    return f


sin = _unary("sin")
cos = _unary("cos")
tanh = _unary("tanh")
exp = _unary("exp")
log = _unary("log")
sqrt = _unary("sqrt")
arctan = _unary("arctan")
absolute = _unary("abs")
erf = _unary("erf")
sum_reduce = _unary("sum_reduce")


def arctan2(y: Var, x: Var) -> Var:
    b = y.builder if isinstance(y, Var) else x.builder
    return b.op("arctan2", y, x)


def dot(x: Var, y: Var) -> Var:
    return x.builder.op("dot", x, y)


def scale(v: Var, c: float) -> Var:
    return v.builder.op("scale_const", v, c=float(c))


def concat(parts: Sequence[Var], axis: int = 0) -> Var:
    return parts[0].builder.op("concat", *parts, axis=axis)
