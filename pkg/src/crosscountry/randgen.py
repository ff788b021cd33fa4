"""Random straight-line programs for benchmarking and property tests."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DomainError, InvalidConfig
from .ops import evaluate
from .program import ElementalOp, Program, is_ref

DEFAULT_PROBS = {"unary": 0.4, "binary": 0.4, "accumulation": 0.1, "reshape": 0.1}

UNARY_KINDS = ("sin", "cos", "tanh", "exp", "arctan", "neg", "log", "sqrt", "pow_const", "scale_const")
BINARY_KINDS = ("add", "sub", "mul", "div")
MAX_ABS = 1e6
N_PROBES = 3
MAX_DIM = 8


@dataclass
class _Value:
    shape: tuple
    probes: list  # primal value at each probe point
    positive: bool = False
    uses: int = 0


@dataclass
class _Gen:
    rng: np.random.Generator
    values: list = field(default_factory=list)
    ops: list = field(default_factory=list)

    def ok(self, arrays) -> bool:
        return all(np.all(np.isfinite(a)) and np.max(np.abs(a)) <= MAX_ABS for a in arrays)

    def try_op(self, kind, operands, attrs=None, positive=False) -> Optional[int]:
        attrs = attrs or {}
        probes = []
        try:
            with np.errstate(all="raise"):
                for k in range(N_PROBES):
                    args = [self.values[o].probes[k] if is_ref(o) else o for o in operands]
                    probes.append(evaluate(kind, args, attrs))
        except (DomainError, FloatingPointError, ValueError):
            return None
        if not self.ok(probes):
            return None
        for o in operands:
            if is_ref(o):
                self.values[o].uses += 1
        self.ops.append(ElementalOp(kind, tuple(operands), dict(attrs)))
        self.values.append(_Value(probes[0].shape, probes, positive))
        return len(self.values) - 1

    def pick(self, candidates=None) -> int:
        """Operand choice biased towards recent and unused values."""
        ids = list(range(len(self.values))) if candidates is None else list(candidates)
        w = np.array([(1.0 + i) * (3.0 if self.values[i].uses == 0 else 1.0) for i in ids])
        return ids[self.rng.choice(len(ids), p=w / w.sum())]


def random_program(
    seed: int,
    n_in: int = 2,
    n_out: int = 2,
    n_intermediates: int = 5,
    kind_probs: Optional[dict] = None,
    vector: bool = False,
    max_tries: int = 200,
) -> Program:
    """Random program whose trace has exactly ``n_intermediates`` intermediates.

    Domain-restricted ops only see values known to be positive: other
    operands are first mapped through ``x * x + 1`` (two ops that count
    towards the budget).  Ops whose value is non-finite or larger than 1e6
    at any probe point are resampled.
    """
    if n_intermediates < 1:
        raise InvalidConfig("n_intermediates must be at least 1")
    if n_in < 1 or n_out < 1:
        raise InvalidConfig("need at least one input and one output")
    probs = dict(DEFAULT_PROBS if kind_probs is None else kind_probs)
    # reshapes of scalars would create vectors, so scalar programs skip them
    kinds = ("unary", "binary", "accumulation", "reshape") if vector else ("unary", "binary", "accumulation")
    cats = [c for c in kinds if probs.get(c, 0) > 0]
    if not cats:
        raise InvalidConfig("kind_probs assigns no mass to any category")
    p = np.array([probs[c] for c in cats], dtype=float)
    p /= p.sum()

    rng = np.random.default_rng(seed)
    gen = _Gen(rng)
    inputs = []
    for k in range(n_in):
        shape = (1, 1)
        if vector:
            shape = [(1, 1), (int(rng.integers(2, 5)), 1), (int(rng.integers(2, 4)), int(rng.integers(2, 4)))][
                int(rng.integers(3))
            ]
        inputs.append((f"x{k}", shape))
        probes = [rng.uniform(-1.0, 1.0, size=shape) for _ in range(N_PROBES)]
        gen.values.append(_Value(shape, probes))

    budget = n_intermediates
    tries = 0
    while budget > 0:
        tries += 1
        if tries > max_tries * n_intermediates:
            raise InvalidConfig("could not generate a well-defined program; relax the configuration")
        cat = cats[rng.choice(len(cats), p=p)]
        made = _emit(gen, cat, budget, vector)
        budget -= made

    # output ops consume otherwise unused values, so every body op stays an intermediate
    outputs = []
    body_end = len(gen.values)
    while len(outputs) < n_out:
        tries += 1
        if tries > max_tries * (n_intermediates + n_out):
            raise InvalidConfig("could not generate output ops")
        unused = [v for v in range(n_in, body_end) if gen.values[v].uses == 0]
        a = unused[-1] if unused else gen.pick(range(n_in, body_end))
        if rng.random() < 0.5:
            kind = ("sin", "cos", "tanh", "arctan")[int(rng.integers(4))]
            vid = gen.try_op(kind, (a,))
        else:
            same = [v for v in range(body_end) if v != a and gen.values[v].shape == gen.values[a].shape]
            if not same:
                continue
            b = gen.pick(same)
            vid = gen.try_op(("add", "mul", "sub")[int(rng.integers(3))], (a, b))
        if vid is not None:
            outputs.append(vid)
    return Program(inputs, gen.ops, outputs)


def _guarded(gen: _Gen, v: int, budget: int) -> tuple[Optional[int], int]:
    """A positive stand-in for ``v``; returns ``(value, ops used)``."""
    if gen.values[v].positive:
        return v, 0
    if budget < 3:
        return None, 0
    sq = gen.try_op("mul", (v, v))
    if sq is None:
        return None, 0
    pos = gen.try_op("add", (sq, 1.0), positive=True)
    if pos is None:
        _rollback(gen, 1)
        return None, 0
    return pos, 2


def _rollback(gen: _Gen, n: int) -> None:
    for _ in range(n):
        op = gen.ops.pop()
        gen.values.pop()
        for o in op.operands:
            if is_ref(o):
                gen.values[o].uses -= 1


def _emit(gen: _Gen, cat: str, budget: int, vector: bool) -> int:
    """Try to append one op of category ``cat``; returns the number of ops added."""
    rng = gen.rng
    if cat == "unary":
        kind = UNARY_KINDS[int(rng.integers(len(UNARY_KINDS)))]
        a = gen.pick()
        if kind in ("log", "sqrt"):
            pa, used = _guarded(gen, a, budget)
            if pa is None:
                return 0
            vid = gen.try_op(kind, (pa,), positive=kind == "sqrt")
            if vid is None:
                _rollback(gen, used)
                return 0
            return used + 1
        attrs = {}
        if kind == "pow_const":
            attrs = {"p": float(rng.choice([2.0, 3.0]))}
        elif kind == "scale_const":
            attrs = {"c": float(np.round(rng.uniform(-2.0, 2.0), 3)) or 1.0}
        # exp is positive in exact arithmetic but underflows to 0, so it is not a safe denominator
        return int(gen.try_op(kind, (a,), attrs) is not None)
    if cat == "binary":
        kind = BINARY_KINDS[int(rng.integers(len(BINARY_KINDS)))]
        a = gen.pick()
        sa = gen.values[a].shape
        if rng.random() < 0.15:
            b = float(np.round(rng.uniform(0.5, 2.0), 3))
        else:
            compat = [v for v in range(len(gen.values)) if gen.values[v].shape in (sa, (1, 1)) or sa == (1, 1)]
            b = gen.pick(compat)
        if kind == "div" and is_ref(b):
            pb, used = _guarded(gen, b, budget - 1)
            if pb is None:
                return 0
            vid = gen.try_op(kind, (a, pb))
            if vid is None:
                _rollback(gen, used)
                return 0
            return used + 1
        operands = (a, b) if rng.random() < 0.8 or not is_ref(b) else (b, a)
        return int(gen.try_op(kind, operands) is not None)
    if cat == "accumulation":
        a = gen.pick()
        sa = gen.values[a].shape
        if vector and sa[1] == 1 and sa[0] > 1 and rng.random() < 0.5:
            same = [v for v in range(len(gen.values)) if gen.values[v].shape == sa]
            return int(gen.try_op("dot", (a, gen.pick(same))) is not None)
        if vector and sa != (1, 1) and rng.random() < 0.5:
            rhs = [v for v in range(len(gen.values)) if gen.values[v].shape[0] == sa[1]]
            if rhs:
                b = gen.pick(rhs)
                kind = "matvec" if gen.values[b].shape[1] == 1 else "matmul"
                return int(gen.try_op(kind, (a, b)) is not None)
        return int(gen.try_op("sum_reduce", (a,)) is not None)
    # reshape
    a = gen.pick()
    r, c = gen.values[a].shape
    choice = rng.random()
    if choice < 0.3 and (r > 1 or c > 1):
        r0 = int(rng.integers(r))
        c0 = int(rng.integers(c))
        r1 = int(rng.integers(r0 + 1, r + 1))
        c1 = int(rng.integers(c0 + 1, c + 1))
        if (r0, r1, c0, c1) == (0, r, 0, c):
            return 0
        return int(gen.try_op("slice", (a,), {"rows": (r0, r1), "cols": (c0, c1)}) is not None)
    if choice < 0.6 and r > 1 and c > 1:
        return int(gen.try_op("transpose", (a,)) is not None)
    axis = int(rng.integers(2))
    other = c if axis == 0 else r
    partners = [
        v for v in range(len(gen.values)) if (gen.values[v].shape[1] if axis == 0 else gen.values[v].shape[0]) == other
    ]
    b = gen.pick(partners)
    if gen.values[a].shape[axis] + gen.values[b].shape[axis] > MAX_DIM:
        return 0
    return int(gen.try_op("concat", (a, b), {"axis": axis}) is not None)
