"""Algebra of structured edge Jacobians.

Every edge of a computational graph carries a Jacobian ``J[i, j, k, l] =
d y[i, j] / d x[k, l]`` where ``(i, j)`` index the destination value and
``(k, l)`` index the source value.  Most elemental Jacobians factor into a
small dense tensor times Kronecker deltas tying output indices to input
indices.  The integer *sparsity code* in ``[-10, 10]`` names one such
factorisation; this module maps codes to symbolic :class:`DeltaPattern`
objects and implements contraction (chain rule through a vertex), additive
merge, and multiplication counting on top of them.

Data layout: the dense factor of a code is stored as an array whose axes
are the code's dense slots in ``i, j, k, l`` order.  Constant codes store a
0-d array, pure delta codes store ``None`` and the copy gradient (code -1)
stores an integer map of shape ``out_shape`` holding the flat source index
of every destination element (``-1`` for elements that do not come from
this source).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InvalidCode, ShapeMismatch, UnsupportedPattern

SLOTS = ("i", "j", "k", "l")
OUT_SLOTS = ("i", "j")
IN_SLOTS = ("k", "l")

COPY = -1
DENSE = 1
NO_EDGE = 0


@dataclass(frozen=True)
class DeltaPattern:
    """Symbolic factorisation ``factor(dense slots) * prod(deltas)``.

    ``dense_factors`` is a tuple of slot sets.  An empty tuple is a pure
    delta product (value 1 on the diagonal), ``(frozenset(),)`` is a bare
    constant ``c`` and ``(frozenset({"i", "j"}),)`` is a tensor ``T_ij``.
    """

    dense_factors: tuple[frozenset, ...]
    deltas: frozenset

    @property
    def dense(self) -> frozenset:
        out: frozenset = frozenset()
        for f in self.dense_factors:
            out |= f
        return out

    @property
    def is_identity(self) -> bool:
        return not self.dense_factors

    @property
    def is_const(self) -> bool:
        return bool(self.dense_factors) and not self.dense

    def partner(self, slot: str) -> Optional[str]:
        for u, v in self.deltas:
            if u == slot:
                return v
            if v == slot:
                return u
        return None

    def describe(self) -> str:
        if self.is_identity:
            head = ""
        elif self.is_const:
            head = "c"
        else:
            head = "T_" + "".join(s for s in SLOTS if s in self.dense)
        tail = "".join(f"d_{u}{v}" for u, v in sorted(self.deltas))
        return " ".join(x for x in (head, tail) if x) or "1"


class _CopyGradient:
    """Marker returned by :func:`code_to_pattern` for code -1."""

    def __repr__(self) -> str:
        return "CopyGradient"

    def describe(self) -> str:
        return "copy gradient"


COPY_GRADIENT = _CopyGradient()


def _pat(dense, *deltas) -> DeltaPattern:
    if dense is None:
        factors: tuple = ()
    else:
        factors = (frozenset(dense),)
    return DeltaPattern(factors, frozenset(tuple(d) for d in deltas))


_IK, _JL, _IL, _JK = ("i", "k"), ("j", "l"), ("i", "l"), ("j", "k")

# Codes +-4 and +-5 follow the same convention as +-2 and +-3: the positive
# code keeps the dense factor on the delta-tied class, the negative one drops it.
_CODE_PATTERNS: dict[int, DeltaPattern] = {
    1: _pat("ijkl"),
    2: _pat("ijl", _IK),
    3: _pat("ijk", _JL),
    4: _pat("ijk", _IL),
    5: _pat("ijl", _JK),
    6: _pat("ij", _IK, _JL),
    7: _pat("ij", _IL, _JK),
    8: _pat("i", _IK, _JL),
    9: _pat("i", _IL, _JK),
    10: _pat("", _IK, _JL),
    -2: _pat("jl", _IK),
    -3: _pat("ik", _JL),
    -4: _pat("jk", _IL),
    -5: _pat("il", _JK),
    -6: _pat(None, _IK, _JL),
    -7: _pat(None, _IL, _JK),
    -8: _pat("j", _IK, _JL),
    -9: _pat("j", _IL, _JK),
    -10: _pat("", _IL, _JK),
}
_PATTERN_CODES = {p: c for c, p in _CODE_PATTERNS.items()}

ALL_CODES = tuple(sorted(_CODE_PATTERNS) + [COPY])


def code_to_pattern(code: int):
    if not isinstance(code, (int, np.integer)) or code == 0 or not -10 <= code <= 10:
        raise InvalidCode(f"invalid sparsity code {code!r}")
    if code == COPY:
        return COPY_GRADIENT
    return _CODE_PATTERNS[int(code)]


def pattern_to_code(pattern) -> int:
    if pattern is COPY_GRADIENT:
        return COPY
    try:
        return _PATTERN_CODES[pattern]
    except KeyError:
        raise UnsupportedPattern(f"no sparsity code for {pattern}") from None


def _dense_order(pattern: DeltaPattern) -> tuple[str, ...]:
    return tuple(s for s in SLOTS if s in pattern.dense)


@dataclass(frozen=True, slots=True)
class JacobianSpec:
    """Sparsity code plus the shapes of the source and destination values."""

    sparsity: int
    in_shape: tuple
    out_shape: tuple

    def __post_init__(self) -> None:
        code_to_pattern(self.sparsity)
        if len(self.in_shape) != 2 or len(self.out_shape) != 2:
            raise ShapeMismatch("shapes must be (rows, cols) pairs")
        if min(self.in_shape) < 1 or min(self.out_shape) < 1:
            raise ShapeMismatch(f"non-positive shape in {self}")
        if self.sparsity != COPY:
            sizes = self.sizes
            for u, v in _CODE_PATTERNS[self.sparsity].deltas:
                if sizes[u] != sizes[v]:
                    raise ShapeMismatch(
                        f"code {self.sparsity} ties {u} (size {sizes[u]}) to "
                        f"{v} (size {sizes[v]})"
                    )

    @property
    def sizes(self) -> dict:
        return {
            "i": self.out_shape[0],
            "j": self.out_shape[1],
            "k": self.in_shape[0],
            "l": self.in_shape[1],
        }

    @property
    def pattern(self):
        return code_to_pattern(self.sparsity)

    @property
    def is_identity_copy(self) -> bool:
        return self.sparsity == COPY and self.in_shape == self.out_shape

    @property
    def dense_shape(self) -> tuple:
        """Full rank-4 shape ``(out_rows, out_cols, in_rows, in_cols)``."""
        return (*self.out_shape, *self.in_shape)

    def data_shape(self) -> Optional[tuple]:
        if self.sparsity == COPY:
            return tuple(self.out_shape)
        p = _CODE_PATTERNS[self.sparsity]
        if p.is_identity:
            return None
        sizes = self.sizes
        return tuple(sizes[s] for s in _dense_order(p))

    def data_size(self) -> int:
        shape = self.data_shape()
        if shape is None or self.sparsity == COPY:
            return 0
        return math.prod(shape)

    def as_tuple(self) -> tuple:
        return (self.sparsity, *self.in_shape, *self.out_shape)


# --------------------------------------------------------------------------
# dense materialisation (testing oracle) and its inverse


def check_copy_map(spec: JacobianSpec, data) -> np.ndarray:
    """Validate the index map of a copy edge.

    A copy between equal shapes is symbolically the identity, so its map
    must be ``arange``; permutations of equal-shaped values use code -7.
    """
    sel = np.asarray(data)
    if sel.shape != tuple(spec.out_shape):
        raise ShapeMismatch(f"copy map shape {sel.shape} != {spec.out_shape}")
    n_in = spec.in_shape[0] * spec.in_shape[1]
    if sel.size and (sel.min() < -1 or sel.max() >= n_in):
        raise ShapeMismatch(f"copy map entries outside [-1, {n_in})")
    if spec.is_identity_copy and not np.array_equal(sel.ravel(), np.arange(sel.size)):
        raise UnsupportedPattern("a copy between equal shapes must be the identity map")
    return sel


def _copy_dense(spec: JacobianSpec, sel: np.ndarray) -> np.ndarray:
    out = np.zeros(spec.dense_shape)
    n_in = spec.in_shape[0] * spec.in_shape[1]
    flat = out.reshape(spec.out_shape[0] * spec.out_shape[1], n_in)
    for o, src in enumerate(sel.ravel()):
        if src >= 0:
            flat[o, src] = 1.0
    return out


def materialize_dense(spec: JacobianSpec, data=None) -> np.ndarray:
    """Expand ``(spec, data)`` into the full ``(or, oc, ir, ic)`` array."""
    if spec.sparsity == COPY:
        return _copy_dense(spec, check_copy_map(spec, data))
    pattern = code_to_pattern(spec.sparsity)
    expected = spec.data_shape()
    if expected is None:
        if data is not None and np.size(data) != 0:
            raise ShapeMismatch(f"code {spec.sparsity} carries no data")
    else:
        data = np.asarray(data, dtype=float)
        if data.shape != expected:
            raise ShapeMismatch(f"data shape {data.shape} != {expected} for {spec}")
    grids = dict(zip(SLOTS, np.indices(spec.dense_shape, sparse=True)))
    mask = np.ones(spec.dense_shape, dtype=bool)
    for u, v in pattern.deltas:
        mask = mask & (grids[u] == grids[v])
    if pattern.is_identity:
        value = 1.0
    elif pattern.is_const:
        value = data
    else:
        value = data[tuple(grids[s] for s in _dense_order(pattern))]
    return np.where(mask, value, 0.0)


def extract_data(spec: JacobianSpec, dense4: np.ndarray):
    """Read the data of ``spec`` back out of a rank-4 array it covers."""
    pattern = code_to_pattern(spec.sparsity)
    if pattern is COPY_GRADIENT:
        raise InvalidCode("copy maps cannot be extracted from dense data")
    if pattern.is_identity:
        return None
    if pattern.is_const:
        return np.array(dense4[0, 0, 0, 0], dtype=float)
    order = _dense_order(pattern)
    sizes = spec.sizes
    grids = dict(zip(order, np.indices(tuple(sizes[s] for s in order), sparse=True)))
    index = []
    for s in SLOTS:
        if s in grids:
            index.append(grids[s])
        else:
            p = pattern.partner(s)
            index.append(grids[p] if p in grids else 0)
    return np.array(dense4[tuple(index)], dtype=float)


# --------------------------------------------------------------------------
# symbolic contraction


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


# Slot names used while contracting b (second edge) after a (first edge):
# p, q index b's output, s, t the shared vertex, k, l a's input.
_A_MAP = {"i": "s", "j": "t", "k": "k", "l": "l"}
_B_MAP = {"i": "p", "j": "q", "k": "s", "l": "t"}
_RESULT_MAP = {"i": "p", "j": "q", "k": "k", "l": "l"}


@dataclass(frozen=True)
class ContractionPlan:
    """Size-independent recipe for contracting two pattern codes.

    Classes are tuples of product slot names (``p q s t k l``).  ``counted``
    lists every class the product is evaluated over; the multiplication
    count is the product of their sizes whenever both operands carry a
    factor.
    """

    code_a: int
    code_b: int
    result_code: int
    a_axes: tuple  # class index per data axis of a
    b_axes: tuple
    result_axes: tuple
    summed: tuple  # class indices summed over
    classes: tuple
    a_has_factor: bool
    b_has_factor: bool

    @property
    def multiplies(self) -> bool:
        return self.a_has_factor and self.b_has_factor

    def counted(self) -> tuple:
        return tuple(sorted(set(self.result_axes) | set(self.summed)))

    def class_sizes(self, a: JacobianSpec, b: JacobianSpec) -> list:
        slot_size = {
            "p": b.out_shape[0],
            "q": b.out_shape[1],
            "s": a.out_shape[0],
            "t": a.out_shape[1],
            "k": a.in_shape[0],
            "l": a.in_shape[1],
        }
        return [slot_size[c[0]] for c in self.classes]

    def mults(self, a: JacobianSpec, b: JacobianSpec) -> int:
        if not self.multiplies:
            return 0
        sizes = self.class_sizes(a, b)
        return math.prod(sizes[c] for c in self.counted())

    def describe(self) -> str:
        names = ["".join(c) for c in self.classes]
        if not self.multiplies:
            return "no multiplication (index renaming)"
        counted = " * ".join(f"|{names[c]}|" for c in self.counted()) or "1"
        return f"mults = {counted}"


@functools.lru_cache(maxsize=None)
def contraction_plan(code_a: int, code_b: int) -> ContractionPlan:
    pa, pb = code_to_pattern(code_a), code_to_pattern(code_b)
    if pa is COPY_GRADIENT or pb is COPY_GRADIENT:
        raise InvalidCode("copy gradients have no symbolic contraction plan")
    uf = _UnionFind("pqstkl")
    for u, v in pa.deltas:
        uf.union(_A_MAP[u], _A_MAP[v])
    for u, v in pb.deltas:
        uf.union(_B_MAP[u], _B_MAP[v])
    roots: dict = {}
    for slot in "pqstkl":
        roots.setdefault(uf.find(slot), []).append(slot)
    classes = tuple(tuple(v) for v in roots.values())
    class_of = {s: n for n, c in enumerate(classes) for s in c}

    a_axes = tuple(class_of[_A_MAP[s]] for s in _dense_order(pa))
    b_axes = tuple(class_of[_B_MAP[s]] for s in _dense_order(pb))
    internal = {n for n, c in enumerate(classes) if set(c) <= {"s", "t"}}
    free_dense = (set(a_axes) | set(b_axes)) - internal
    summed = tuple(sorted(internal & set(a_axes) & set(b_axes)))
    if internal - set(summed):
        raise UnsupportedPattern(f"dangling contracted class in {code_a} x {code_b}")

    deltas = set()
    for c in classes:
        outs = [s for s in c if s in "pq"]
        ins = [s for s in c if s in "kl"]
        if outs and ins:
            r_out = "i" if outs[0] == "p" else "j"
            r_in = "k" if ins[0] == "k" else "l"
            deltas.add((r_out, r_in))

    has_a = bool(pa.dense_factors)
    has_b = bool(pb.dense_factors)
    if free_dense:
        dense_slots = set()
        for n in free_dense:
            c = classes[n]
            outs = [s for s in c if s in "pq"]
            slot = outs[0] if outs else [s for s in c if s in "kl"][0]
            dense_slots.add({"p": "i", "q": "j", "k": "k", "l": "l"}[slot])
        result = DeltaPattern((frozenset(dense_slots),), frozenset(deltas))
    elif has_a or has_b:
        result = DeltaPattern((frozenset(),), frozenset(deltas))
    else:
        result = DeltaPattern((), frozenset(deltas))
    result_code = pattern_to_code(result)
    result_axes = tuple(class_of[_RESULT_MAP[s]] for s in _dense_order(result))
    return ContractionPlan(
        code_a=code_a,
        code_b=code_b,
        result_code=result_code,
        a_axes=a_axes,
        b_axes=b_axes,
        result_axes=result_axes,
        summed=summed,
        classes=classes,
        a_has_factor=has_a,
        b_has_factor=has_b,
    )


def _remapped_pattern(pattern, remapped: set) -> DeltaPattern:
    """Pattern after an index remap (slice/concat) acting on ``remapped`` slots."""
    if pattern is COPY_GRADIENT:
        raise InvalidCode("nested copy gradients are handled separately")
    deltas = set(pattern.deltas)
    dense = set(pattern.dense)
    for u, v in list(deltas):
        if u in remapped or v in remapped:
            deltas.discard((u, v))
            dense |= {u, v}
    dense |= remapped
    if dense:
        # the dense factor of a surviving delta pair lives on its output slot
        for u, v in deltas:
            if v in dense and u not in dense:
                dense.discard(v)
                dense.add(u)
        return DeltaPattern((frozenset(dense),), frozenset(deltas))
    return pattern


def _remapped_slots(copy: JacobianSpec, side: str) -> set:
    rows = not (copy.in_shape[0] == 1 and copy.out_shape[0] == 1)
    cols = not (copy.in_shape[1] == 1 and copy.out_shape[1] == 1)
    names = ("i", "j") if side == "out" else ("k", "l")
    return {n for n, flag in zip(names, (rows, cols)) if flag}


@functools.lru_cache(maxsize=None)
def contract(a: JacobianSpec, b: JacobianSpec) -> tuple:
    """Chain ``a`` (edge into a vertex) with ``b`` (edge out of it).

    Returns ``(result_spec, mults)``.  The result maps ``a``'s source to
    ``b``'s destination.
    """
    if a.out_shape != b.in_shape:
        raise ShapeMismatch(f"cannot chain {a} into {b}")
    in_shape, out_shape = a.in_shape, b.out_shape
    if a.sparsity == COPY or b.sparsity == COPY:
        return JacobianSpec(_copy_result_code(a, b), in_shape, out_shape), 0
    plan = contraction_plan(a.sparsity, b.sparsity)
    return JacobianSpec(plan.result_code, in_shape, out_shape), plan.mults(a, b)


def _copy_result_code(a: JacobianSpec, b: JacobianSpec) -> int:
    if a.sparsity == COPY and b.sparsity == COPY:
        if a.is_identity_copy or b.is_identity_copy:
            return COPY
        return DENSE if a.in_shape == b.out_shape else COPY
    if a.sparsity == COPY:
        if a.is_identity_copy:
            return b.sparsity
        remapped = _remapped_slots(a, "in")
        return pattern_to_code(_remapped_pattern(b.pattern, remapped))
    if b.is_identity_copy:
        return a.sparsity
    remapped = _remapped_slots(b, "out")
    return pattern_to_code(_remapped_pattern(a.pattern, remapped))


# --------------------------------------------------------------------------
# additive merge


def _merge_view(spec: JacobianSpec) -> DeltaPattern:
    """Pattern used when ``spec`` takes part in a sum."""
    if spec.sparsity == COPY:
        if spec.is_identity_copy:
            return DeltaPattern(((frozenset(),)), _CODE_PATTERNS[-6].deltas)
        return _CODE_PATTERNS[DENSE]
    p = _CODE_PATTERNS[spec.sparsity]
    if p.is_identity:
        # 1 + x is never a bare delta product: treat the unit as a constant
        return DeltaPattern((frozenset(),), p.deltas)
    return p


def covers(code: int, pattern: DeltaPattern) -> bool:
    """True if every tensor of shape ``pattern`` is expressible as ``code``."""
    p = _CODE_PATTERNS[code]
    if not p.deltas <= pattern.deltas:
        return False
    if p.is_identity:
        return pattern == p
    known = set(p.dense)
    for u, v in p.deltas:
        if u in known or v in known:
            known |= {u, v}
    for u, v in pattern.deltas - p.deltas:
        if u not in known or v not in known:
            return False
    for s in pattern.dense:
        cls = {s}
        partner = pattern.partner(s)
        if partner:
            cls.add(partner)
        if not cls & known:
            return False
    return True


def _storage_rank(code: int) -> tuple:
    p = _CODE_PATTERNS[code]
    if p.is_identity:
        size = -1
    else:
        size = len(p.dense)
    return (size, -len(p.deltas), abs(code), code)


@functools.lru_cache(maxsize=None)
def _merge_code(code_a: int, a_identity_copy: bool, code_b: int, b_identity_copy: bool) -> int:
    def view(code, ident):
        if code == COPY:
            return _merge_view(JacobianSpec(COPY, (1, 1), (1, 1) if ident else (1, 2)))
        return _merge_view(JacobianSpec(code, (1, 1), (1, 1)))

    va, vb = view(code_a, a_identity_copy), view(code_b, b_identity_copy)
    candidates = [c for c in _CODE_PATTERNS if covers(c, va) and covers(c, vb)]
    return min(candidates, key=_storage_rank)


@functools.lru_cache(maxsize=None)
def merge_add(a: JacobianSpec, b: JacobianSpec) -> JacobianSpec:
    """Sparsity of ``a + b``: the tightest code covering both supports."""
    if a.in_shape != b.in_shape or a.out_shape != b.out_shape:
        raise ShapeMismatch(f"cannot add {a} and {b}")
    if a.sparsity == b.sparsity and a.sparsity != COPY and not a.pattern.is_identity:
        return a
    code = _merge_code(a.sparsity, a.is_identity_copy, b.sparsity, b.is_identity_copy)
    return JacobianSpec(code, a.in_shape, a.out_shape)


# --------------------------------------------------------------------------
# numeric kernels


def _letters(n: int) -> str:
    return "abcdefghijklmnopqrstuvwxyz"[:n]


def contract_numeric(a: JacobianSpec, data_a, b: JacobianSpec, data_b) -> tuple:
    """Numeric counterpart of :func:`contract`.

    Returns ``(spec, data, mults)`` where ``mults`` is the number of scalar
    multiplications the kernel actually executed.
    """
    spec, _ = contract(a, b)
    if a.sparsity == COPY and b.sparsity == COPY:
        sel_a, sel_b = np.asarray(data_a), np.asarray(data_b)
        flat_a = sel_a.ravel()
        composed = np.where(sel_b >= 0, flat_a[np.maximum(sel_b, 0)], -1)
        if spec.sparsity == COPY:
            return spec, composed, 0
        dense = _copy_dense(JacobianSpec(COPY, a.in_shape, b.out_shape), composed)
        return spec, extract_data(spec, dense), 0
    if a.sparsity == COPY:
        sel = np.asarray(data_a)
        if a.is_identity_copy:
            return spec, data_b, 0
        xb = materialize_dense(b, data_b)
        out = np.zeros(spec.dense_shape)
        n_mid = sel.size
        xb_flat = xb.reshape(*b.out_shape, n_mid)
        out_flat = out.reshape(*b.out_shape, a.in_shape[0] * a.in_shape[1])
        # a source read by several copies collects all their sensitivities
        for m, src in enumerate(sel.ravel()):
            if src >= 0:
                out_flat[:, :, src] += xb_flat[:, :, m]
        return spec, extract_data(spec, out), 0
    if b.sparsity == COPY:
        sel = np.asarray(data_b)
        if b.is_identity_copy:
            return spec, data_a, 0
        xa = materialize_dense(a, data_a)
        n_mid = a.out_shape[0] * a.out_shape[1]
        xa_flat = xa.reshape(n_mid, *a.in_shape)
        out = np.zeros(spec.dense_shape)
        out_flat = out.reshape(-1, *a.in_shape)
        for o, src in enumerate(sel.ravel()):
            if src >= 0:
                out_flat[o] = xa_flat[src]
        return spec, extract_data(spec, out), 0

    plan = contraction_plan(a.sparsity, b.sparsity)
    if not plan.a_has_factor and not plan.b_has_factor:
        return spec, None, 0
    sizes = plan.class_sizes(a, b)
    letters = _letters(len(plan.classes))
    res = "".join(letters[c] for c in plan.result_axes)
    if not plan.multiplies:
        data, axes = (data_a, plan.a_axes) if plan.a_has_factor else (data_b, plan.b_axes)
        src = "".join(letters[c] for c in axes)
        return spec, np.einsum(f"{src}->{res}", np.asarray(data, dtype=float)), 0
    order = list(plan.result_axes) + list(plan.summed)
    shape = [sizes[c] for c in order]

    def expand(data, axes):
        arr = np.asarray(data, dtype=float)
        if arr.ndim:
            perm = sorted(range(len(axes)), key=lambda n: order.index(axes[n]))
            arr = arr.transpose(perm)
        view_shape = [sizes[c] if c in axes else 1 for c in order]
        return arr.reshape(view_shape)

    prod = expand(data_a, plan.a_axes) * expand(data_b, plan.b_axes)
    prod = np.broadcast_to(prod, shape) if prod.shape != tuple(shape) else prod
    executed = prod.size
    if plan.summed:
        prod = prod.sum(axis=tuple(range(len(plan.result_axes), len(order))))
    return spec, np.asarray(prod, dtype=float), executed


def convert_data(src: JacobianSpec, data, dst: JacobianSpec):
    """Re-express ``data`` of ``src`` in the layout of the covering ``dst``."""
    if src.sparsity == dst.sparsity and src.sparsity != COPY:
        return data
    return extract_data(dst, materialize_dense(src, data))


def add_numeric(a: JacobianSpec, data_a, b: JacobianSpec, data_b) -> tuple:
    """Sum of two numeric edges; returns ``(spec, data, adds)``."""
    spec = merge_add(a, b)
    da = convert_data(a, data_a, spec)
    db = convert_data(b, data_b, spec)
    return spec, np.asarray(da, dtype=float) + np.asarray(db, dtype=float), merge_adds(spec)


def merge_adds(spec: JacobianSpec) -> int:
    shape = spec.data_shape()
    return 1 if shape == () else (math.prod(shape) if shape else 0)


# --------------------------------------------------------------------------
# generated table


def generate_table() -> dict:
    """Result code for every ordered pair of pattern codes (copy rows excluded)."""
    table = {}
    for ca in sorted(_CODE_PATTERNS):
        for cb in sorted(_CODE_PATTERNS):
            table[(ca, cb)] = contraction_plan(ca, cb).result_code
    return table


def format_table() -> str:
    """Human-readable audit listing of the contraction table."""
    lines = [
        "# contraction table: first edge a (code), second edge b (code)",
        "# a.code b.code -> result  | a pattern | b pattern | result pattern | count rule",
    ]
    for ca in sorted(_CODE_PATTERNS):
        for cb in sorted(_CODE_PATTERNS):
            plan = contraction_plan(ca, cb)
            lines.append(
                f"{ca:>4} {cb:>4} -> {plan.result_code:>4} | "
                f"{_CODE_PATTERNS[ca].describe():<14} | {_CODE_PATTERNS[cb].describe():<14} | "
                f"{_CODE_PATTERNS[plan.result_code].describe():<14} | {plan.describe()}"
            )
    for code in sorted(_CODE_PATTERNS):
        lines.append(f"  -1 {code:>4} -> {code:>4} | copy (same shape) keeps the other code, 0 mults")
        lines.append(f"{code:>4}   -1 -> {code:>4} | copy (same shape) keeps the other code, 0 mults")
    lines.append("  -1   -1 ->   -1 | copy chains compose their index maps, 0 mults")
    lines.append("# shape-changing copies densify the remapped side, 0 mults")
    return "\n".join(lines) + "\n"
