import numpy as np
import pytest

from crosscountry.graph import CompGraph
from crosscountry.sparsity import COPY, JacobianSpec, code_to_pattern
from crosscountry.tasks import worked_example
from crosscountry.trace import trace

SCALAR_DENSE = JacobianSpec(1, (1, 1), (1, 1))

# vertex ids of the two-input, two-output worked example
X1, X2, V1, V2, Y1, Y2 = range(6)


def worked_graph() -> CompGraph:
    g = CompGraph(2, 2, 2)
    for src, dst in [(0, 2), (1, 2), (2, 3), (2, 5), (3, 4), (3, 5)]:
        g.add_edge(src, dst, SCALAR_DENSE)
    return g


@pytest.fixture
def worked():
    return worked_graph()


@pytest.fixture
def worked_program():
    return worked_example()


class _UF:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)


_A_SLOTS = {"i": "s", "j": "t", "k": "k", "l": "l"}
_B_SLOTS = {"i": "p", "j": "q", "k": "s", "l": "t"}


def random_data(rng, spec: JacobianSpec, integer: bool = True):
    """Data for ``spec``; small integers keep dense-oracle sums exact."""
    if spec.sparsity == COPY:
        if spec.is_identity_copy:
            return np.arange(np.prod(spec.out_shape)).reshape(spec.out_shape)
        n_in = spec.in_shape[0] * spec.in_shape[1]
        return rng.integers(-1, n_in, size=spec.out_shape)
    shape = spec.data_shape()
    if shape is None:
        return None
    if integer:
        return rng.integers(-3, 4, size=shape).astype(float)
    return rng.normal(size=shape)


def random_pair(rng, ca: int, cb: int, max_size: int = 4):
    """Shape-consistent specs for codes ``ca`` (first) and ``cb`` (second)."""
    uf = _UF("pqstkl")
    for code, slots in ((ca, _A_SLOTS), (cb, _B_SLOTS)):
        if code == COPY:
            continue
        for u, v in code_to_pattern(code).deltas:
            uf.union(slots[u], slots[v])
    size = {}
    for s in "pqstkl":
        root = uf.find(s)
        if root not in size:
            size[root] = int(rng.integers(1, max_size + 1))
    sz = {s: size[uf.find(s)] for s in "pqstkl"}
    a = JacobianSpec(ca, (sz["k"], sz["l"]), (sz["s"], sz["t"]))
    b = JacobianSpec(cb, (sz["s"], sz["t"]), (sz["p"], sz["q"]))
    return a, b


def dense_contract(a4: np.ndarray, b4: np.ndarray) -> np.ndarray:
    """Dense chain rule for the first edge ``a4`` followed by ``b4``."""
    return np.einsum("pqst,stkl->pqkl", b4, a4)


def random_graph(seed: int, eliminate: int = 0, vector: bool = False) -> CompGraph:
    from crosscountry.randgen import random_program

    rng = np.random.default_rng(seed)
    p = random_program(seed, n_in=int(rng.integers(1, 4)), n_out=int(rng.integers(1, 4)),
                       n_intermediates=int(rng.integers(3, 10)), vector=vector)
    g = trace(p)
    if eliminate:
        from crosscountry.elimination import eliminate_vertex

        for v in list(rng.permutation(list(g.intermediates)))[:eliminate]:
            eliminate_vertex(g, int(v))
    return g
