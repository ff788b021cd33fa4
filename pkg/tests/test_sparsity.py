import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crosscountry.contraction_table import TABLE
from crosscountry.errors import InvalidCode, ShapeMismatch, UnsupportedPattern
from crosscountry.sparsity import (
    ALL_CODES,
    COPY,
    COPY_GRADIENT,
    JacobianSpec,
    add_numeric,
    code_to_pattern,
    contract,
    contract_numeric,
    contraction_plan,
    extract_data,
    materialize_dense,
    merge_add,
    pattern_to_code,
)

from conftest import _UF, dense_contract, random_data, random_pair

PATTERN_CODES = [c for c in ALL_CODES if c != COPY]


def spec(code, in_shape, out_shape):
    return JacobianSpec(code, in_shape, out_shape)


# -- code table --------------------------------------------------------------


def test_there_are_21_codes():
    assert len(ALL_CODES) == 20
    assert sorted(ALL_CODES) == [c for c in range(-10, 11) if c != 0]
    # together with the reserved no-edge code 0 the table has 21 rows


@pytest.mark.parametrize(
    "code, dense, deltas",
    [
        (6, {"i", "j"}, {("i", "k"), ("j", "l")}),
        (1, {"i", "j", "k", "l"}, set()),
        (-7, None, {("i", "l"), ("j", "k")}),
        (10, set(), {("i", "k"), ("j", "l")}),
        (-10, set(), {("i", "l"), ("j", "k")}),
    ],
)
def test_code_to_pattern_examples(code, dense, deltas):
    p = code_to_pattern(code)
    assert set(p.deltas) == deltas
    if dense is None:
        assert p.dense_factors == ()
    else:
        assert set(p.dense) == dense and len(p.dense_factors) == 1


def test_copy_code_is_marker():
    assert code_to_pattern(-1) is COPY_GRADIENT


@pytest.mark.parametrize("code", [0, 11, -11, 100])
def test_invalid_codes(code):
    with pytest.raises(InvalidCode):
        code_to_pattern(code)


@pytest.mark.parametrize("code", PATTERN_CODES)
def test_pattern_round_trip(code):
    assert pattern_to_code(code_to_pattern(code)) == code


def test_patterns_are_distinct():
    pats = [code_to_pattern(c) for c in PATTERN_CODES]
    assert len(set(pats)) == len(pats)


def test_delta_tied_sizes_must_agree():
    with pytest.raises(ShapeMismatch):
        spec(-6, (2, 3), (3, 2))
    with pytest.raises(ShapeMismatch):
        spec(9, (2, 3), (2, 3))  # ties i with l and j with k
    spec(9, (3, 2), (2, 3))


def test_non_positive_shapes_rejected():
    with pytest.raises(ShapeMismatch):
        spec(1, (0, 1), (1, 1))


# -- dense materialisation ----------------------------------------------------


def test_materialize_identity():
    d = materialize_dense(spec(-6, (2, 2), (2, 2)))
    idx = np.indices(d.shape)
    expect = (idx[0] == idx[2]) & (idx[1] == idx[3])
    np.testing.assert_array_equal(d, expect.astype(float))


def test_materialize_code9_vector():
    # T_i with i tied to l and j tied to k; sizes i = l = 2, j = k = 1
    s = spec(9, (1, 2), (2, 1))
    d = materialize_dense(s, np.array([5.0, 7.0]))
    assert d.shape == (2, 1, 1, 2)
    for i, j, k, l in itertools.product(range(2), range(1), range(1), range(2)):
        expect = [5.0, 7.0][i] if (i == l and j == k) else 0.0
        assert d[i, j, k, l] == expect


def test_materialize_code0_is_error():
    with pytest.raises(InvalidCode):
        materialize_dense(JacobianSpec(0, (1, 1), (1, 1)))


def test_materialize_wrong_data_shape():
    with pytest.raises(ShapeMismatch):
        materialize_dense(spec(8, (3, 1), (3, 1)), np.ones(2))


def test_copy_map_materialize():
    s = spec(COPY, (2, 2), (1, 2))
    d = materialize_dense(s, np.array([[2, 3]]))  # second row of a 2x2 value
    np.testing.assert_array_equal(d.reshape(2, 4), np.eye(4)[[2, 3]])


def test_equal_shape_copy_must_be_identity():
    s = spec(COPY, (2, 2), (2, 2))
    materialize_dense(s, np.arange(4).reshape(2, 2))
    with pytest.raises(UnsupportedPattern):
        materialize_dense(s, np.array([[0, 2], [1, 3]]))


@pytest.mark.parametrize("code", PATTERN_CODES)
def test_extract_inverts_materialize(code):
    rng = np.random.default_rng(abs(code))
    a, _ = random_pair(rng, code, 1)
    data = random_data(rng, a, integer=False)
    back = extract_data(a, materialize_dense(a, data))
    if data is None:
        assert back is None
    else:
        np.testing.assert_array_equal(back, data)


# -- contraction examples -----------------------------------------------------


def test_identity_is_a_renaming():
    b = spec(1, (2, 3), (4, 1))
    r, m = contract(spec(-6, (2, 3), (2, 3)), b)
    assert r == b and m == 0
    a = spec(8, (3, 1), (3, 1))
    r, m = contract(a, spec(-6, (3, 1), (3, 1)))
    assert r == a and m == 0


def test_constant_times_dense():
    r, m = contract(spec(10, (2, 2), (2, 2)), spec(1, (2, 2), (2, 2)))
    assert r.sparsity == 1
    assert m == 16


def test_scalar_product():
    r, m = contract(spec(1, (1, 1), (1, 1)), spec(1, (1, 1), (1, 1)))
    assert r == spec(1, (1, 1), (1, 1)) and m == 1


def test_diagonal_then_swap_with_consistent_shapes():
    # code 6 on (2,3) followed by code 9 mapping (2,3) -> (3,2)
    r, m = contract(spec(6, (2, 3), (2, 3)), spec(9, (2, 3), (3, 2)))
    assert r.sparsity == 7
    assert m == 6


def test_contract_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        contract(spec(1, (1, 1), (2, 1)), spec(1, (3, 1), (1, 1)))


def test_elementwise_chain_costs_elementwise():
    # diag(a) then diag(b) on a length-5 vector: 5 products
    r, m = contract(spec(8, (5, 1), (5, 1)), spec(8, (5, 1), (5, 1)))
    assert r.sparsity == 8 and m == 5


def test_copy_passes_code_through():
    b = spec(8, (3, 1), (3, 1))
    r, m = contract(spec(COPY, (3, 1), (3, 1)), b)
    assert r.sparsity == 8 and m == 0


def test_frozen_table_matches_regeneration():
    regenerated = {
        (ca, cb): (contraction_plan(ca, cb).result_code, contraction_plan(ca, cb).describe())
        for ca in PATTERN_CODES
        for cb in PATTERN_CODES
    }
    assert regenerated == TABLE
    assert len(TABLE) == len(PATTERN_CODES) ** 2


# -- soundness against the dense oracle ------------------------------------------

code_pairs = st.tuples(st.sampled_from(ALL_CODES), st.sampled_from(ALL_CODES))


@settings(max_examples=400, deadline=None)
@given(code_pairs, st.integers(0, 2**32 - 1))
def test_contraction_soundness(pair, seed):
    ca, cb = pair
    rng = np.random.default_rng(seed)
    a, b = random_pair(rng, ca, cb)
    da, db = random_data(rng, a), random_data(rng, b)
    expect = dense_contract(materialize_dense(a, da), materialize_dense(b, db))
    r, data, executed = contract_numeric(a, da, b, db)
    np.testing.assert_array_equal(materialize_dense(r, data), expect)
    sym, mults = contract(a, b)
    assert sym == r
    assert executed == mults
    dense_count = np.prod(a.dense_shape) * b.out_shape[0] * b.out_shape[1]
    assert mults <= dense_count
    if ca == 1 and cb == 1:
        assert mults == dense_count


def _same_shape_pair(rng, ca, cb, max_size=4):
    uf = _UF("ijkl")
    for code in (ca, cb):
        if code != COPY:
            for u, v in code_to_pattern(code).deltas:
                uf.union(u, v)
    size = {}
    for s in "ijkl":
        size.setdefault(uf.find(s), int(rng.integers(1, max_size + 1)))
    sz = {s: size[uf.find(s)] for s in "ijkl"}
    shapes = ((sz["k"], sz["l"]), (sz["i"], sz["j"]))
    return spec(ca, *shapes), spec(cb, *shapes)


@settings(max_examples=400, deadline=None)
@given(code_pairs, st.integers(0, 2**32 - 1))
def test_merge_covers_both_supports(pair, seed):
    rng = np.random.default_rng(seed)
    a, b = _same_shape_pair(rng, *pair)
    m = merge_add(a, b)
    assert m == merge_add(b, a) or m.sparsity in (1, -1)
    da, db = random_data(rng, a, integer=False), random_data(rng, b, integer=False)
    total, data, _ = add_numeric(a, da, b, db)
    assert total == m
    dense_sum = materialize_dense(a, da) + materialize_dense(b, db)
    np.testing.assert_allclose(materialize_dense(m, data), dense_sum, rtol=0, atol=1e-14)
    # structural support: the merged pattern dominates both operands
    supp_m = _support(m)
    assert np.all(supp_m >= _support(a)) and np.all(supp_m >= _support(b))


def _support(s):
    if s.sparsity == COPY:
        # a non-identity copy may map anywhere; an identity copy is the diagonal
        if s.is_identity_copy:
            return materialize_dense(JacobianSpec(-6, s.in_shape, s.out_shape)) != 0
        return np.ones(s.dense_shape, dtype=bool)
    shape = s.data_shape()
    data = None if shape is None else np.ones(shape)
    return materialize_dense(s, data) != 0


@pytest.mark.parametrize(
    "ca, cb, expect",
    [(6, 6, 6), (8, 2, 2), (-6, -7, 1), (-6, -6, 10), (10, -6, 10), (8, 9, 1)],
)
def test_merge_examples(ca, cb, expect):
    sq = (3, 3)
    assert merge_add(spec(ca, sq, sq), spec(cb, sq, sq)).sparsity == expect


def test_merge_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        merge_add(spec(1, (1, 1), (2, 1)), spec(1, (1, 1), (3, 1)))
