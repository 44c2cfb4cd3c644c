from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from mindist.boolean import (
    BoolFn,
    filtration_product_check,
    gr_dims,
    gr_jump_indices,
    ideal_dim,
    ideal_dim_by_rank,
    product_generators,
    prop_check,
    relation_forms,
)
from mindist.catalog import get_example
from mindist.code import min_distance_brute, new_code
from mindist.errors import UnsupportedField
from mindist.exact import Field

from conftest import codes, naive_weights

F2 = Field(2)


def table(f: BoolFn) -> list[int]:
    return [f(x) for x in range(1 << f.n)]


def test_coordinate_truth_tables():
    for n in range(1, 6):
        for i in range(n):
            assert table(BoolFn.coordinate(n, i)) == [(x >> i) & 1 for x in range(1 << n)]


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.integers(0, 1), min_size=n, max_size=n),
    st.lists(st.integers(0, 1), min_size=n, max_size=n),
)))
def test_ring_operations_pointwise(args):
    n, a, b = args
    f, g = BoolFn.linear(n, a), BoolFn.linear(n, b)
    for x in range(1 << n):
        bits = [(x >> i) & 1 for i in range(n)]
        fx = sum(c * v for c, v in zip(a, bits)) % 2
        gx = sum(c * v for c, v in zip(b, bits)) % 2
        assert (f + g)(x) == (fx + gx) % 2
        assert (f * g)(x) == fx * gx
    # idempotent ring
    assert f * f == f and (f + f).is_zero()


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), max_size=4),
    st.integers(0, n + 1),
)))
def test_zero_set_dimension_agrees_with_rank(args):
    n, lin, a = args
    gens = [BoolFn.linear(n, c) for c in lin] + product_generators(n, a)
    assert ideal_dim(gens, n) == ideal_dim_by_rank(gens, n)


def test_small_ideal_dims():
    assert ideal_dim([BoolFn.coordinate(2, 0)], 2) == 2
    assert ideal_dim([BoolFn.coordinate(3, i) for i in range(3)], 3) == 7
    assert ideal_dim([], 3) == 0
    assert ideal_dim(product_generators(3, 0), 3) == 8


def test_rep_and_parity_dims():
    rep21 = get_example("rep-2").code()
    assert gr_dims(rep21).dims == (1, 0, 1)
    assert gr_jump_indices(rep21) == (0, None)
    parity = new_code(F2, [[1, 0, 1], [0, 1, 1]])
    assert gr_dims(parity).dims == (0, 3, 0, 1)
    assert gr_jump_indices(parity) == (1, 1)


def test_hamming_filtration(hamming):
    dims = gr_dims(hamming)
    assert dims.dims == (1, 0, 0, 7, 7, 0, 0, 1)
    assert gr_jump_indices(hamming, dims) == (4, 3)
    assert [prop_check(hamming, a) for a in range(1, 8)] == [True] * 3 + [False] * 4


def test_non_binary_rejected(g2):
    with pytest.raises(UnsupportedField):
        gr_dims(g2)
    with pytest.raises(UnsupportedField):
        relation_forms(g2)


@settings(max_examples=80, deadline=None)
@given(codes(primes=(2,), k_range=(1, 5), n_max=10))
def test_gr_dims_count_codewords_by_weight(code):
    dims = gr_dims(code).dims
    weights = naive_weights(code)
    n = code.n
    assert list(dims) == [weights.get(n - i, 0) for i in range(n + 1)]
    top, literal = gr_jump_indices(code)
    d = min_distance_brute(code).d
    assert top == n - d
    assert sum(dims) == 2**code.k


@settings(max_examples=60, deadline=None)
@given(codes(primes=(2,), k_range=(1, 5), n_max=9))
def test_prop_check_threshold_is_distance(code):
    d = min_distance_brute(code).d
    for a in range(1, code.n + 1):
        assert prop_check(code, a) == (a <= d)


def test_filtration_is_multiplicative():
    for n in range(1, 7):
        for a, b in itertools.product(range(n + 1), repeat=2):
            assert filtration_product_check(n, a, b)
