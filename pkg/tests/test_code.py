from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings

from mindist.code import (
    change_field,
    dual,
    is_mds,
    min_distance_brute,
    min_weight_messages,
    new_code,
    puncture,
    same_row_space,
    shorten,
    singleton_bound,
    weight_distribution,
)
from mindist.errors import (
    BudgetExceeded,
    ColoopPuncture,
    DimensionUnderflow,
    NotPrime,
    RankDeficient,
    UnsupportedField,
    ZeroColumn,
    ZeroDual,
)
from mindist.exact import Field

from conftest import codes, naive_distance, naive_weights


def test_g1_brute(g1):
    r = min_distance_brute(g1)
    assert (r.d, r.projective_count) == (2, 6)
    assert r.weight_distribution == {0: 1, 2: 6, 4: 1}


def test_hamming_brute(hamming):
    assert weight_distribution(hamming) == {0: 1, 3: 7, 4: 7, 7: 1}
    assert min_distance_brute(hamming).projective_count == 7


def test_g2_is_mds(g2):
    assert min_distance_brute(g2).d == 3
    assert is_mds(g2)


def test_construction_errors():
    with pytest.raises(RankDeficient):
        new_code(Field(5), [[1, 2], [2, 4]])
    with pytest.raises(ZeroColumn):
        new_code(Field(2), [[1, 0, 1], [0, 0, 1]])
    with pytest.raises(NotPrime):
        new_code(Field(6), [[1]])


def test_enumeration_errors(c2, g1):
    with pytest.raises(UnsupportedField):
        min_distance_brute(c2)
    with pytest.raises(BudgetExceeded):
        min_distance_brute(g1, budget=4)


def test_puncture_shorten_examples(g2, g1):
    F7 = Field(7)
    assert shorten(g2, 2).G.rows == ((1, 0, 1, 1), (0, 1, 1, 2))
    assert same_row_space(puncture(g2, 4), change_field(g1, F7))
    with pytest.raises(ColoopPuncture):
        puncture(new_code(Field(2), [[1, 0], [0, 1]]), 0)
    with pytest.raises(DimensionUnderflow):
        shorten(new_code(Field(2), [[1, 1, 1]]), 0)
    with pytest.raises(ZeroDual):
        dual(new_code(Field(3), [[1, 0], [0, 1]]))


def test_min_weight_messages(g1):
    msgs = min_weight_messages(g1)
    assert len(msgs) == 6
    assert all(sum(1 for x in g1.encode(m) if x) == 2 for m in msgs)


@settings(max_examples=60, deadline=None)
@given(codes())
def test_weights_match_itertools_oracle(code):
    assert weight_distribution(code) == naive_weights(code)
    assert min_distance_brute(code).d == naive_distance(code)


@settings(max_examples=60, deadline=None)
@given(codes())
def test_weight_total_and_singleton(code):
    dist = weight_distribution(code)
    assert sum(dist.values()) == code.field.p ** code.k
    assert min_distance_brute(code).d <= singleton_bound(code)


@settings(max_examples=60, deadline=None)
@given(codes())
def test_dual_of_dual(code):
    if code.k == code.n:
        return
    D = dual(code)
    assert D.k == code.n - code.k
    assert same_row_space(dual(D), code)
    F = code.field
    for g in code.G.rows:
        for h in D.G.rows:
            assert F.reduce(sum(a * b for a, b in zip(g, h))) == 0


@settings(max_examples=60, deadline=None)
@given(codes(k_range=(2, 4)))
def test_puncture_and_shorten_distances(code):
    d = min_distance_brute(code).d
    for i in range(code.n):
        try:
            P = puncture(code, i)
        except ColoopPuncture:
            pass
        else:
            assert P.n == code.n - 1 and P.k == code.k
            assert d - 1 <= min_distance_brute(P).d <= d
        S = shorten(code, i)
        assert (S.n, S.k) == (code.n - 1, code.k - 1)
        assert min_distance_brute(S).d >= d
        # shortened words are the codewords vanishing at i, with i removed
        zero_at_i = {
            tuple(x for j, x in enumerate(code.encode(m)) if j != i)
            for m in _all_messages(code)
            if code.encode(m)[i] == 0
        }
        assert zero_at_i == {S.encode(m) for m in _all_messages(S)}


def _all_messages(code):
    return product(range(code.field.p), repeat=code.k)
