from __future__ import annotations

import random
from math import comb

import numpy as np
import pytest
import sympy

from mindist.betti import BettiTable, graded_betti
from mindist.code import new_code
from mindist.errors import (
    BadSupportSize,
    BudgetExceeded,
    InsufficientBounds,
    ProportionalColumns,
    WrongDimension,
    ZeroColumn,
    ZeroIdeal,
)
from mindist.exact import Field, rank_array
from mindist.matroid import circuits, girth, tutte
from mindist.orlik_terao import (
    alpha_iot,
    linear_strand_length,
    no_linear_syzygy_predicate,
    ot_betti,
    ot_distance_report,
    ot_generators,
    reciprocal_vanishing,
    strand_length,
)
from mindist.poly import MultiPoly

PAIR_TABLE = {(0, 0): 1, (1, 2): 4, (2, 3): 2, (2, 4): 3, (3, 5): 2}


def mono(F, n, support):
    return MultiPoly.monomial(F, [1 if i in support else 0 for i in range(n)])


def predicted_numerator(code):
    """K(t) with Hilb(S/I, t) = K(t) / (1 - t)^n, from T(x, 0)."""
    t = sympy.symbols("t")
    T = tutte(code)
    k, n = code.k, code.n
    # Poincare polynomial pi(u) = u^k T(1 + 1/u, 0)
    u = sympy.symbols("u")
    pi = sympy.expand(sum(c * u**k * (1 + 1 / u) ** i for (i, j), c in T.coeffs.items() if j == 0))
    return sympy.expand(sympy.cancel((1 - t) ** n * pi.subs(u, t / (1 - t))))


def betti_numerator(B: BettiTable):
    t = sympy.symbols("t")
    return sympy.expand(sum((-1) ** i * b * t**j for (i, j), b in B.entries.items()))


def test_koszul_on_variables():
    F = Field(101)
    gens = [mono(F, 3, {i}) for i in range(3)]
    B = graded_betti(gens, F, 3, 4)
    assert B.entries == {(i, i): comb(3, i) for i in range(4)}


def test_principal_and_complete_intersection():
    F = Field(7)
    assert graded_betti([mono(F, 2, {0})], F, 2, 3).entries == {(0, 0): 1, (1, 1): 1}
    assert graded_betti([mono(F, 2, {0, 1})], F, 2, 3).entries == {(0, 0): 1, (1, 2): 1}
    ci = graded_betti([mono(F, 4, {0, 1}), mono(F, 4, {2, 3})], F, 4, 6)
    assert ci.entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}


def test_table_bounds():
    F = Field(7)
    B = graded_betti([mono(F, 2, {0})], F, 1, 1)
    with pytest.raises(InsufficientBounds):
        B.get(2, 2)
    with pytest.raises(BudgetExceeded):
        graded_betti([mono(F, 9, {0})], F, 1, 1)


@pytest.mark.parametrize("name", ["braid", "c2"])
@pytest.mark.parametrize("prime", [32003, 65521])
def test_pair_tables(name, prime, braid, c2):
    code = {"braid": braid, "c2": c2}[name]
    B = ot_betti(code, 4, 6, prime)
    assert B.entries == PAIR_TABLE
    assert betti_numerator(B) == predicted_numerator(code)


def test_pair_strand_and_reports(braid, c2):
    for code in (braid, c2):
        delta, _ = strand_length(code)
        assert delta == 1
    rb, rc = ot_distance_report(braid), ot_distance_report(c2)
    assert (rb.bound, rb.d, rb.tight) == (2, 3, False)
    assert (rc.bound, rc.d, rc.tight) == (2, 2, True)
    assert rb.holds() and rc.holds()


def random_simple_k3(rng, p, n):
    """Random rank-3 code with no zero or parallel columns."""
    while True:
        rows = [[rng.randrange(p) for _ in range(n)] for _ in range(3)]
        try:
            code = new_code(Field(p), rows)
            ot_generators(code)
        except (ValueError, ZeroColumn, ProportionalColumns):
            continue
        return code


def test_random_tables_match_hilbert_series():
    rng = random.Random(2024)
    for _ in range(10):
        p = rng.choice([3, 5, 7])
        n = rng.randint(4, 7)
        code = random_simple_k3(rng, p, n)
        span = n - 3
        B = ot_betti(code, span + 1, 2 * span)
        assert all(i <= span for i, _ in B.entries)
        assert betti_numerator(B) == predicted_numerator(code)


def test_random_generators_and_bound():
    rng = random.Random(99)
    for _ in range(15):
        code = random_simple_k3(rng, rng.choice([3, 5, 7, 11]), rng.randint(4, 7))
        I = ot_generators(code)
        assert reciprocal_vanishing(code, I, trials=5, seed=1)
        a = alpha_iot(code, I)
        assert a == girth(code) - 1
        B = ot_betti(code, 2, a + 2, ideal=I)
        sizes = [c.size for c in circuits(code)]
        for j in range(a, a + 3):
            assert B.get(1, j) <= sizes.count(j + 1)
        # every generator of the lowest degree is minimal
        assert B.get(1, a) == _rank_in_degree(I, a)
        rep = ot_distance_report(code)
        assert rep.holds()


def _rank_in_degree(I, a):
    rows = [g.vector(a) for g in I.generators if g.degree == a]
    return rank_array(I.field, np.vstack(rows))


def test_errors(g1):
    F = Field(5)
    with pytest.raises(ProportionalColumns):
        ot_generators(new_code(F, [[1, 2, 0], [0, 0, 1]]))
    with pytest.raises(ZeroIdeal):
        alpha_iot(new_code(F, [[1, 0], [0, 1]]))
    with pytest.raises(WrongDimension):
        ot_distance_report(new_code(F, [[1, 0, 1], [0, 1, 1]]))
    with pytest.raises(BadSupportSize):
        no_linear_syzygy_predicate([{0, 1}])
    with pytest.raises(InsufficientBounds):
        linear_strand_length(BettiTable({(0, 0): 1, (1, 2): 3}, 1, 2), 2)


def test_no_linear_syzygy_predicate():
    assert no_linear_syzygy_predicate([{0, 1, 2}])
    assert no_linear_syzygy_predicate([{0, 1, 2}, {2, 3, 4}])
    assert not no_linear_syzygy_predicate([{0, 1, 2}, {0, 1, 3}, {0, 2, 3}])
    assert not no_linear_syzygy_predicate([{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}])
