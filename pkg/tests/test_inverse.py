from __future__ import annotations

import itertools
from math import comb

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from mindist.code import new_code
from mindist.errors import BadCharacteristic, NotAnIntersectionPoint, ZeroForm
from mindist.exact import Field
from mindist.graded import FormSet, distance_via_afold, dual_forms
from mindist.inverse import (
    RATIONALS,
    alpha_ann,
    apolar_profile,
    chow_form,
    codeword_derivative_vanishes,
    deriv_span_dim,
    hilbert_function,
    inverse_bound,
    symmetry_check,
    working_code,
)
from mindist.poly import MultiPoly

from conftest import codes

X = sympy.symbols("x0:4")


def sympy_hilbert(code) -> list[int]:
    """Derivative spans of the product of forms, ranked by sympy over Q."""
    k = code.k
    xs = X[:k]
    P = sympy.expand(sympy.prod(
        sum(int(code.field.signed(c)) * x for c, x in zip(col, xs)) for col in code.columns()
    ))
    n = code.n
    out = []
    for i in range(n + 1):
        ders = []
        for combo in itertools.combinations_with_replacement(range(k), i):
            D = P
            for v in combo:
                D = sympy.diff(D, xs[v])
            ders.append(sympy.Poly(D, *xs) if D != 0 else None)
        mons = sorted({m for d in ders if d is not None for m in d.monoms()})
        M = sympy.Matrix([[d.coeff_monomial(m) if d is not None else 0 for m in mons] for d in ders]) if mons else sympy.zeros(1, 1)
        out.append(M.rank() if mons else 0)
    return out


def test_g1_profile(g1):
    P = chow_form(dual_forms(working_code(g1)))
    assert hilbert_function(P) == [1, 3, 6, 3, 1]
    assert alpha_ann(P) == 3
    assert inverse_bound(g1) == 2


def test_g2_profile(g2):
    prof = apolar_profile(chow_form(dual_forms(working_code(g2))))
    assert prof.hf == (1, 3, 6, 6, 3, 1)
    assert prof.alpha == 3 and prof.symmetric
    assert inverse_bound(g2) == 2


def test_single_forms():
    assert alpha_ann(MultiPoly.monomial(RATIONALS, (3,))) == 4
    # in two variables d/dy already kills x^3
    assert alpha_ann(MultiPoly.monomial(RATIONALS, (3, 0))) == 1
    x2_3 = MultiPoly.monomial(RATIONALS, (2, 0, 0))
    assert hilbert_function(x2_3) == [1, 1, 1]


def test_identity_bound():
    assert inverse_bound(new_code(Field(2), [[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 1


def test_characteristic_guard(g1):
    with pytest.raises(BadCharacteristic):
        inverse_bound(g1, Field(2))
    with pytest.raises(BadCharacteristic):
        deriv_span_dim(MultiPoly.monomial(Field(3), (3, 0)), 1)
    assert inverse_bound(g1, Field(5)) == 2


def test_zero_form_rejected():
    with pytest.raises(ZeroForm):
        chow_form(FormSet(RATIONALS, 2, ((1, 0), (0, 0))))


def test_directional_derivative_at_intersection(g1):
    code = working_code(g1)
    # [0:0:1] is where x and y vanish: order 3 kills the product, order 2 does not
    assert codeword_derivative_vanishes(code, (0, 0, 1), 3)
    assert not codeword_derivative_vanishes(code, (0, 0, 1), 2)
    with pytest.raises(NotAnIntersectionPoint):
        codeword_derivative_vanishes(code, (1, 2, 3), 3)


@settings(max_examples=25, deadline=None)
@given(codes(k_range=(1, 3), n_max=6))
def test_hilbert_function_matches_sympy(code):
    P = chow_form(dual_forms(working_code(code)))
    assert hilbert_function(P) == sympy_hilbert(code)


@settings(max_examples=60, deadline=None)
@given(codes(n_max=8))
def test_gorenstein_symmetry(code):
    assert symmetry_check(chow_form(dual_forms(working_code(code))))


@settings(max_examples=40, deadline=None)
@given(codes(k_range=(2, 4), n_max=7), st.permutations(range(4)))
def test_schedule_does_not_matter(code, perm):
    P = chow_form(dual_forms(working_code(code)))
    schedule = [v for v in perm if v < code.k]
    for i in range(P.degree + 1):
        assert deriv_span_dim(P, i, schedule) == deriv_span_dim(P, i)


@settings(max_examples=60, deadline=None)
@given(codes(n_max=8))
def test_bound_below_distance_over_q(code):
    work = working_code(code)
    assert inverse_bound(code) <= distance_via_afold(work)


@settings(max_examples=40, deadline=None)
@given(codes(primes=(11, 13), n_max=8))
def test_bound_below_distance_own_field(code):
    assert inverse_bound(code, code.field) <= distance_via_afold(code)


@settings(max_examples=40, deadline=None)
@given(codes(n_max=7))
def test_alpha_is_first_deficient_degree(code):
    P = chow_form(dual_forms(working_code(code)))
    a = alpha_ann(P)
    k = code.k
    assert all(deriv_span_dim(P, i) == comb(k - 1 + i, k - 1) for i in range(a))
    assert deriv_span_dim(P, a) < comb(k - 1 + a, k - 1)
