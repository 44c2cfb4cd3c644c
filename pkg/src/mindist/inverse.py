"""Apolarity of the Chow form: derivative spans, alpha(Ann), and the distance bound."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .code import LinearCode, change_field
from .errors import BadCharacteristic, NotAnIntersectionPoint, ZeroForm
from .exact import Field, rank_array
from .graded import FormSet, dual_forms
from .poly import MultiPoly, monomials, num_monomials

RATIONALS = Field(0)


def _check_char(field: Field, degree: int):
    if field.p and field.p <= degree:
        raise BadCharacteristic(
            f"characteristic {field.p} must exceed the degree {degree} (or be zero)"
        )


def chow_form(forms: FormSet) -> MultiPoly:
    """Product of all the forms."""
    F, k = forms.field, forms.nvars
    if forms.zero_forms():
        raise ZeroForm(f"zero forms at {forms.zero_forms()}")
    P = MultiPoly.constant(F, k)
    for f in forms.forms:
        P = P * MultiPoly.linear(F, f)
    return P


def derivative_rows(P: MultiPoly, order: int, schedule=None) -> np.ndarray:
    """All order-``order`` partial derivatives of P as coefficient rows.

    ``schedule`` permutes the order in which variables are differentiated
    (derivatives commute, so the rows must not depend on it).
    """
    F, k = P.field, P.nvars
    deg = P.degree
    target = deg - order
    ops = monomials(k, order)
    if target < 0:
        return F.zeros((len(ops), 0))
    rows = F.zeros((len(ops), num_monomials(k, target)))
    order_vars = list(schedule) if schedule is not None else list(range(k))
    for r, beta in enumerate(ops):
        Q = P
        for var in order_vars:
            if beta[var]:
                Q = Q.diff(var, beta[var])
        if not Q.is_zero():
            rows[r] = Q.vector(target)
    return rows


def deriv_span_dim(P: MultiPoly, i: int, schedule=None) -> int:
    """Dimension of the span of the order-i partial derivatives of P."""
    _check_char(P.field, P.degree)
    if i > P.degree:
        return 0
    return rank_array(P.field, derivative_rows(P, i, schedule))


def hilbert_function(P: MultiPoly) -> list[int]:
    """HF of the apolar algebra in degrees 0..deg P."""
    return [deriv_span_dim(P, i) for i in range(P.degree + 1)]


def alpha_ann(P: MultiPoly) -> int:
    """Initial degree of Ann(P): first order whose derivatives are dependent."""
    k = P.nvars
    i = 0
    while deriv_span_dim(P, i) == comb(k - 1 + i, k - 1):
        i += 1
    return i


def symmetry_check(P: MultiPoly) -> bool:
    hf = hilbert_function(P)
    return hf == hf[::-1]


@dataclass(frozen=True)
class ApolarProfile:
    P: MultiPoly
    hf: tuple

    @property
    def alpha(self) -> int:
        k = self.P.nvars
        for i, h in enumerate(self.hf):
            if h < comb(k - 1 + i, k - 1):
                return i
        return len(self.hf)

    @property
    def symmetric(self) -> bool:
        return self.hf == self.hf[::-1]


def apolar_profile(P: MultiPoly) -> ApolarProfile:
    return ApolarProfile(P, tuple(hilbert_function(P)))


def working_code(code: LinearCode, field: Field | None = None) -> LinearCode:
    """The code read over the field used for apolarity (Q unless told otherwise)."""
    field = RATIONALS if field is None else field
    if field == code.field:
        return code
    return change_field(code, field)


def inverse_bound(code: LinearCode, field: Field | None = None) -> int:
    """alpha(Ann(cf(C))) - 1, a lower bound for d."""
    work = working_code(code, field)
    _check_char(work.field, work.n)
    return alpha_ann(chow_form(dual_forms(work))) - 1


def directional_derivative(P: MultiPoly, point, order: int) -> MultiPoly:
    """Apply (sum_j q_j d/dx_j)^order to P."""
    F = P.field
    q = [F(x) for x in point]
    out = P
    for _ in range(order):
        acc = MultiPoly(F, P.nvars, {})
        for j, c in enumerate(q):
            if c != 0:
                acc = acc + out.diff(j).scale(c)
        out = acc
        if out.is_zero():
            break
    return out


def codeword_derivative_vanishes(code: LinearCode, point, order: int, field: Field | None = None) -> bool:
    """Whether the directional derivative of the Chow form along ``point`` vanishes.

    ``point`` is a message vector; the forms vanishing there are the zero
    coordinates of the codeword it encodes.  Computed over the code's own
    field unless ``field`` is given.
    """
    work = code if field is None else change_field(code, field)
    _check_char(work.field, work.n)
    forms = dual_forms(work)
    F = work.field
    q = [F(x) for x in point]
    vanishing = sum(
        1 for f in forms.forms if F.reduce(sum(a * b for a, b in zip(f, q))) == 0
    )
    if vanishing < 2:
        raise NotAnIntersectionPoint(f"only {vanishing} forms vanish at {tuple(point)}")
    return directional_derivative(chow_form(forms), q, order).is_zero()
