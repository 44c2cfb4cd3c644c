"""Ideals generated by a-fold products of the dual linear forms, degree by degree.

Every ideal here is generated in a single known degree, so comparisons are
made on graded pieces: the degree-t piece of I(C, a) is R_{t-a} times the span
of the a-fold products, built one degree at a time as R_1 times the previous
piece and kept as a reduced row basis over the degree-t monomials.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .code import LinearCode, is_mds, normalize_column
from .errors import BadRange, BudgetExceeded, NotMDS, ZeroColumn
from .exact import Field, rank_array, span_basis
from .matroid import Matroid, TuttePoly, _binomial_power
from .poly import multiply_by_linear_form, multiply_by_variable, num_monomials, times_all_variables

DEFAULT_ROW_BUDGET = 200_000
DEFAULT_DEGREE_BUDGET = 12
DEFAULT_PRODUCT_SUBSET_BUDGET = 16


@dataclass(frozen=True)
class FormSet:
    """Linear forms in ``nvars`` variables; form i has coefficient tuple ``forms[i]``."""

    field: Field
    nvars: int
    forms: tuple

    @property
    def n(self) -> int:
        return len(self.forms)

    def zero_forms(self) -> list[int]:
        return [i for i, f in enumerate(self.forms) if all(c == 0 for c in f)]


def dual_forms(code: LinearCode) -> FormSet:
    """Form i has the coefficients of column i of G."""
    fs = FormSet(code.field, code.k, tuple(code.columns()))
    if fs.zero_forms():
        raise ZeroColumn(f"zero columns at {fs.zero_forms()}")
    return fs


def _as_forms(obj) -> FormSet:
    return dual_forms(obj) if isinstance(obj, LinearCode) else obj


class ProductIdeals:
    """Cached graded pieces of I(a) for one set of forms.

    Conventions: I(a) is the whole ring for a <= 0 and zero for a > number
    of forms.
    """

    def __init__(
        self,
        forms: FormSet,
        *,
        row_budget: int = DEFAULT_ROW_BUDGET,
        degree_budget: int = DEFAULT_DEGREE_BUDGET,
    ):
        self.fs = forms
        self.field = forms.field
        self.k = forms.nvars
        self.n = forms.n
        self.row_budget = row_budget
        self.degree_budget = degree_budget
        self._levels: dict[int, tuple[dict, np.ndarray]] = {}
        self._bases: dict[tuple[int, int], np.ndarray] = {}

    def level(self, s: int):
        """``(index, rows)``: every s-subset product as a row in degree s."""
        if s in self._levels:
            return self._levels[s]
        F = self.field
        if s == 0:
            out = ({(): 0}, F.array([[1]]))
        else:
            pidx, prows = self.level(s - 1)
            subsets = list(combinations(range(self.n), s))
            index = {S: i for i, S in enumerate(subsets)}
            rows = F.zeros((len(subsets), num_monomials(self.k, s)))
            by_last = defaultdict(list)
            for i, S in enumerate(subsets):
                by_last[S[-1]].append(i)
            for j, targets in by_last.items():
                parents = [pidx[subsets[i][:-1]] for i in targets]
                rows[targets] = multiply_by_linear_form(F, prows[parents], self.k, s - 1, self.fs.forms[j])
            out = (index, rows)
        self._levels[s] = out
        return out

    def products(self, a: int) -> np.ndarray:
        return self.level(a)[1]

    def _check_budget(self, a: int, t: int):
        if t > self.degree_budget:
            raise BudgetExceeded(f"degree {t} exceeds the degree budget {self.degree_budget}")
        rows = comb(self.n, a) * num_monomials(self.k, t - a)
        if rows > self.row_budget:
            raise BudgetExceeded(f"{rows} spanning rows exceed the row budget {self.row_budget}")

    def basis(self, a: int, t: int) -> np.ndarray:
        F = self.field
        N = num_monomials(self.k, t)
        if t < 0 or a > self.n or t < a:
            return F.zeros((0, max(N, 0)))
        if a <= 0:
            A = F.zeros((N, N))
            for i in range(N):
                A[i, i] = F.one
            return A
        key = (a, t)
        if key not in self._bases:
            self._check_budget(a, t)
            if t == a:
                B = span_basis(F, self.products(a))
            else:
                prev = self.basis(a, t - 1)
                B = span_basis(F, times_all_variables(F, prev, self.k, t - 1))
            self._bases[key] = B
        return self._bases[key]

    def dim(self, a: int, t: int) -> int:
        return self.basis(a, t).shape[0]

    def full(self, t: int) -> int:
        return num_monomials(self.k, t)


def afold_dim(forms, a: int, t: int, **budgets) -> int:
    """Dimension of the degree-t piece of the ideal of a-fold products."""
    return ProductIdeals(_as_forms(forms), **budgets).dim(a, t)


def distance_via_afold(code: LinearCode, ideals: ProductIdeals | None = None) -> int:
    """Largest a such that I(C, b) equals m^b for every b <= a."""
    P = ideals or ProductIdeals(dual_forms(code))
    a = 0
    while a < P.n and P.dim(a + 1, a + 1) == P.full(a + 1):
        a += 1
    return a


def alpha_m_fitt(code: LinearCode, ideals: ProductIdeals | None = None) -> int:
    """Initial degree of m * Fitt(C).

    The summand m I(j) / I(j+1) is nonzero in degree t exactly when
    R_1 * I(j)_{t-1} is strictly larger than I(j+1)_t.
    """
    P = ideals or ProductIdeals(dual_forms(code))
    F = P.field
    t = 1
    while True:
        for j in range(0, min(t - 1, P.n) + 1):
            grown = rank_array(F, times_all_variables(F, P.basis(j, t - 1), P.k, t - 1))
            if grown > P.dim(j + 1, t):
                return t
        t += 1


def p_dims(code: LinearCode, budget: int = DEFAULT_PRODUCT_SUBSET_BUDGET) -> dict:
    """``{(u, v): dim P(C)_{u,v}}`` over all subsets I of the columns.

    u is the rank of the columns outside I and v = n - |I|; the products
    l_I in each class are ranked in degree n - v.
    """
    if code.n > budget:
        raise BudgetExceeded(f"n = {code.n} exceeds the product-subset budget {budget}")
    P = ProductIdeals(dual_forms(code))
    M = Matroid(code)
    F = code.field
    n = code.n
    groups: dict[tuple[int, int], list[int]] = defaultdict(list)
    out = {}
    for s in range(n + 1):
        index, rows = P.level(s)
        groups.clear()
        for S, i in index.items():
            rest = [j for j in range(n) if j not in S]
            groups[(M.rank(rest), n - s)].append(i)
        for key, idx in groups.items():
            out[key] = rank_array(F, rows[idx])
    return dict(sorted(out.items()))


def tutte_via_berget(code: LinearCode, budget: int = DEFAULT_PRODUCT_SUBSET_BUDGET) -> TuttePoly:
    """Sum of (x-1)^(k-u) y^(v-u) dim P(C)_{u,v}."""
    k = code.k
    total = TuttePoly({})
    for (u, v), dim in p_dims(code, budget).items():
        term = _binomial_power(k - u, 0) * TuttePoly({(0, v - u): dim})
        total = total + term
    return total


def fitt_tensor_total_dim(code: LinearCode, ideals: ProductIdeals | None = None) -> int:
    """dim Fitt(C) (x) K = 1 + sum over j of dim I(C, j)_j."""
    P = ideals or ProductIdeals(dual_forms(code))
    return 1 + sum(P.dim(j, j) for j in range(1, P.n + 1))


def star_hs_coeffs(n: int, k: int, c: int, t_max: int) -> list[int]:
    """Hilbert function of R/I_{V_c} for a star configuration, degrees 0..t_max."""
    if not 1 <= c <= k - 1:
        raise BadRange(f"c = {c} outside [1, {k - 1}]")
    numerator = [comb(c - 1 + u, c - 1) for u in range(n - c + 1)]
    e = k - c
    series = [comb(e - 1 + m, m) for m in range(t_max + 1)]
    return [
        sum(numerator[u] * series[t - u] for u in range(min(t, n - c) + 1))
        for t in range(t_max + 1)
    ]


def mds_star_check(code: LinearCode, t_max: int = 8, ideals: ProductIdeals | None = None) -> bool:
    """Hilbert functions of R/I(C, j) against the star-configuration series."""
    if not is_mds(code):
        raise NotMDS("code is not MDS")
    P = ideals or ProductIdeals(dual_forms(code))
    n, k = code.n, code.k
    for j in range(n - k + 2, n + 1):
        series = star_hs_coeffs(n, k, n - j + 1, t_max)
        for t in range(t_max + 1):
            if P.full(t) - P.dim(j, t) != series[t]:
                return False
    return True


@dataclass
class DeletionRestriction:
    """Ideal caches for C, its puncturing C' and shortening C'' at one column."""

    whole: ProductIdeals
    deletion: ProductIdeals
    restriction: ProductIdeals


def deletion_restriction(code: LinearCode, i: int | None = None, **budgets) -> DeletionRestriction:
    """Normalise column i (default the last) to e_k and split the forms.

    The chosen form becomes x_k and is moved last; deletion keeps the other
    forms in k variables, restriction drops their x_k coefficient.
    """
    if i is None:
        i = code.n - 1
    N = normalize_column(code, i)
    cols = [tuple(r[j] for r in N.rows) for j in range(code.n)]
    rest = [c for j, c in enumerate(cols) if j != i]
    ordered = rest + [cols[i]]
    F, k = code.field, code.k
    whole = FormSet(F, k, tuple(ordered))
    if whole.zero_forms():
        raise ZeroColumn(f"zero columns at {whole.zero_forms()}")
    deletion = FormSet(F, k, tuple(rest))
    restriction = FormSet(F, k - 1, tuple(c[:-1] for c in rest))
    return DeletionRestriction(
        ProductIdeals(whole, **budgets),
        ProductIdeals(deletion, **budgets),
        ProductIdeals(restriction, **budgets),
    )


def delres_identity_check(code: LinearCode, a: int, t: int, split: DeletionRestriction | None = None) -> bool:
    """I(C, a) = x_k I(C', a-1) + I(C', a) compared in degree t."""
    D = split or deletion_restriction(code)
    P, Pd = D.whole, D.deletion
    F, k = P.field, P.k
    lhs = P.basis(a, t)
    if t >= 1:
        lifted = multiply_by_variable(F, Pd.basis(a - 1, t - 1), k, t - 1, k - 1)
    else:
        lifted = F.zeros((0, P.full(t)))
    rhs = np.vstack([lifted, Pd.basis(a, t)])
    r_lhs = lhs.shape[0]
    r_rhs = rank_array(F, rhs)
    r_sum = rank_array(F, np.vstack([lhs, rhs]))
    return r_lhs == r_rhs == r_sum


def _quotient(P: ProductIdeals, a: int, t: int) -> int:
    return P.dim(a, t) - P.dim(a + 1, t)


def ses_dim_check(code: LinearCode, a: int, t: int, split: DeletionRestriction | None = None) -> bool:
    """dim (I_a/I_{a+1})_t = dim (I'_{a-1}/I'_a)_{t-1} + dim (I''_a/I''_{a+1})_t."""
    if split is None:
        if not is_mds(code):
            raise NotMDS("code is not MDS")
        split = deletion_restriction(code)
    D = split
    return _quotient(D.whole, a, t) == _quotient(D.deletion, a - 1, t - 1) + _quotient(D.restriction, a, t)
