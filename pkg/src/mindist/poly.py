"""Sparse multivariate polynomials and graded monomial bases."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, prod

import numpy as np

from .exact import Field


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple:
    """Exponent tuples of the given degree, lexicographically descending."""
    if degree < 0:
        return ()
    if nvars == 0:
        return ((),) if degree == 0 else ()
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(nvars: int, degree: int) -> dict:
    return {m: i for i, m in enumerate(monomials(nvars, degree))}


def num_monomials(nvars: int, degree: int) -> int:
    if degree < 0:
        return 0
    if nvars == 0:
        return 1 if degree == 0 else 0
    return comb(nvars - 1 + degree, nvars - 1)


@lru_cache(maxsize=None)
def shift_map(nvars: int, degree: int, var: int) -> np.ndarray:
    """Index of ``x_var * m`` in degree+1 for each monomial m of ``degree``."""
    idx = monomial_index(nvars, degree + 1)
    out = np.empty(num_monomials(nvars, degree), dtype=np.int64)
    for i, m in enumerate(monomials(nvars, degree)):
        e = list(m)
        e[var] += 1
        out[i] = idx[tuple(e)]
    return out


def multiply_by_variable(field: Field, V: np.ndarray, nvars: int, degree: int, var: int) -> np.ndarray:
    """Rows of V (coefficients in ``degree``) times ``x_var``."""
    W = field.zeros((V.shape[0], num_monomials(nvars, degree + 1)))
    if V.shape[0]:
        W[:, shift_map(nvars, degree, var)] = V
    return W


def multiply_by_linear_form(field: Field, V: np.ndarray, nvars: int, degree: int, form) -> np.ndarray:
    W = field.zeros((V.shape[0], num_monomials(nvars, degree + 1)))
    p = field.p
    for var, c in enumerate(form):
        if c != 0:
            W = W + multiply_by_variable(field, V, nvars, degree, var) * c
            if p:
                W %= p
    return W


def times_all_variables(field: Field, V: np.ndarray, nvars: int, degree: int) -> np.ndarray:
    """Stack of ``x_u * V`` over all variables: spans R_1 * span(V)."""
    if nvars == 0:
        return field.zeros((0, 0))
    return np.vstack([multiply_by_variable(field, V, nvars, degree, u) for u in range(nvars)])


@dataclass(frozen=True)
class MultiPoly:
    """Polynomial stored as ``{exponent tuple: nonzero coefficient}``."""

    field: Field
    nvars: int
    terms: dict = dc_field(default_factory=dict, compare=False)

    def __post_init__(self):
        clean = {}
        for e, c in self.terms.items():
            c = self.field(c)
            if c != 0:
                clean[tuple(e)] = c
        object.__setattr__(self, "terms", clean)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.field == other.field and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    @classmethod
    def linear(cls, field: Field, coeffs) -> "MultiPoly":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(field, n, terms)

    @classmethod
    def constant(cls, field: Field, nvars: int, c=1) -> "MultiPoly":
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, field: Field, exps, c=1) -> "MultiPoly":
        return cls(field, len(exps), {tuple(exps): c})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        """Total degree (-1 for the zero polynomial)."""
        return max(self.degrees(), default=-1)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = self.field.reduce(terms.get(e, 0) + c)
        return MultiPoly(self.field, self.nvars, terms)

    def __neg__(self):
        return MultiPoly(self.field, self.nvars, {e: self.field.reduce(-c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "MultiPoly":
        c = self.field(c)
        return MultiPoly(self.field, self.nvars, {e: self.field.reduce(v * c) for e, v in self.terms.items()})

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        F = self.field
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(F, self.nvars, {e: F.reduce(c) for e, c in terms.items()})

    def diff(self, var: int, times: int = 1) -> "MultiPoly":
        """Ordinary partial derivative (falling-factorial coefficients)."""
        F = self.field
        terms = {}
        for e, c in self.terms.items():
            if e[var] < times:
                continue
            f = prod(range(e[var] - times + 1, e[var] + 1))
            ne = list(e)
            ne[var] -= times
            terms[tuple(ne)] = F.reduce(c * f)
        return MultiPoly(F, self.nvars, terms)

    def apply_operator(self, exps) -> "MultiPoly":
        """Apply the differential monomial with exponent vector ``exps``."""
        out = self
        for var, t in enumerate(exps):
            if t:
                out = out.diff(var, t)
        return out

    def evaluate(self, point):
        F = self.field
        total = F.zero
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * F(x) ** k
            total = F.reduce(total + v)
        return total

    def to_field(self, field: Field) -> "MultiPoly":
        """Image under the natural map (GF(p) lifts use signed representatives)."""
        return MultiPoly(field, self.nvars, {e: field(self.field.signed(c)) for e, c in self.terms.items()})

    def vector(self, degree: int | None = None) -> np.ndarray:
        """Coefficient row over the monomials of ``degree``."""
        if degree is None:
            degree = self.degree
        idx = monomial_index(self.nvars, degree)
        v = self.field.zeros((num_monomials(self.nvars, degree),))
        for e, c in self.terms.items():
            if sum(e) != degree:
                raise ValueError("polynomial has a term outside the requested degree")
            v[idx[e]] = c
        return v

    @classmethod
    def from_vector(cls, field: Field, nvars: int, degree: int, v) -> "MultiPoly":
        mons = monomials(nvars, degree)
        return cls(field, nvars, {mons[i]: v[i] for i in range(len(mons)) if v[i] != 0})

    def format(self, names=None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = default_names(self.nvars)
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.field.signed(self.terms[e])
            mono = "*".join(
                names[i] + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return self.format()


def default_names(nvars: int) -> list[str]:
    if nvars <= 3:
        return ["x", "y", "z"][:nvars]
    return [f"x{i + 1}" for i in range(nvars)]
