"""Binary codes through the Boolean ring F2[y]/(y_i^2 - y_i).

That ring is the ring of F2-valued functions on F2^n, so an element is stored
as its truth table packed into a Python int: bit ``x`` holds the value at the
point whose i-th coordinate is bit i of ``x``.  Sums are XOR, products AND,
and an ideal is determined by the common zeros of its generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .code import LinearCode, dual
from .errors import BudgetExceeded, UnsupportedField
from .exact import gf2_rank_bits

MAX_VARS = 16
RANK_CHECK_MAX_VARS = 8


@lru_cache(maxsize=None)
def _coordinate_bits(n: int, i: int) -> int:
    half = 1 << i
    period = half << 1
    block = ((1 << half) - 1) << half
    reps = (1 << n) // period
    return block * (((1 << (period * reps)) - 1) // ((1 << period) - 1))


@dataclass(frozen=True)
class BoolFn:
    n: int
    bits: int

    @classmethod
    def constant(cls, n: int, value: int = 1) -> "BoolFn":
        return cls(n, (1 << (1 << n)) - 1 if value % 2 else 0)

    @classmethod
    def coordinate(cls, n: int, i: int) -> "BoolFn":
        return cls(n, _coordinate_bits(n, i))

    @classmethod
    def monomial(cls, n: int, support) -> "BoolFn":
        f = cls.constant(n)
        for i in support:
            f = f * cls.coordinate(n, i)
        return f

    @classmethod
    def linear(cls, n: int, coeffs) -> "BoolFn":
        f = cls(n, 0)
        for i, c in enumerate(coeffs):
            if int(c) % 2:
                f = f + cls.coordinate(n, i)
        return f

    def __add__(self, other: "BoolFn") -> "BoolFn":
        return BoolFn(self.n, self.bits ^ other.bits)

    def __mul__(self, other: "BoolFn") -> "BoolFn":
        return BoolFn(self.n, self.bits & other.bits)

    def __call__(self, point: int) -> int:
        return (self.bits >> point) & 1

    def support_size(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0


def _check_size(n: int, limit: int = MAX_VARS):
    if n > limit:
        raise BudgetExceeded(f"n = {n} exceeds the truth-table budget {limit}")


def _require_binary(code: LinearCode):
    if code.field.p != 2:
        raise UnsupportedField("the Boolean-ring construction needs GF(2)")


def relation_forms(code: LinearCode) -> list[BoolFn]:
    """The n - k linear relations among the forms, read off the dual generator."""
    _require_binary(code)
    _check_size(code.n)
    H = dual(code)
    return [BoolFn.linear(code.n, row) for row in H.G.rows]


def common_zeros(gens, n: int) -> int:
    """Number of points of F2^n where every generator vanishes."""
    support = 0
    for g in gens:
        support |= g.bits
    return (1 << n) - support.bit_count()


def ideal_dim(gens, n: int) -> int:
    """dim of the ideal: 2^n minus the number of common zeros."""
    _check_size(n)
    return (1 << n) - common_zeros(gens, n)


def ideal_dim_by_rank(gens, n: int) -> int:
    """Same dimension as the GF(2) rank of all products g * (squarefree monomial)."""
    _check_size(n, RANK_CHECK_MAX_VARS)
    monos = [BoolFn.monomial(n, S) for r in range(n + 1) for S in combinations(range(n), r)]
    rows = {(g * m).bits for g in gens for m in monos}
    return gf2_rank_bits(rows)


def product_generators(n: int, a: int) -> list[BoolFn]:
    """Generators of the image of I(Y, a): all squarefree a-fold monomials."""
    if a <= 0:
        return [BoolFn.constant(n)]
    return [BoolFn.monomial(n, S) for S in combinations(range(n), a)]


def _sum_dim(relations, n: int, a: int) -> int:
    return ideal_dim(list(relations) + product_generators(n, a), n)


def prop_check(code: LinearCode, a: int) -> bool:
    """Whether F(C) + I(Y, a) is the maximal ideal <y_1, ..., y_n>."""
    rel = relation_forms(code) if code.k < code.n else []
    return _sum_dim(rel, code.n, a) == (1 << code.n) - 1


@dataclass(frozen=True)
class GrDims:
    dims: tuple

    @property
    def total(self) -> int:
        return sum(self.dims)


def gr_dims(code: LinearCode) -> GrDims:
    """Graded pieces of S/F(C) for the filtration F_i = I(Y, n - i)."""
    _require_binary(code)
    n = code.n
    rel = relation_forms(code) if code.k < n else []
    level = [_sum_dim(rel, n, n - i) for i in range(n + 1)]
    below = ideal_dim(rel, n)
    dims = []
    for i in range(n + 1):
        dims.append(level[i] - below)
        below = level[i]
    return GrDims(tuple(dims))


def gr_jump_indices(code: LinearCode, dims: GrDims | None = None):
    """``(top_jump, literal)`` read off the nonzero graded pieces.

    top_jump is the largest i < n with a nonzero piece; literal is the
    smallest such i with 0 < i < n, or None.  The piece at i = n comes from
    the zero codeword and is ignored by both.
    """
    g = (dims or gr_dims(code)).dims
    n = code.n
    top = max(i for i in range(n) if g[i])
    literal = next((i for i in range(1, n) if g[i]), None)
    return top, literal


def filtration_product_check(n: int, a: int, b: int, limit: int = 12) -> bool:
    """F_a * F_b lies in F_{a+b}, checked on every pair of generators."""
    _check_size(n, limit)
    if a + b >= n:
        return True
    target = product_generators(n, n - a - b)
    support = 0
    for g in target:
        support |= g.bits
    for f in product_generators(n, n - a):
        for g in product_generators(n, n - b):
            if (f * g).bits & ~support:
                return False
    return True
