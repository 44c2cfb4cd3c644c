"""Column matroid of a code: rank oracle, Tutte polynomial, circuits, girth."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import NamedTuple

from .code import LinearCode
from .errors import BudgetExceeded, LoopsPresent, NoLinearTerm
from .exact import kernel_basis, rank

DEFAULT_SUBSET_BUDGET = 22


class Matroid:
    """Rank oracle on column subsets (ranks via exact row reduction)."""

    def __init__(self, code: LinearCode):
        self.code = code
        self.n = code.n
        self.k = code.k
        self._rank = lru_cache(maxsize=1 << 16)(self._compute_rank)

    def _compute_rank(self, subset: frozenset) -> int:
        if not subset:
            return 0
        return rank(self.code.G.select_columns(sorted(subset)))

    def rank(self, subset) -> int:
        return self._rank(frozenset(subset))

    def is_independent(self, subset) -> bool:
        return self.rank(subset) == len(set(subset))

    def bases(self) -> list[tuple]:
        return [B for B in combinations(range(self.n), self.k) if self.rank(B) == self.k]

    def loops(self) -> list[int]:
        return self.code.zero_columns()


def same_matroid(a: LinearCode, b: LinearCode) -> bool:
    """Equal ground sets and equal bases."""
    if a.n != b.n or a.k != b.k:
        return False
    return Matroid(a).bases() == Matroid(b).bases()


@dataclass(frozen=True)
class TuttePoly:
    """Integer bivariate polynomial ``{(x-degree, y-degree): coefficient}``."""

    coeffs: dict = dc_field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {k: v for k, v in sorted(self.coeffs.items()) if v})

    def __eq__(self, other):
        return isinstance(other, TuttePoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        c = Counter(self.coeffs)
        c.update(other.coeffs)
        return TuttePoly(dict(c))

    def __mul__(self, other):
        c: Counter = Counter()
        for (i1, j1), a in self.coeffs.items():
            for (i2, j2), b in other.coeffs.items():
                c[(i1 + i2, j1 + j2)] += a * b
        return TuttePoly(dict(c))

    def evaluate(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.coeffs.items())

    def shift_x(self, s: int = 1) -> "TuttePoly":
        """Substitute x -> x + s."""
        c: Counter = Counter()
        for (i, j), a in self.coeffs.items():
            for t in range(i + 1):
                c[(t, j)] += a * comb(i, t) * s ** (i - t)
        return TuttePoly(dict(c))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j), c in sorted(self.coeffs.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
            mono = "*".join(
                s for s in (
                    ("x" + (f"^{i}" if i > 1 else "")) if i else "",
                    ("y" + (f"^{j}" if j > 1 else "")) if j else "",
                ) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _binomial_power(a: int, b: int) -> TuttePoly:
    """(x - 1)^a (y - 1)^b."""
    return TuttePoly(
        {
            (i, j): comb(a, i) * (-1) ** (a - i) * comb(b, j) * (-1) ** (b - j)
            for i in range(a + 1)
            for j in range(b + 1)
        }
    )


def tutte_from_rank_counts(counts: dict, k: int) -> TuttePoly:
    """Assemble the subset expansion from ``{(rank, size): number of subsets}``."""
    total = TuttePoly({})
    for (r, s), m in counts.items():
        total = total + TuttePoly({ij: m * c for ij, c in _binomial_power(k - r, s - r).coeffs.items()})
    return total


def rank_size_counts(code: LinearCode) -> Counter:
    """Number of column subsets with each (rank, size), by depth-first insertion.

    Columns are added one at a time to an echelon basis, so each subset costs
    one vector reduction.  Once a branch reaches full rank the remaining
    columns are counted in closed form.
    """
    F = code.field
    cols = [list(c) for c in code.columns()]
    n, k = code.n, code.k
    counts: Counter = Counter()

    def reduce(v, basis):
        v = list(v)
        for piv, row in basis:
            f = v[piv]
            if f != 0:
                v = [F.reduce(a - f * b) for a, b in zip(v, row)]
        return v

    def walk(j, basis, size):
        r = len(basis)
        if r == k:
            rest = n - j
            for t in range(rest + 1):
                counts[(k, size + t)] += comb(rest, t)
            return
        if j == n:
            counts[(r, size)] += 1
            return
        walk(j + 1, basis, size)
        v = reduce(cols[j], basis)
        piv = next((i for i, x in enumerate(v) if x != 0), None)
        if piv is None:
            walk(j + 1, basis, size + 1)
        else:
            inv = F.inv(v[piv])
            walk(j + 1, basis + [(piv, [F.reduce(x * inv) for x in v])], size + 1)

    walk(0, [], 0)
    return counts


def tutte(code: LinearCode, budget: int = DEFAULT_SUBSET_BUDGET) -> TuttePoly:
    """Tutte polynomial by the full subset expansion."""
    if code.n > budget:
        raise BudgetExceeded(f"n = {code.n} exceeds the subset budget {budget}")
    return tutte_from_rank_counts(rank_size_counts(code), code.k)


class TutteDistance(NamedTuple):
    d: int
    projective_count: int


def distance_from_tutte(T: TuttePoly, n: int, k: int) -> TutteDistance:
    """Read d and the projective minimum-weight count off T(x + 1, y).

    Among monomials x * y^p of the shifted polynomial take the largest p;
    then d = n - p - k + 1 and the coefficient is the count.
    """
    if T.coeffs and all(j >= 1 for (_, j) in T.coeffs):
        raise LoopsPresent("Tutte polynomial is divisible by y: the matroid has loops")
    shifted = T.shift_x(1)
    linear = {j: c for (i, j), c in shifted.coeffs.items() if i == 1}
    if not linear:
        raise NoLinearTerm("T(x+1, y) has no term of x-degree 1")
    p = max(linear)
    return TutteDistance(n - p - k + 1, linear[p])


@dataclass(frozen=True)
class Circuit:
    support: tuple
    coeffs: tuple

    @property
    def size(self) -> int:
        return len(self.support)


def circuits(code: LinearCode, max_size: int | None = None) -> list[Circuit]:
    """All minimal dependent column sets with their dependency coefficients.

    Supports are visited by increasing size; any superset of a known circuit
    is skipped, so a dependent survivor is minimal and has a one-dimensional
    kernel.  The first coefficient is normalised to 1.
    """
    F = code.field
    found: list[Circuit] = []
    supports: list[frozenset] = []
    top = code.k + 1 if max_size is None else min(max_size, code.k + 1)
    for size in range(1, top + 1):
        for S in combinations(range(code.n), size):
            fs = frozenset(S)
            if any(c <= fs for c in supports):
                continue
            sub = code.G.select_columns(S)
            if rank(sub) == size:
                continue
            (vec,) = kernel_basis(sub)
            inv = F.inv(vec[0])
            found.append(Circuit(S, tuple(F.reduce(x * inv) for x in vec)))
            supports.append(fs)
    found.sort(key=lambda c: c.support)
    return found


def girth(code: LinearCode) -> int | None:
    cs = circuits(code)
    return min((c.size for c in cs), default=None)
