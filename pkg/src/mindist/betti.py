"""Graded Betti numbers of S/I from Koszul homology, one graded slice at a time.

beta_{i,j}(S/I) is the degree-j part of H_i of the Koszul complex of the
variables on S/I.  Each (S/I)_m is realised by the standard monomials of a
reduced row basis of I_m; the Koszul differentials are assembled on those
bases and only their ranks are needed:

    beta_{i,j} = dim K_{i,j} - rank d_{i,j} - rank d_{i+1,j}.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb

import numpy as np

from .errors import BudgetExceeded, InsufficientBounds
from .exact import Field, rank_array, rref_array
from .poly import MultiPoly, monomials, num_monomials, shift_map, times_all_variables

DEFAULT_MAX_VARS = 8
DEFAULT_MAX_DEGREE = 8


@dataclass(frozen=True)
class BettiTable:
    """Nonzero ``{(i, j): beta_{i,j}(S/I)}`` within ``0 <= i <= max_i, j <= max_j``."""

    entries: dict = dc_field(compare=False)
    max_i: int
    max_j: int

    def __eq__(self, other):
        return (
            isinstance(other, BettiTable)
            and self.entries == other.entries
            and (self.max_i, self.max_j) == (other.max_i, other.max_j)
        )

    def __hash__(self):
        return hash((frozenset(self.entries.items()), self.max_i, self.max_j))

    def covers(self, i: int, j: int) -> bool:
        return 0 <= i <= self.max_i and j <= self.max_j

    def get(self, i: int, j: int) -> int:
        if not self.covers(i, j):
            raise InsufficientBounds(f"beta_({i},{j}) lies outside the computed bounds")
        return self.entries.get((i, j), 0)

    def format(self) -> str:
        """Macaulay2-style table: rows j - i, columns i."""
        if not self.entries:
            return "(zero)"
        rows = sorted({j - i for i, j in self.entries})
        width = max(len(str(v)) for v in self.entries.values()) + 1
        head = "     " + "".join(f"{i:>{width}}" for i in range(self.max_i + 1))
        lines = [head]
        for r in range(rows[0], rows[-1] + 1):
            cells = []
            for i in range(self.max_i + 1):
                v = self.entries.get((i, i + r))
                cells.append(f"{v if v else '.':>{width}}" if self.covers(i, i + r) else f"{'?':>{width}}")
            lines.append(f"{r:>3}: " + "".join(cells))
        return "\n".join(lines)


class QuotientRing:
    """Graded pieces of S/I for a homogeneous ideal given by generators."""

    def __init__(self, field: Field, nvars: int, gens: list[MultiPoly]):
        self.field = field
        self.n = nvars
        self.gens = [g.to_field(field) if g.field != field else g for g in gens]
        self.gens = [g for g in self.gens if not g.is_zero()]
        for g in self.gens:
            if not g.is_homogeneous():
                raise ValueError("generators must be homogeneous")
        self._ideal: dict[int, np.ndarray] = {}
        self._nf: dict[int, np.ndarray] = {}
        self._std: dict[int, np.ndarray] = {}

    def ideal_basis(self, m: int) -> np.ndarray:
        """Reduced row basis of I_m over the degree-m monomials."""
        if m in self._ideal:
            return self._ideal[m]
        F = self.field
        N = num_monomials(self.n, m)
        parts = []
        if m > 0:
            prev = self.ideal_basis(m - 1)
            if prev.shape[0]:
                parts.append(times_all_variables(F, prev, self.n, m - 1))
        for g in self.gens:
            if g.degree == m:
                parts.append(g.vector(m).reshape(1, -1))
        if parts:
            R, piv = rref_array(F, np.vstack(parts))
            B = R[: len(piv)]
        else:
            B = F.zeros((0, N))
        self._ideal[m] = B
        return B

    def _prepare(self, m: int):
        if m in self._nf:
            return
        F = self.field
        B = self.ideal_basis(m)
        N = num_monomials(self.n, m)
        pivots = [int(np.flatnonzero(row != 0)[0]) for row in B]
        pivset = set(pivots)
        std = np.array([c for c in range(N) if c not in pivset], dtype=np.int64)
        NF = F.zeros((N, len(std)))
        NF[std, np.arange(len(std))] = F.one
        for r, c in enumerate(pivots):
            row = B[r, std]
            NF[c] = (-row) % F.p if F.p else -row
        self._std[m] = std
        self._nf[m] = NF

    def hilbert(self, m: int) -> int:
        if m < 0:
            return 0
        self._prepare(m)
        return len(self._std[m])

    def standard(self, m: int) -> np.ndarray:
        self._prepare(m)
        return self._std[m]

    def normal_forms(self, m: int) -> np.ndarray:
        """Row c: coordinates of monomial c of degree m in the standard basis."""
        self._prepare(m)
        return self._nf[m]


def koszul_differential(Q: QuotientRing, i: int, j: int) -> np.ndarray:
    """Matrix of d_i: K_{i,j} -> K_{i-1,j}, one row per source basis element."""
    F, n = Q.field, Q.n
    m = j - i
    src_sets = list(combinations(range(n), i))
    tgt_index = {A: t for t, A in enumerate(combinations(range(n), i - 1))}
    h_src, h_tgt = Q.hilbert(m), Q.hilbert(m + 1)
    D = F.zeros((len(src_sets) * h_src, len(tgt_index) * h_tgt))
    if h_src == 0 or h_tgt == 0:
        return D
    std = Q.standard(m)
    NF = Q.normal_forms(m + 1)
    for s, A in enumerate(src_sets):
        for pos, a in enumerate(A):
            block = NF[shift_map(n, m, a)[std]]
            if pos % 2:
                block = (-block) % F.p if F.p else -block
            t = tgt_index[A[:pos] + A[pos + 1:]]
            D[s * h_src:(s + 1) * h_src, t * h_tgt:(t + 1) * h_tgt] = block
    return D


def graded_betti(
    gens: list[MultiPoly],
    field: Field,
    max_i: int,
    max_j: int,
    *,
    nvars: int | None = None,
    max_vars: int = DEFAULT_MAX_VARS,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> BettiTable:
    """beta_{i,j}(S/I) for 0 <= i <= max_i and j <= max_j."""
    n = nvars if nvars is not None else gens[0].nvars
    if n > max_vars:
        raise BudgetExceeded(f"{n} variables exceed the budget {max_vars}")
    if max_j > max_degree:
        raise BudgetExceeded(f"degree {max_j} exceeds the budget {max_degree}")
    Q = QuotientRing(field, n, gens)
    ranks: dict[tuple[int, int], int] = {}

    def rk(i, j):
        if i <= 0 or i > n or j - i < 0:
            return 0
        if (i, j) not in ranks:
            ranks[(i, j)] = rank_array(field, koszul_differential(Q, i, j))
        return ranks[(i, j)]

    entries = {}
    for i in range(0, min(max_i, n) + 1):
        for j in range(i, max_j + 1):
            dim = comb(n, i) * Q.hilbert(j - i)
            b = dim - rk(i, j) - rk(i + 1, j)
            if b:
                entries[(i, j)] = b
    return BettiTable(entries, max_i, max_j)
