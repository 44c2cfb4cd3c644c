"""Linear codes: construction, weights, brute-force distance, dual, puncturing, shortening."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import (
    BudgetExceeded,
    ColoopPuncture,
    DimensionUnderflow,
    RankDeficient,
    UnsupportedField,
    ZeroColumn,
    ZeroDual,
)
from .exact import Field, Matrix, kernel_basis, rank, rref_array

DEFAULT_ENUM_BUDGET = 10**7
_CHUNK = 1 << 16


@dataclass(frozen=True)
class LinearCode:
    """Row space of a full-rank ``k x n`` generator matrix ``G``."""

    field: Field
    G: Matrix

    @property
    def k(self) -> int:
        return self.G.nrows

    @property
    def n(self) -> int:
        return self.G.ncols

    def column(self, i: int) -> tuple:
        return self.G.column(i)

    def columns(self) -> list[tuple]:
        return self.G.columns()

    def zero_columns(self) -> list[int]:
        return [j for j, col in enumerate(self.columns()) if all(x == 0 for x in col)]

    def encode(self, message: Sequence) -> tuple:
        F = self.field
        msg = [F(x) for x in message]
        return tuple(
            F.reduce(sum(m * self.G.rows[i][j] for i, m in enumerate(msg))) for j in range(self.n)
        )

    def __str__(self):
        return f"[{self.n},{self.k}] code over {self.field.name}\n{self.G}"


def new_code(field: Field, rows, *, allow_zero_columns: bool = False) -> LinearCode:
    """Build a code from a generator grid, checking injectivity."""
    G = Matrix.from_rows(field, rows)
    if G.nrows == 0 or G.ncols == 0:
        raise ValueError("a code needs k >= 1 and n >= 1")
    if G.nrows > G.ncols:
        raise RankDeficient(f"k={G.nrows} exceeds n={G.ncols}")
    r = rank(G)
    if r < G.nrows:
        raise RankDeficient(f"generator has rank {r} < k={G.nrows}")
    code = LinearCode(field, G)
    if not allow_zero_columns and code.zero_columns():
        raise ZeroColumn(f"zero columns at {code.zero_columns()}")
    return code


def weight(word: Sequence) -> int:
    return sum(1 for x in word if x != 0)


class BruteResult(NamedTuple):
    d: int
    projective_count: int
    weight_distribution: dict


def _require_finite(code: LinearCode):
    if not code.field.is_finite:
        raise UnsupportedField("codeword enumeration needs a finite field")


def _messages(q: int, k: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, k), dtype=np.int64)
    for j in range(k - 1, -1, -1):
        out[:, j] = idx % q
        idx //= q
    return out


def weight_distribution(code: LinearCode, budget: int = DEFAULT_ENUM_BUDGET) -> dict:
    """``{weight: count}`` over all q^k codewords."""
    _require_finite(code)
    q, k = code.field.p, code.k
    total = q**k
    if total > budget:
        raise BudgetExceeded(f"q^k = {total} codewords exceeds the enumeration budget {budget}")
    G = code.G.to_array()
    counts: Counter = Counter()
    for start in range(0, total, _CHUNK):
        M = _messages(q, k, start, min(total, start + _CHUNK))
        if q < 2**31:
            W = (M @ G) % q
        else:
            W = (M.astype(object) @ G) % q
        counts.update(np.count_nonzero(W, axis=1).tolist())
    return dict(sorted(counts.items()))


def min_distance_brute(code: LinearCode, budget: int = DEFAULT_ENUM_BUDGET) -> BruteResult:
    dist = weight_distribution(code, budget)
    nonzero = [w for w in dist if w > 0]
    if not nonzero:
        raise ValueError("code has no nonzero codeword")
    d = min(nonzero)
    return BruteResult(d, dist[d] // (code.field.p - 1), dist)


def min_weight_messages(code: LinearCode, budget: int = DEFAULT_ENUM_BUDGET) -> list[tuple]:
    """One message per projective minimum-weight codeword (first nonzero entry 1)."""
    _require_finite(code)
    q, k = code.field.p, code.k
    if q**k > budget:
        raise BudgetExceeded(f"q^k = {q**k} exceeds the enumeration budget {budget}")
    M = _messages(q, k, 0, q**k)
    W = np.count_nonzero((M @ code.G.to_array()) % q, axis=1)
    d = W[W > 0].min()
    out = []
    for m in M[W == d]:
        if m[np.flatnonzero(m)[0]] == 1:
            out.append(tuple(int(x) for x in m))
    return out


def dual(code: LinearCode) -> LinearCode:
    """Generator of the dual code: a kernel basis of G."""
    if code.k == code.n:
        raise ZeroDual("k = n: the dual code is zero")
    basis = kernel_basis(code.G)
    return new_code(code.field, basis, allow_zero_columns=True)


def same_row_space(a: LinearCode, b: LinearCode) -> bool:
    if a.field != b.field or a.n != b.n or a.k != b.k:
        return False
    stacked = Matrix(a.field, a.G.rows + b.G.rows, a.n)
    return rank(stacked) == a.k


def puncture(code: LinearCode, i: int) -> LinearCode:
    """Delete column ``i`` (0-based)."""
    keep = [j for j in range(code.n) if j != i]
    H = code.G.select_columns(keep)
    if rank(H) < code.k:
        raise ColoopPuncture(f"column {i} is a coloop")
    return new_code(code.field, H.rows, allow_zero_columns=True)


def normalize_column(code: LinearCode, i: int) -> Matrix:
    """Row operations turning column ``i`` into (0, ..., 0, 1)^T.

    The last row with a nonzero entry in the column becomes the pivot row; it
    is moved to the bottom, scaled, and cleared from every other row.
    """
    F = code.field
    col = code.column(i)
    nz = [r for r, x in enumerate(col) if x != 0]
    if not nz:
        raise ZeroColumn(f"column {i} is zero")
    r = nz[-1]
    rows = [list(row) for j, row in enumerate(code.G.rows) if j != r]
    piv = list(code.G.rows[r])
    inv = F.inv(piv[i])
    piv = [F.reduce(x * inv) for x in piv]
    for row in rows:
        f = row[i]
        if f != 0:
            row[:] = [F.reduce(a - f * b) for a, b in zip(row, piv)]
    rows.append(piv)
    return Matrix(F, tuple(tuple(r_) for r_ in rows), code.n)


def shorten(code: LinearCode, i: int) -> LinearCode:
    """Normalise column ``i`` to e_k, then drop the last row and column ``i``."""
    if all(x == 0 for x in code.column(i)):
        raise ZeroColumn(f"column {i} is zero")
    if code.k == 1:
        raise DimensionUnderflow("cannot shorten a one-dimensional code")
    N = normalize_column(code, i)
    keep = [j for j in range(code.n) if j != i]
    rows = [tuple(row[j] for j in keep) for row in N.rows[:-1]]
    return new_code(code.field, rows, allow_zero_columns=True)


def singleton_bound(code: LinearCode) -> int:
    return code.n - code.k + 1


def is_mds(code: LinearCode, budget: int = DEFAULT_ENUM_BUDGET) -> bool:
    """``d == n - k + 1``; enumeration when affordable, otherwise the Tutte route."""
    if code.field.is_finite and code.field.p**code.k <= budget:
        d = min_distance_brute(code, budget).d
    else:
        from .matroid import distance_from_tutte, tutte

        d = distance_from_tutte(tutte(code), code.n, code.k).d
    return d == singleton_bound(code)


def change_field(code: LinearCode, field: Field, *, allow_zero_columns: bool = True) -> LinearCode:
    """Re-read the generator over another prime field or Q.

    GF(p) entries are lifted through their signed representatives, so -1
    stays -1 when moving to Q.  The matroid may change; callers check that.
    """
    rows = [[field(code.field.signed(x)) for x in row] for row in code.G.rows]
    return new_code(field, rows, allow_zero_columns=allow_zero_columns)


def systematic_form(code: LinearCode) -> Matrix:
    R, _ = rref_array(code.field, code.G.to_array())
    return Matrix.from_array(code.field, R)
