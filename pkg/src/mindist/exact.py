"""Exact scalars (prime fields and the rationals) and dense exact linear algebra.

Finite-field elements are plain ints in ``range(p)``; rationals are
:class:`fractions.Fraction`.  Matrices over GF(p) are reduced with vectorised
int64 numpy arithmetic when ``p < 2**31`` (so products fit in 63 bits); every
other case falls back to object arrays holding exact Python numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from .errors import NotPrime

_INT64_LIMIT = 2**31


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin (exact for p < 3.3e24)."""
    if p < 2:
        return False
    for q in _MR_BASES:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """GF(p) when ``p > 0``, the rationals when ``p == 0``."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime; only prime fields are supported")

    @property
    def is_finite(self) -> bool:
        return self.p > 0

    @property
    def char(self) -> int:
        return self.p

    @property
    def order(self) -> int | None:
        return self.p or None

    @property
    def name(self) -> str:
        return f"F{self.p}" if self.p else "Q"

    def __repr__(self):
        return f"Field({self.name})"

    def __call__(self, x):
        """Coerce an int, Fraction or string like ``"3/4"`` into the field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.p:
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise ZeroDivisionError(f"{x} has no image in {self.name}")
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return int(x) % self.p
        return Fraction(x)

    def reduce(self, x):
        return x % self.p if self.p else Fraction(x)

    def inv(self, x):
        if self.p:
            return pow(int(x), -1, self.p)
        return 1 / Fraction(x)

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def elements(self) -> range:
        if not self.p:
            raise ValueError("the rationals cannot be enumerated")
        return range(self.p)

    def signed(self, x):
        """Representative of smallest absolute value (ints for GF(p))."""
        if self.p:
            x = int(x) % self.p
            return x - self.p if x > self.p // 2 else x
        return Fraction(x)

    # array support -------------------------------------------------------

    @property
    def dtype(self):
        return np.int64 if 0 < self.p < _INT64_LIMIT else object

    def array(self, rows, ncols: int | None = None) -> np.ndarray:
        """Dense 2-D array of field elements (always a fresh copy)."""
        if isinstance(rows, np.ndarray):
            A = rows.astype(self.dtype, copy=True)
            if A.ndim == 1:
                A = A.reshape(1, -1)
            return A % self.p if self.p else A
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        A = np.empty((len(rows), ncols), dtype=self.dtype)
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                A[i, j] = self(x)
        return A

    def zeros(self, shape) -> np.ndarray:
        if self.dtype is object:
            A = np.empty(shape, dtype=object)
            A.fill(self.zero)
            return A
        return np.zeros(shape, dtype=np.int64)


def make_field(spec: str) -> Field:
    """Parse ``"Q"`` or ``"F<p>"`` (also accepts ``"GF(p)"``)."""
    s = spec.strip()
    if s.upper() in ("Q", "QQ"):
        return Field(0)
    body = s
    if body.upper().startswith("GF"):
        body = body[2:].strip("()")
    elif body[:1] in ("F", "f"):
        body = body[1:]
    try:
        p = int(body)
    except ValueError:
        raise ValueError(f"unrecognised field spec {spec!r}") from None
    if p < 2:
        raise ValueError(f"field characteristic must be at least 2, got {p}")
    return Field(p)


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: tuple
    ncols: int

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence], ncols: int | None = None):
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("matrix rows have different lengths")
        return cls(field, rows, ncols)

    @classmethod
    def from_array(cls, field: Field, A: np.ndarray):
        rows = tuple(tuple(field(x) for x in r) for r in A)
        return cls(field, rows, A.shape[1])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def to_array(self) -> np.ndarray:
        return self.field.array(self.rows, self.ncols)

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def select_columns(self, cols: Sequence[int]) -> "Matrix":
        return Matrix(self.field, tuple(tuple(r[j] for j in cols) for r in self.rows), len(cols))

    def transpose(self) -> "Matrix":
        return Matrix(self.field, tuple(zip(*self.rows)) if self.rows else (), self.nrows)

    def __str__(self):
        return "\n".join(" ".join(str(self.field.signed(x)) for x in r) for r in self.rows)


# --- elimination ----------------------------------------------------------


def rref_array(field: Field, A: np.ndarray, *, reduced: bool = True, copy: bool = True):
    """Gauss-Jordan elimination; returns ``(A, pivots)``.

    Pivot choice is deterministic: leftmost column with a nonzero entry at or
    below the current row, first such row.  With ``reduced=False`` only the
    entries below each pivot are cleared (enough for ranks).
    """
    if copy:
        A = A.copy()
    p = field.p
    m, n = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c] != 0)
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = field.inv(A[r, c])
        A[r, c:] = A[r, c:] * inv % p if p else A[r, c:] * inv
        # entries left of c vanish in the pivot row, so only columns c: change
        col = A[:, c].copy()
        col[r] = 0
        if not reduced:
            col[:r] = 0
        hit = np.flatnonzero(col != 0)
        if hit.size:
            # touch only the pivot row's nonzero columns (the matrices are often sparse)
            cols = c + np.flatnonzero(A[r, c:] != 0)
            block = np.ix_(hit, cols)
            upd = A[block] - np.outer(col[hit], A[r, cols])
            A[block] = upd % p if p else upd
        pivots.append(c)
        r += 1
    return A, pivots


def rank_array(field: Field, A: np.ndarray) -> int:
    if A.size == 0:
        return 0
    if A.shape[0] > A.shape[1]:
        A = A.T
    if not field.is_finite:
        return _rank_bareiss(_integer_rows(A))
    _, piv = rref_array(field, A, reduced=False)
    return len(piv)


def _integer_rows(A: np.ndarray) -> np.ndarray:
    """Scale each rational row by the lcm of its denominators."""
    out = np.empty(A.shape, dtype=object)
    for i, row in enumerate(A):
        m = lcm(*(Fraction(x).denominator for x in row))
        out[i] = [int(Fraction(x) * m) for x in row]
    return out


def _rank_bareiss(A: np.ndarray) -> int:
    """Rank of an integer matrix by fraction-free elimination.

    After each step the entries below the pivot rows are minors of the
    original matrix, so the division by the previous pivot is exact.
    """
    A = A.copy()
    m, n = A.shape
    r, prev = 0, 1
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c] != 0)
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        p = A[r, c]
        below = A[r + 1:, c:]
        below[:] = (p * below - np.outer(below[:, 0], A[r, c:])) // prev
        prev = p
        r += 1
    return r


def span_basis(field: Field, A: np.ndarray) -> np.ndarray:
    """Reduced row basis of the row space of ``A`` (rank x ncols)."""
    if A.shape[0] == 0:
        return A[:0].copy()
    R, piv = rref_array(field, A)
    return R[: len(piv)]


def rref(M: Matrix):
    """Row-reduced echelon form: ``(rank, reduced Matrix, pivot columns)``."""
    R, piv = rref_array(M.field, M.to_array())
    return len(piv), Matrix.from_array(M.field, R), tuple(piv)


def rank(M: Matrix) -> int:
    return rank_array(M.field, M.to_array())


def kernel_basis_array(field: Field, A: np.ndarray) -> list[tuple]:
    n = A.shape[1]
    R, piv = rref_array(field, A)
    free = [j for j in range(n) if j not in set(piv)]
    basis = []
    for f in free:
        v = [field.zero] * n
        v[f] = field.one
        for i, c in enumerate(piv):
            v[c] = field.reduce(-R[i, f])
        basis.append(tuple(field(x) for x in v))
    return basis


def kernel_basis(M: Matrix) -> list[tuple]:
    """Basis of the right kernel, one vector per free column in order."""
    return kernel_basis_array(M.field, M.to_array())


def rref_naive(M: Matrix):
    """Entry-by-entry elimination on Python lists; independent of :func:`rref`."""
    F = M.field
    rows = [list(r) for r in M.rows]
    m, n = M.nrows, M.ncols
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.reduce(x * inv) for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [F.reduce(a - f * b) for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return r, Matrix(F, tuple(tuple(x) for x in rows), n), tuple(pivots)


def gf2_rank_bits(rows: Iterable[int]) -> int:
    """GF(2) rank of rows packed into Python ints (bit j = column j)."""
    basis: dict[int, int] = {}
    for v in rows:
        while v:
            h = v.bit_length() - 1
            if h in basis:
                v ^= basis[h]
            else:
                basis[h] = v
                break
    return len(basis)


def pack_gf2_row(row: Sequence) -> int:
    return sum(1 << j for j, x in enumerate(row) if int(x) % 2)
