"""Orlik-Terao ideals of codes: circuit generators, linear strand, k = 3 distance bound."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .betti import BettiTable, graded_betti
from .code import DEFAULT_ENUM_BUDGET, LinearCode, min_distance_brute
from .errors import BadSupportSize, InsufficientBounds, ProportionalColumns, WrongDimension, ZeroColumn, ZeroIdeal
from .exact import Field
from .matroid import Circuit, circuits, distance_from_tutte, tutte
from .poly import MultiPoly

DEFAULT_BETTI_PRIME = 32003
SCREEN_PRIME = 65521


@dataclass(frozen=True)
class OTIdeal:
    field: Field
    n: int
    generators: tuple
    circuits: tuple

    def is_zero(self) -> bool:
        return not self.generators

    @property
    def alpha(self) -> int | None:
        return min((g.degree for g in self.generators), default=None)


def circuit_generator(field: Field, n: int, c: Circuit) -> MultiPoly:
    """sum_j a_j * prod_{m != j} y_{i_m} for the relation sum_j a_j y_{i_j}."""
    terms = {}
    for pos, a in enumerate(c.coeffs):
        e = [0] * n
        for m, idx in enumerate(c.support):
            if m != pos:
                e[idx] = 1
        terms[tuple(e)] = a
    return MultiPoly(field, n, terms)


def ot_generators(code: LinearCode) -> OTIdeal:
    if code.zero_columns():
        raise ZeroColumn(f"zero columns at {code.zero_columns()}")
    cs = circuits(code)
    pairs = [c.support for c in cs if c.size == 2]
    if pairs:
        raise ProportionalColumns(f"proportional columns {pairs}")
    gens = tuple(circuit_generator(code.field, code.n, c) for c in cs)
    return OTIdeal(code.field, code.n, gens, tuple(cs))


def alpha_iot(code: LinearCode, ideal: OTIdeal | None = None) -> int:
    """Initial degree of IOT(C): girth minus one."""
    I = ideal or ot_generators(code)
    if I.is_zero():
        raise ZeroIdeal("the column matroid is free; IOT(C) = 0")
    return I.alpha


def reciprocal_vanishing(code: LinearCode, ideal: OTIdeal, trials: int = 10, seed: int = 0) -> bool:
    """Every generator vanishes at y_i = 1/l_i(x) for random x off the arrangement."""
    rng = random.Random(seed)
    F = code.field
    forms = code.columns()
    done = 0
    while done < trials:
        if F.is_finite:
            x = [rng.randrange(F.p) for _ in range(code.k)]
        else:
            x = [Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(code.k)]
        values = [F.reduce(sum(F(a) * F(b) for a, b in zip(f, x))) for f in forms]
        if any(v == 0 for v in values):
            continue
        y = [F.inv(v) for v in values]
        if any(g.evaluate(y) != 0 for g in ideal.generators):
            return False
        done += 1
    return True


def betti_field(code: LinearCode, prime: int | None = None) -> Field:
    if prime is not None:
        return Field(prime)
    return code.field if code.field.is_finite else Field(DEFAULT_BETTI_PRIME)


def ot_betti(code: LinearCode, max_i: int, max_j: int, prime: int | None = None, ideal: OTIdeal | None = None) -> BettiTable:
    I = ideal or ot_generators(code)
    return graded_betti(list(I.generators), betti_field(code, prime), max_i, max_j, nvars=code.n)


def linear_strand_length(B: BettiTable, alpha: int) -> int:
    """Largest i with beta_{i, alpha+i}(I) != 0, read as beta_{i+1, alpha+i}(S/I).

    The strand stops at its first zero, so the table must contain one.
    """
    i = 0
    while True:
        if not B.covers(i + 1, alpha + i):
            raise InsufficientBounds(f"strand not certified within i <= {B.max_i}, j <= {B.max_j}")
        if B.get(i + 1, alpha + i) == 0:
            if i == 0:
                raise ZeroIdeal(f"no minimal generators in degree {alpha}")
            return i - 1
        i += 1


def strand_length(code: LinearCode, prime: int | None = None, ideal: OTIdeal | None = None) -> tuple[int, BettiTable]:
    """Linear strand length, widening the Betti bounds until it is certified."""
    I = ideal or ot_generators(code)
    alpha = alpha_iot(code, I)
    max_i = 2
    while True:
        B = ot_betti(code, max_i, alpha + max_i - 1, prime, I)
        try:
            return linear_strand_length(B, alpha), B
        except InsufficientBounds:
            if max_i >= code.n:
                raise
            max_i += 1


def no_linear_syzygy_predicate(supports) -> bool:
    """3s < 2t for s three-element supports whose union has t elements."""
    supports = [frozenset(S) for S in supports]
    if any(len(S) != 3 for S in supports):
        raise BadSupportSize("every support must have exactly three elements")
    s = len(supports)
    t = len(frozenset().union(*supports)) if supports else 0
    return 3 * s < 2 * t


@dataclass(frozen=True)
class OTDistanceReport:
    n: int
    alpha: int
    delta: int | None
    claim: str
    bound: int
    d: int | None
    tight: bool | None

    def holds(self) -> bool | None:
        return None if self.d is None else self.bound <= self.d


def exact_distance(code: LinearCode, budget: int = DEFAULT_ENUM_BUDGET) -> int:
    if code.field.is_finite and code.field.p**code.k <= budget:
        return min_distance_brute(code, budget).d
    return distance_from_tutte(tutte(code), code.n, code.k).d


def ot_distance_report(code: LinearCode, prime: int | None = None) -> OTDistanceReport:
    """For k = 3: alpha = 3 forces MDS; alpha = 2 gives d >= n - delta - 3."""
    if code.k != 3:
        raise WrongDimension(f"needs k = 3, got k = {code.k}")
    I = ot_generators(code)
    alpha = alpha_iot(code, I)
    d = exact_distance(code)
    n = code.n
    if alpha == 3:
        return OTDistanceReport(n, 3, None, "mds", n - 2, d, d == n - 2)
    delta, _ = strand_length(code, prime, I)
    bound = n - delta - 3
    return OTDistanceReport(n, alpha, delta, "lower-bound", bound, d, d == bound)
