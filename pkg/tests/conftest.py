from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import assume, strategies as st

from mindist.code import LinearCode, new_code
from mindist.catalog import get_example
from mindist.errors import RankDeficient, ZeroColumn
from mindist.exact import Field


def naive_weights(code: LinearCode) -> dict:
    """Weight distribution by plain itertools enumeration."""
    F = code.field
    out = {}
    for msg in itertools.product(range(F.p), repeat=code.k):
        w = sum(
            1 for j in range(code.n)
            if sum(m * code.G.rows[i][j] for i, m in enumerate(msg)) % F.p
        )
        out[w] = out.get(w, 0) + 1
    return out


def naive_distance(code: LinearCode) -> int:
    return min(w for w in naive_weights(code) if w > 0)


def random_code(rng: random.Random, p: int, k: int, n: int, tries: int = 200) -> LinearCode | None:
    """Uniform generator without zero columns, or None if none was found."""
    F = Field(p)
    for _ in range(tries):
        rows = [[rng.randrange(p) for _ in range(n)] for _ in range(k)]
        try:
            return new_code(F, rows)
        except (RankDeficient, ZeroColumn):
            continue
    return None


@st.composite
def codes(draw, primes=(2, 3, 5, 7), k_range=(1, 4), n_max=7):
    p = draw(st.sampled_from(primes))
    k = draw(st.integers(*k_range))
    n = draw(st.integers(k, max(k, n_max)))
    seed = draw(st.integers(0, 2**32 - 1))
    code = random_code(random.Random(seed), p, k, n)
    assume(code is not None)
    return code


@pytest.fixture
def g1():
    return get_example("paper-g1").code()


@pytest.fixture
def g2():
    return get_example("paper-g2").code()


@pytest.fixture
def c2():
    return get_example("paper-c2").code()


@pytest.fixture
def braid():
    return get_example("braid6").code()


@pytest.fixture
def hamming():
    return get_example("hamming74").code()
