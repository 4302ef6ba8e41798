import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import settings, strategies as st

from partcat.ratvec import ProbVec, sort_desc

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record():
    def _record(name, ok, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {name} {detail}".rstrip())
        return ok

    return _record


# -- independent oracles -----------------------------------------------------

def brute_tail(v, l):
    """Smallest sum of n-l+1 components, by enumerating subsets."""
    n = len(v)
    return min(sum(s, Fraction(0)) for s in combinations(v, n - l + 1))


def brute_prob(x, y):
    n = max(len(x), len(y))
    x = list(x) + [Fraction(0)] * (n - len(x))
    y = list(y) + [Fraction(0)] * (n - len(y))
    ratios = []
    for l in range(1, n + 1):
        ey = brute_tail(y, l)
        if ey:
            ratios.append(brute_tail(x, l) / ey)
    return min(ratios)


# -- random instances --------------------------------------------------------

def random_composition(rng: random.Random, total: int, parts: int, positive=True) -> ProbVec:
    while True:
        cuts = sorted(rng.randint(0, total) for _ in range(parts - 1))
        a = [b - a for a, b in zip([0] + cuts, cuts + [total])]
        if not positive or all(v > 0 for v in a):
            return sort_desc(Fraction(v, total) for v in a)


@st.composite
def probvecs(draw, min_n=2, max_n=5, max_weight=20, positive=False):
    n = draw(st.integers(min_n, max_n))
    lo = 1 if positive else 0
    w = draw(st.lists(st.integers(lo, max_weight), min_size=n, max_size=n).filter(lambda a: sum(a) > 0))
    total = sum(w)
    return ProbVec(Fraction(a, total) for a in w)


@st.composite
def probvec_pairs(draw, min_n=2, max_n=5, positive=False):
    n = draw(st.integers(min_n, max_n))
    x = draw(probvecs(n, n, positive=positive))
    y = draw(probvecs(n, n, positive=positive))
    return x, y


fractions01 = st.fractions(min_value=0, max_value=1, max_denominator=30)
open_fractions01 = st.fractions(min_value=0, max_value=1, max_denominator=30).filter(lambda f: 0 < f < 1)

