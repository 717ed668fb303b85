import os
import sys
from fractions import Fraction

from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from jordansplit import Poly  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_fractions = st.builds(
    Fraction, st.integers(-9, 9), st.sampled_from([1, 1, 2, 3, 4, 5, 7]))


@st.composite
def exact_polys(draw, max_degree=5, nonzero=False):
    coeffs = draw(st.lists(small_fractions, max_size=max_degree + 1))
    p = Poly(coeffs, kind="exact")
    if nonzero and p.is_zero():
        p = Poly([draw(small_fractions.filter(bool))], kind="exact")
    return p


@st.composite
def distinct_fractions(draw, min_size=1, max_size=4):
    return draw(st.lists(small_fractions, min_size=min_size, max_size=max_size, unique=True))


@st.composite
def hermite_nodes(draw, max_nodes=4, max_mult=4):
    lams = draw(distinct_fractions(max_size=max_nodes))
    return [(lam, draw(st.lists(small_fractions, min_size=1, max_size=max_mult)))
            for lam in lams]


def random_hermite_nodes(rng, max_nodes=4, max_mult=4):
    """Same distribution as ``hermite_nodes`` driven by a ``random.Random``."""
    n = rng.randint(1, max_nodes)
    lams = set()
    while len(lams) < n:
        lams.add(Fraction(rng.randint(-9, 9), rng.choice([1, 2, 3, 5])))
    return [(lam, [Fraction(rng.randint(-9, 9), rng.choice([1, 2, 3]))
                   for _ in range(rng.randint(1, max_mult))])
            for lam in sorted(lams)]


@st.composite
def split_divisors(draw, max_degree=4):
    """``(g, roots)`` with ``g = prod (x - root)`` over distinct rational roots."""
    roots = draw(distinct_fractions(max_size=max_degree))
    return Poly.from_roots(roots), roots


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
