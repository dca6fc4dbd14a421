import random

import pytest
from hypothesis import settings, strategies as st

from boolideal import BoolPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def polys(draw, n=None, max_n=6, max_terms=12):
    if n is None:
        n = draw(st.integers(1, max_n))
    terms = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=max_terms))
    return BoolPoly(terms, n)


@st.composite
def poly_pairs(draw, max_n=6, max_terms=12):
    n = draw(st.integers(1, max_n))
    return draw(polys(n, max_terms=max_terms)), draw(polys(n, max_terms=max_terms))


@st.composite
def poly_triples(draw, max_n=5, max_terms=10):
    n = draw(st.integers(1, max_n))
    return tuple(draw(polys(n, max_terms=max_terms)) for _ in range(3))


@pytest.fixture
def rng():
    return random.Random(20240229)



def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in mod.RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({detail})")
