from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from linedyn.fields import PrimeField
from linedyn.mpoly import MPoly

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large]
)
settings.load_profile("default")

# suites that must see at least a thousand random instances
THOUSAND = settings(max_examples=1000, deadline=None)

P_SMALL = 101
P_SAMPLE = 100003
F101 = PrimeField(P_SMALL)
FBIG = PrimeField(P_SAMPLE)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)
small_ints = st.integers(min_value=-20, max_value=20)


def fp_elements(F):
    return st.integers(min_value=0, max_value=F.p - 1).map(F)


@st.composite
def polys(draw, n=3, max_terms=5, max_deg=3, coeffs=small_ints):
    """Random polynomials with integer coefficients in ``n`` variables."""
    terms = draw(
        st.dictionaries(
            st.tuples(*[st.integers(0, max_deg)] * n), coeffs, max_size=max_terms
        )
    )
    return MPoly.from_dict({k: Fraction(v) for k, v in terms.items() if v}, n)


@st.composite
def forms(draw, deg, max_terms=4, coeffs=small_ints):
    """Random ternary forms of degree ``deg``."""
    mons = [(i, j, deg - i - j) for i in range(deg + 1) for j in range(deg + 1 - i)]
    chosen = draw(st.lists(st.sampled_from(mons), min_size=1, max_size=max_terms, unique=True))
    cs = draw(st.lists(coeffs.filter(bool), min_size=len(chosen), max_size=len(chosen)))
    return MPoly.from_dict(dict(zip(chosen, cs)), 3)


@pytest.fixture
def star():
    return (Fraction(-6), Fraction(-25, 8), Fraction(5))


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is not None and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(mod.LINES):
            terminalreporter.write_line(mod.LINES[k])
