from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import F101, FBIG, THOUSAND, fp_elements, rationals
from linedyn.errors import FieldMismatch, NoRoot, NonInvertible
from linedyn.fields import (
    QQ,
    ExtensionField,
    JetRing,
    PowerSeriesRing,
    PrimeField,
    RationalFunctionField,
    field_from_json,
    field_of,
    sqrt_in_field,
)

Q2 = ExtensionField(QQ, [1, 0, -2], name="s")
QR = ExtensionField(QQ, [1, -4, 3, 1], name="r")
QT = RationalFunctionField(QQ, "t")


def ext_elements(E):
    return st.lists(rationals, min_size=E.degree, max_size=E.degree).map(E)


def ratfuncs():
    coeffs = st.lists(st.integers(-5, 5), min_size=1, max_size=3)
    return st.tuples(coeffs, coeffs.filter(lambda c: any(c))).map(lambda nd: QT.from_poly(*nd))


FIELD_STRATEGIES = {
    "F101": fp_elements(F101),
    "F100003": fp_elements(FBIG),
    "Q": rationals,
    "Q(sqrt2)": ext_elements(Q2),
    "Q(r)": ext_elements(QR),
    "Q(t)": ratfuncs(),
}


@pytest.mark.parametrize("name", sorted(FIELD_STRATEGIES))
def test_field_axioms(name):
    s = FIELD_STRATEGIES[name]

    @THOUSAND
    @given(s, s, s)
    def check(a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == 0 * a
        if a != 0:
            assert a * (1 / a) == 1 + 0 * a
            assert (b / a) * a == b

    check()


@given(st.integers(0, 100), st.integers(0, 100))
def test_fp_against_integer_arithmetic(a, b):
    x, y = F101(a), F101(b)
    assert (x + y).v == (a + b) % 101
    assert (x * y).v == a * b % 101
    assert (x - y).v == (a - b) % 101
    if b:
        assert (x / y).v * b % 101 == a


def test_prime_field_rejects_composites():
    with pytest.raises(ValueError):
        PrimeField(100381)  # 37 * 2713
    with pytest.raises(ValueError):
        PrimeField(2)


def test_mixing_fields_raises():
    with pytest.raises(FieldMismatch):
        F101(1) + FBIG(1)


def test_division_by_zero_raises():
    with pytest.raises(NonInvertible):
        F101(3) / F101(0)
    with pytest.raises(NonInvertible):
        QT.zero.inverse()


@given(st.integers(0, FBIG.p - 1))
def test_sqrt_round_trip(a):
    x = FBIG(a)
    r = sqrt_in_field(x * x)
    assert r * r == x * x
    assert r.v <= FBIG.p - r.v


def test_sqrt_of_non_residue():
    # 2 is a non-residue modulo 101 (101 = 5 mod 8)
    with pytest.raises(NoRoot):
        sqrt_in_field(F101(2))
    with pytest.raises(NoRoot):
        QQ.sqrt(Fraction(2))
    assert QQ.sqrt(Fraction(9, 4)) == Fraction(3, 2)


def test_extension_generators():
    s = Q2.gen
    assert s * s == 2
    r = QR.gen
    assert r**3 - 4 * r**2 + 3 * r + 1 == 0


@given(ext_elements(Q2), ext_elements(Q2))
def test_norm_is_multiplicative(a, b):
    def norm(x):
        u, v = x.c
        return u * u - 2 * v * v

    assert norm(a * b) == norm(a) * norm(b)


@given(ratfuncs(), ratfuncs(), st.integers(-30, 30))
def test_ratfunc_evaluation_is_a_homomorphism(f, g, t0):
    try:
        fv, gv = f(t0), g(t0)
    except NonInvertible:
        return
    assert (f + g)(t0) == fv + gv
    assert (f * g)(t0) == fv * gv


def test_ratfunc_composition():
    t = QT.gen
    f = (t * t + 1) / (t - 2)
    g = (t + 1) / t
    assert f(g)(Fraction(3)) == f(g(Fraction(3)))


def test_jets_differentiate_products():
    J = JetRing(F101)
    x = J(F101(5), 1, 0)
    y = J(F101(7), 0, 1)
    f = x * x * y + y * 3
    assert f.c == F101(5 * 5 * 7 + 21)
    assert f.d1 == F101(2 * 5 * 7)
    assert f.d2 == F101(25 + 3)
    g = 1 / (x + y)
    assert g.d1 == -F101(1) / F101(12 * 12)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=8))
def test_power_series_sqrt_and_inverse(cs):
    R = PowerSeriesRing(QQ, prec=8)
    s = R([Fraction(1)] + [Fraction(c) for c in cs])
    assert s.sqrt() * s.sqrt() == s
    assert s * s.inverse() == R(1)


def test_field_json_round_trip():
    for F in (QQ, F101, Q2, QT):
        assert field_from_json(F.to_json()) == F


def test_field_of():
    assert field_of(1, F101(2)) == F101
    assert field_of(Fraction(1), 2) is QQ
