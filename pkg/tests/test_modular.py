import random
from fractions import Fraction

import pytest

from linedyn import constants as K
from linedyn.errors import CertificationFailed
from linedyn.families import surface_model
from linedyn.mpoly import parse
from linedyn.modular import (
    INFINITY,
    O,
    QT,
    WeierstrassModel,
    bad_factors,
    cubic_model_check_8,
    e_prime_8,
    fiber_profile,
    j_identity_check_8,
    point_order,
    profile_summary,
    rational_roots,
    ratfun,
    torsion_point_7,
    valuation,
    weierstrass,
)

t = ratfun("t")


@pytest.mark.parametrize("n", [7, 8])
def test_invariant_identity(n):
    E = weierstrass(n)
    assert E.c4 ** 3 - E.c6 ** 2 == E.discriminant * 1728


def test_group_law_identities():
    P = torsion_point_7()
    E = weierstrass(7)
    assert E.add(P, O) == P and E.add(O, P) == P
    assert E.add(P, E.neg(P)) == O
    Q = E.add(P, P)
    assert E.contains(Q)
    assert E.add(E.add(P, Q), P) == E.add(P, E.add(Q, P))
    assert E.mul(3, P) == E.add(Q, P)
    assert E.mul(-2, P) == E.neg(Q)


def test_doubling_matches_division_polynomial():
    E = weierstrass(7)
    P = torsion_point_7()
    for k in (1, 2, 3):
        R = E.mul(k, P)
        assert E.add(R, R).x == E.double_x(R)


def test_torsion_point_has_order_seven():
    P = torsion_point_7()
    E = weierstrass(7)
    assert point_order(P, E) == 7
    assert point_order(P, E, bound=6) is None
    assert E.mul(7, P) == O and E.mul(6, P) == E.neg(P)


def test_point_must_be_on_curve():
    with pytest.raises(ValueError):
        weierstrass(7).point(1, 1)


def test_singular_equation_rejected():
    with pytest.raises(ValueError):
        WeierstrassModel(0, 0, 0)


def test_valuations():
    f = ratfun("t^2*(t - 1)^3", "(t + 2)*t^5")
    assert valuation(f, Fraction(0)) == -3
    assert valuation(f, Fraction(1)) == 3
    assert valuation(f, Fraction(-2)) == -1
    assert valuation(f, INFINITY) == -(5 - 6)
    assert valuation(ratfun("(t^2 + 1)^2"), (1, 0, 1)) == 2


def test_rational_roots_against_brute_force():
    assert rational_roots([-6, 11, -6, 1]) == [1, 2, 3]
    assert rational_roots([0, 0, Fraction(1, 2), -1]) == [0, Fraction(1, 2)]
    assert rational_roots([1, 0, 1]) == []


def test_profile_of_a_cuspidal_family():
    E = WeierstrassModel(0, 0, t)
    prof = {pl: (d, c) for pl, d, c in fiber_profile(E)}
    assert prof[Fraction(0)] == (2, None)
    assert prof[INFINITY] == (10, None)


def test_profile_of_a_multiplicative_fibre():
    # Legendre family: I2 at 0 and 1
    E = WeierstrassModel(-(t + 1), t, 0)
    prof = {pl: (d, c) for pl, d, c in fiber_profile(E)}
    assert prof[Fraction(0)] == (2, 0)
    assert prof[Fraction(1)] == (2, 0)


def test_j_of_the_square_lattice_curve():
    assert WeierstrassModel(0, 1, 0).j_invariant() == QT(1728)


@pytest.mark.parametrize("n,orders", [(7, [7, 7, 7, 1]), (8, [8, 8, 4, 2, 1])])
def test_bad_fibres(n, orders):
    prof = fiber_profile(weierstrass(n), bad_factors(n))
    assert sorted((d for _, d, _ in prof), reverse=True) == orders
    assert all(c == 0 for _, _, c in prof)
    _, total = profile_summary(prof)
    assert total == 24


def test_profile_requires_declared_factors():
    with pytest.raises(CertificationFailed):
        fiber_profile(weierstrass(7))


def test_j_has_pole_of_order_seven_at_zero():
    assert valuation(weierstrass(7).j_invariant(), Fraction(0)) == -7


def test_j_identity():
    assert j_identity_check_8()
    assert e_prime_8().j_invariant() != weierstrass(8).j_invariant()


def test_cubic_model():
    Y = parse("Y", ("X", "Y", "t"))
    assert cubic_model_check_8() == 1 - Y


def test_cubic_model_at_a_point():
    q = surface_model(8).quartic
    c = parse(K.CUBIC_MODEL_8, ("X", "Y", "t"))
    rng = random.Random(0)
    for _ in range(10):
        X, Y, s = (Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3))
        assert q((X, s * (Y - 1) + 1, Y, 1)) == (1 - Y) * c((X, Y, s))


def test_cubic_model_negative_control():
    wrong = K.CUBIC_MODEL_8.replace("+ X*Y", "- X*Y")
    with pytest.raises(CertificationFailed):
        cubic_model_check_8(wrong)


def test_substitution_and_json():
    E = weierstrass(8)
    assert E.substitute(t).j_invariant() == E.j_invariant()
    assert WeierstrassModel.from_strings(K.WEIERSTRASS_8).to_json() == E.to_json()
