import random
from fractions import Fraction
from itertools import product

import pytest

from conftest import F101, FBIG
from linedyn import constants as K
from linedyn.errors import BudgetExceeded, DegenerateRealization, IndeterminacyPoint
from linedyn.families import (
    as_point,
    base_points_8,
    enumerate_surface_points,
    excluded_locus_member,
    line_lies_on_surface,
    lines_on_surface,
    parametrized_realization,
    random_realization_point,
    random_surface_point,
    realizes_matroid,
    sigma_orbit,
    sigma_polynomial_action,
    sigma_preserves_surface,
    surface_eval,
    surface_germ,
    surface_model,
)
from linedyn.fields import PrimeField
from linedyn.mpoly import MPoly


def brute_force_count(n, p):
    """Points of ``Z_n`` in P^3(F_p) by scanning every normalized coordinate vector."""
    f = surface_model(n).quartic
    F = PrimeField(p)
    count = 0
    for lead in range(4):
        for rest in product(range(p), repeat=3 - lead):
            v = (0,) * lead + (1,) + rest
            if f(tuple(F(c) for c in v)) == 0:
                count += 1
    return count


def test_surface_eval_examples(star):
    assert surface_eval(7, star) == 0
    assert surface_eval(7, (1, 1, 0, 0)) == 1
    F = PrimeField(1013)
    assert surface_eval(8, tuple(F(c) for c in K.PERIODIC_POINT_8)) == 0


@pytest.mark.parametrize("n", [7, 8])
def test_singular_points(n):
    M = surface_model(n)
    grad = M.gradient()
    for s in M.singular_points:
        assert M.quartic(s.coords) == 0
        assert all(g(s.coords) == 0 for g in grad)


@pytest.mark.parametrize("n,p", [(7, 11), (8, 13), (7, 7)])
def test_enumeration_matches_brute_force(n, p):
    pts = enumerate_surface_points(n, p)
    assert len(set(pts)) == len(pts)
    assert all(surface_eval(n, y) == 0 for y in pts)
    assert len(pts) == brute_force_count(n, p)


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_surface_points(7, 100003)


@pytest.mark.parametrize("n", [7, 8])
def test_random_points_realize_the_model_matroid(n):
    rng = random.Random(n)
    ok = sum(realizes_matroid(n, random_surface_point(n, FBIG, rng)) for _ in range(100))
    assert ok >= 95


def test_star_realization(star):
    assert realizes_matroid(7, star)
    c0, c1 = parametrized_realization(7, star)
    assert len(c0) == len(c1) == 7
    assert [l for l in c0[:4]] == surface_model(7).frame


def test_octagon_base_points_are_degenerate():
    for y in base_points_8():
        assert surface_eval(8, y) == 0
        try:
            assert not realizes_matroid(8, y.coords[:3] if y.coords[3] == 1 else y)
        except DegenerateRealization:
            pass


def test_realization_on_excluded_line():
    # (0 : 0 : 0 : 1) lies on L1
    with pytest.raises(DegenerateRealization):
        parametrized_realization(7, (0, 0, 0))


def test_excluded_locus_catalog():
    assert "L1" in excluded_locus_member((0, 0, 0, 1))
    assert set(excluded_locus_member((0, 0, 1, 0))) == {"L3", "L5", "L12"}
    # a point of the conic: y2 + y3 = y4 and y1 y3 - y3^2 - y1 y4 = 0; take y3 = 2, y4 = 1
    y3, y4 = Fraction(2), Fraction(1)
    y1 = y3 * y3 / (y3 - y4)
    assert "Co" in excluded_locus_member((y1, y4 - y3, y3, y4))
    rng = random.Random(2)
    x = random_realization_point(7, FBIG, rng)
    assert excluded_locus_member(as_point(x)) == []


def test_eight_lines_on_Z8():
    ls = lines_on_surface(8)
    assert len(ls) == 8
    assert all(line_lies_on_surface(8, f) for f in ls)
    y = MPoly.gens(4, names=K.Y)
    assert not line_lies_on_surface(8, (y[0] - y[1], y[2] + y[3]))


@pytest.mark.parametrize("which", ["sigma1", "sigma2"])
def test_sigma_maps_preserve_Z7(which):
    assert not sigma_preserves_surface(which).is_zero()
    rng = random.Random(7)
    for _ in range(20):
        y = as_point(random_surface_point(7, FBIG, rng))
        try:
            z = sigma_polynomial_action(which, y)
        except IndeterminacyPoint:
            continue
        assert surface_eval(7, z) == 0


def test_orbit_of_star(star):
    orb = sigma_orbit(star)
    assert len(orb) == 42
    assert all(surface_eval(7, y) == 0 for y in orb)


@pytest.mark.parametrize("which", ["sigma1", "sigma2"])
def test_sigma_undefined_at_singular_points(which):
    for s in surface_model(7).singular_points:
        with pytest.raises(IndeterminacyPoint):
            sigma_polynomial_action(which, s)


def test_surface_germ_stays_on_surface():
    rng = random.Random(4)
    x = random_surface_point(7, F101, rng)
    y = as_point(x)
    d = [F101.random(rng) for _ in range(4)]
    germ = surface_germ(7, y, d, prec=8)
    val = surface_model(7).quartic.evaluate(germ)
    assert all(c == 0 for c in val.c)
    assert tuple(g.c[0] for g in germ) == y.coords
