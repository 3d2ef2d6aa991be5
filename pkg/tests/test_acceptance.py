"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Criteria whose literal statement disagrees with the computation run the
literal check as a strict xfail; a companion test asserts the measured value.
"""

import random
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import pytest

from conftest import F101, FBIG
from linedyn import constants as K
from linedyn.errors import Degenerate, IndeterminacyPoint, NonInvertible

LINES = {}


def report(k, ok, detail=""):
    line = f"CRITERION {k}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else "")
    LINES[k] = line
    print(line)
    return ok


def _signed(c):
    return c.v - c.field.p if c.v > c.field.p // 2 else c.v


STAR = (Fraction(-6), Fraction(-25, 8), Fraction(5))


# ---------------------------------------------------------------------------
# shared computations


@pytest.fixture(scope="module")
def identity():
    from linedyn.semiconj import verify_semiconjugacy_identity

    return verify_semiconjugacy_identity()


def _scan(n):
    from linedyn.dynamics import degree_estimate

    r = degree_estimate(n, 101)
    return n, r


@pytest.fixture(scope="module")
def scans():
    with ProcessPoolExecutor(max_workers=2) as ex:
        return dict(ex.map(_scan, (7, 8)))


@pytest.fixture(scope="module")
def multipliers():
    from linedyn.dynamics import form_multiplier
    from linedyn.families import random_realization_point

    rng = random.Random(6)
    return {
        n: Counter(_signed(form_multiplier(n, random_realization_point(n, FBIG, rng))) for _ in range(20))
        for n in (7, 8)
    }


@pytest.fixture(scope="module")
def plane_geometry():
    from linedyn.families import random_surface_point
    from linedyn.semiconj import (
        F_on_line_L,
        commuting_square_check,
        indeterminacy_points_7,
        mu8_branch_check,
        plane_map_model,
    )

    comps = plane_map_model(7).components
    pts = indeterminacy_points_7()
    # the point over Q(r) stands for its three conjugates
    count = sum(3 if hasattr(p.coords[0], "field") and p.coords[0].field.degree == 3 else 1 for p in pts)
    annihilated = all(q(p.coords) == 0 for p in pts for q in comps)
    rng = random.Random(11)
    agree = bad = 0
    while agree + bad < 100:
        x = random_surface_point(7, F101, rng)
        try:
            ok = commuting_square_check(x)
        except (Degenerate, NonInvertible, IndeterminacyPoint):
            continue
        agree += ok
        bad += not ok
    fixed, on_conic = mu8_branch_check(100003, 20, seed=11)
    return {
        "count": count,
        "annihilated": annihilated,
        "FL": F_on_line_L(),
        "square": (agree, bad),
        "mu8": (fixed, on_conic),
    }


# ---------------------------------------------------------------------------
# 1


@pytest.mark.xfail(strict=True, reason="the two sides differ by the constant factor 64")
def test_criterion_1(identity):
    r = identity
    ok = r["degree"] == 36 and r["homogeneous"] and r["equal"]
    report(1, ok, f"degree={r['degree']} equal={r['equal']} ratio={r['ratio']}")
    assert ok


def test_criterion_1_measured(identity):
    assert identity["degree"] == 36 and identity["homogeneous"]
    assert identity["ratio"] == 64


# 2


def test_criterion_2():
    from linedyn.semiconj import iterate_degree

    degs = [iterate_degree(k) for k in (1, 2, 3)]
    assert report(2, degs == [6, 21, 82], f"degrees={degs}")


# 3


def test_criterion_3():
    from linedyn.mpoly import MPoly
    from linedyn.semiconj import branch_curve, plane_map_model

    z1, z2, z3 = MPoly.gens(3, names=K.Z)
    W7, S7, c7 = branch_curve(7)
    W8, S8, c8 = branch_curve(8)
    ok = W7 == z1 * plane_map_model(7).Q and W8 == (z1 * z1 - z2 * z3) * plane_map_model(8).Q8
    assert report(3, ok, f"c7={c7} deg S7={S7.degree()} c8={c8} deg S8={S8.degree()}")


# 4


def test_criterion_4():
    from linedyn.arrangements import singular_points, t_vector
    from linedyn.families import parametrized_realization, random_surface_point, realizes_matroid

    star = realizes_matroid(7, STAR)
    c0, c1 = parametrized_realization(7, STAR)
    tv = t_vector(singular_points(c0 + c1))
    rng = random.Random(4)
    hits = 0
    for _ in range(20):
        for _ in range(6):
            if realizes_matroid(8, random_surface_point(8, FBIG, rng)):
                hits += 1
                break
    ok = star and hits == 20 and tv == {2: 28, 3: 21}
    assert report(4, ok, f"M7 at x*={star} M8 hits={hits}/20 t={tv}")


# 5


@pytest.mark.xfail(strict=True, reason="modal rational fibre size is 1 (n=7) and 2 (n=8)")
def test_criterion_5(scans):
    modes = {n: r["mode"] for n, r in scans.items()}
    tops = {n: max(r["histogram"]) for n, r in scans.items()}
    ok = all(m == 4 for m in modes.values())
    report(5, ok, f"modes={modes} max fibre={tops}")
    assert ok


def test_criterion_5_measured(scans):
    for n, r in scans.items():
        assert max(r["histogram"]) == 4
        assert sum(k * v for k, v in r["histogram"].items()) == r["domain"]
    assert scans[7]["mode"] == 1 and scans[8]["mode"] == 2
    assert set(scans[8]["histogram"]) <= {2, 4}


# 6


@pytest.mark.xfail(strict=True, reason="the seven-line multiplier is +2")
def test_criterion_6(multipliers):
    vals = {n: dict(c) for n, c in multipliers.items()}
    ok = all(c == Counter({-2: 20}) for c in multipliers.values())
    report(6, ok, f"values={vals} over F_100003")
    assert ok


def test_criterion_6_measured(multipliers):
    assert multipliers[8] == Counter({-2: 20})
    assert multipliers[7] == Counter({2: 20})


# 7


def test_criterion_7():
    from linedyn.dynamics import base_coordinate, lambda_step, mobius_order3, sigma0_base_check
    from linedyn.families import random_realization_point

    rng = random.Random(7)
    base = sig = 0
    while base < 50:
        x = random_realization_point(7, FBIG, rng)
        try:
            y = lambda_step(7, x)
            t0, t1 = base_coordinate(x), base_coordinate(y)
            s = sigma0_base_check(x)
        except (Degenerate, NonInvertible):
            continue
        assert t1 == mobius_order3(t0)
        base += 1
        sig += s
    assert report(7, sig == 50, f"base action {base}/50 sigma0 {sig}/50")


# 8


def test_criterion_8():
    from linedyn.dynamics import commutes_with, invariant_under
    from linedyn.families import random_realization_point, sigma_orbit, sigma_preserves_surface
    from linedyn.matroids import Permutation, group_closure, is_automorphism, matroid_M7, matroid_M8

    M7 = matroid_M7("families")
    gens7 = [Permutation.from_cycles(s, 14) for s in (K.SIGMA1_PERM, K.SIGMA2_PERM)]
    autos7 = all(is_automorphism(M7, s) for s in gens7)
    order7 = len(group_closure(gens7))
    preserved = all(not sigma_preserves_surface(w).is_zero() for w in ("sigma1", "sigma2"))
    orbit = len(sigma_orbit(STAR + (Fraction(1),)))
    rng = random.Random(8)
    commute = [sum(commutes_with(7, s, random_realization_point(7, FBIG, rng)) for _ in range(20)) for s in gens7]
    gens8 = [Permutation.from_cycles(s, 16) for s in K.SMALL_GENERATORS_8]
    autos8 = all(is_automorphism(matroid_M8(), s) for s in gens8)
    order8 = len(group_closure(gens8))
    s = Permutation.from_cycles(K.COMMUTING_INVOLUTION_8, 16)
    inv = sum(invariant_under(8, s, random_realization_point(8, FBIG, rng)) for _ in range(20))
    ok = (
        autos7 and order7 == 42 and preserved and orbit == 42 and commute == [20, 20]
        and autos8 and order8 == 32 and inv == 20
    )
    assert report(
        8, ok, f"orders {order7}/{order8} orbit={orbit} commute={commute} invariant={inv}/20"
    )


@pytest.mark.xfail(strict=True, reason="the printed sigmas preserve the realized labeling, not the residue rule")
def test_criterion_8_residue_labeling():
    from linedyn.matroids import Permutation, is_automorphism, matroid_M7

    M = matroid_M7("residue")
    assert all(is_automorphism(M, Permutation.from_cycles(s, 14)) for s in (K.SIGMA1_PERM, K.SIGMA2_PERM))


# 9


def test_criterion_9():
    from linedyn.arrangements import singular_points, t_vector
    from linedyn.dynamics import arrangement_period, lambda_arrangements, lambda_step
    from linedyn.fields import PrimeField

    F = PrimeField(K.PERIODIC_PRIME_8)
    x = tuple(F(v) for v in K.PERIODIC_POINT_8[:3])
    fixed = lambda_step(8, x) == x
    period = arrangement_period(8, x)
    c0, c1, c2 = lambda_arrangements(8, x)
    tv = t_vector(singular_points(c0 + c1 + c2))
    ok = fixed and period == 3 and tv == {2: 24, 3: 84}
    assert report(9, ok, f"fixed={fixed} period={period} t={tv}")


# 10


def test_criterion_10():
    from linedyn.modular import (
        bad_factors,
        cubic_model_check_8,
        fiber_profile,
        j_identity_check_8,
        point_order,
        profile_summary,
        torsion_point_7,
        weierstrass,
    )

    order = point_order(torsion_point_7(), weierstrass(7))
    profiles = {}
    for n in (7, 8):
        prof = fiber_profile(weierstrass(n), bad_factors(n))
        rows, total = profile_summary(prof)
        # a place of degree d contributes d fibres
        orders = sorted((d for pl, d, _ in prof for _ in range(len(pl) - 1 if isinstance(pl, tuple) else 1)), reverse=True)
        profiles[n] = (orders, total)
    cof = cubic_model_check_8()
    jid = j_identity_check_8()
    ok = (
        order == 7
        and profiles[7] == ([7, 7, 7, 1, 1, 1], 24)
        and profiles[8] == ([8, 8, 4, 2, 1, 1], 24)
        and jid
    )
    assert report(10, ok, f"order={order} profiles={profiles} cubic cofactor={cof} j identity={jid}")


# 11


def _criterion_11(g, literal):
    from linedyn.mpoly import MPoly
    from linedyn.semiconj import proportional

    z1, z2, z3 = MPoly.gens(3, names=K.Z)
    target = (z2 - z3, z3) if literal else (z2 - z3, z2)
    fl = proportional(g["FL"], target)
    ok = (
        g["count"] == 8 and g["annihilated"] and fl and g["square"] == (100, 0) and g["mu8"] == (20, 20)
    )
    detail = (
        f"indeterminacy {g['count']} annihilated={g['annihilated']} F|L={g['FL'][0]!r}:{g['FL'][1]!r}"
        f" square={g['square'][0]}/100 mu8 conic fixed={g['mu8'][0]}/20 quartic->conic={g['mu8'][1]}/20"
    )
    return ok, detail


@pytest.mark.xfail(strict=True, reason="F acts on L as (z2 - z3 : z2)")
def test_criterion_11(plane_geometry):
    ok, detail = _criterion_11(plane_geometry, literal=True)
    report(11, ok, detail)
    assert ok


def test_criterion_11_measured(plane_geometry):
    ok, _ = _criterion_11(plane_geometry, literal=False)
    assert ok


# 12


def test_criterion_12():
    import test_arrangements
    import test_dynamics
    import test_fields
    import test_mpoly
    import test_projective

    suites = [(f"field axioms {name}", lambda name=name: test_fields.test_field_axioms(name))
              for name in sorted(test_fields.FIELD_STRATEGIES)]
    suites += [
        ("ring axioms", test_mpoly.test_ring_axioms),
        ("evaluation", test_mpoly.test_evaluation_is_a_homomorphism),
        ("divide", test_mpoly.test_divide_round_trip),
        ("sqrt", test_mpoly.test_sqrt_round_trip),
        ("gcd", test_mpoly.test_gcd_round_trip),
        ("incidence", test_projective.test_incidence_is_invariant),
        ("lambda equivariance", test_arrangements.test_lambda_operator_is_projectively_equivariant),
    ]
    for n in (7, 8):
        suites.append((f"period map round trip {n}", lambda n=n: test_dynamics.test_period_map_round_trip(n)))
        suites.append((f"period map invariance {n}", lambda n=n: test_dynamics.test_period_map_is_projectively_invariant(n)))
    failed = []
    for name, fn in suites:
        try:
            fn()
        except Exception as e:  # noqa: BLE001
            failed.append(f"{name}: {type(e).__name__}")
    assert report(12, not failed, f"{len(suites) - len(failed)}/{len(suites)} suites, 1000 instances each"), failed


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-s"]))
