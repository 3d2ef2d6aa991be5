"""Command line harness: verification cases, scans, orbits and data dumps.

Reports are JSON lines on stdout (or a file); a human summary and wall times
go to stderr.  Reports depend only on the case and the seed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import constants as K
from .errors import Degenerate, NonInvertible, UnknownCase

SAMPLE_PRIME = 100003
SCAN_PRIME = 101

EXIT_PASS, EXIT_FAIL, EXIT_SKIP, EXIT_USAGE = 0, 1, 2, 3


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if hasattr(x, "to_strings"):
        return x.to_strings()
    if hasattr(x, "v"):
        return x.v
    return str(x)


def _signed(c):
    """A prime field element as the representative of least absolute value."""
    p = c.field.p
    return c.v - p if c.v > p // 2 else c.v


def _star():
    return tuple(Fraction(v) for v in K.ORBIT_POINT_7[:3])


def _field(p):
    from .fields import PrimeField

    return PrimeField(p)


def _realization_points(n, count, rng, p=SAMPLE_PRIME):
    from .families import random_realization_point

    F = _field(p)
    return [random_realization_point(n, F, rng) for _ in range(count)]


# ---------------------------------------------------------------------------
# cases: each returns (passed, witness)


def case_semiconj7(rng):
    from .semiconj import verify_semiconjugacy_identity

    r = verify_semiconjugacy_identity()
    ok = r["degree"] == 36 and r["homogeneous"] and r["ratio"] is not None
    keys = ("degree", "homogeneous", "lhs_terms", "rhs_terms", "equal", "ratio")
    return ok, {k: r[k] for k in keys}


def _branch(n):
    from .semiconj import branch_curve

    W, S, c = branch_curve(n)
    return True, {"branch_degree": W.degree(), "square_root_degree": S.degree(), "constant": c}


def case_branch7(rng):
    return _branch(7)


def case_branch8(rng):
    return _branch(8)


def case_degrees7(rng):
    from .semiconj import iterate_degree

    degs = [iterate_degree(k) for k in (1, 2, 3)]
    return degs == [6, 21, 82], {"degrees": degs}


def case_mu8(rng):
    from .semiconj import mu8_branch_check

    fixed, on_conic = mu8_branch_check(SAMPLE_PRIME, 20, rng.randrange(2**32))
    return (fixed, on_conic) == (20, 20), {"conic_fixed": fixed, "quartic_to_conic": on_conic, "samples": 20}


def case_aut7(rng):
    from .dynamics import commutes_with
    from .families import sigma_orbit, sigma_preserves_surface
    from .matroids import Permutation, group_closure, is_automorphism, matroid_M7

    M = matroid_M7("families")
    gens = [Permutation.from_cycles(s, 14) for s in (K.SIGMA1_PERM, K.SIGMA2_PERM)]
    autos = all(is_automorphism(M, s) for s in gens + [Permutation.from_cycles(K.SIGMA0_PERM, 14)])
    order = len(group_closure(gens))
    for which in ("sigma1", "sigma2"):
        sigma_preserves_surface(which)
    orbit = len(sigma_orbit(_star() + (1,)))
    pts = _realization_points(7, 20, rng)
    commute = {}
    for name, s in zip(("sigma1", "sigma2"), gens):
        commute[name] = sum(commutes_with(7, s, x) for x in pts)
    ok = autos and order == 42 and orbit == 42 and all(v == 20 for v in commute.values())
    return ok, {"automorphisms": autos, "group_order": order, "orbit": orbit, "commute": commute}


def case_aut8(rng):
    from .dynamics import invariant_under
    from .matroids import Permutation, group_closure, is_automorphism, matroid_M8

    M = matroid_M8()
    gens = [Permutation.from_cycles(s, 16) for s in K.SMALL_GENERATORS_8]
    autos = all(is_automorphism(M, s) for s in gens)
    order = len(group_closure(gens))
    s = Permutation.from_cycles(K.COMMUTING_INVOLUTION_8, 16)
    inv = sum(invariant_under(8, s, x) for x in _realization_points(8, 20, rng))
    return autos and order == 32 and inv == 20, {
        "automorphisms": autos,
        "group_order": order,
        "invariant": inv,
    }


def case_commute7(rng):
    from .families import random_surface_point
    from .semiconj import commuting_square_check

    F = _field(SCAN_PRIME)
    good = bad = skipped = 0
    while good + bad < 100:
        x = random_surface_point(7, F, rng)
        try:
            if commuting_square_check(x):
                good += 1
            else:
                bad += 1
        except (Degenerate, NonInvertible):
            skipped += 1
    return bad == 0, {"agree": good, "disagree": bad, "skipped": skipped}


def _tvector(A):
    from .arrangements import singular_points, t_vector

    return t_vector(singular_points(A))


def case_tvectors7(rng):
    from .families import parametrized_realization, realizes_matroid

    c0, c1 = parametrized_realization(7, _star())
    tv = _tvector(c0 + c1)
    ok = realizes_matroid(7, _star()) and tv == {2: 28, 3: 21}
    return ok, {"point": _star(), "t": tv}


def case_tvectors8(rng):
    from .families import parametrized_realization

    seen = Counter()
    for x in _realization_points(8, 20, rng):
        c0, c1 = parametrized_realization(8, x)
        seen[json.dumps(_tvector(c0 + c1), sort_keys=True)] += 1
    return len(seen) == 1, {"t": {k: v for k, v in seen.items()}}


def case_periodic8(rng):
    from .dynamics import arrangement_period, lambda_arrangements, lambda_step

    F = _field(K.PERIODIC_PRIME_8)
    x = tuple(F(v) for v in K.PERIODIC_POINT_8[:3])
    fixed = lambda_step(8, x) == x
    period = arrangement_period(8, x)
    c0, c1, c2 = lambda_arrangements(8, x)
    tv = _tvector(c0 + c1 + c2)
    ok = fixed and period == 3 and tv == {2: 24, 3: 84}
    return ok, {"point": x, "fixed": fixed, "period": period, "t": tv}


def _degree(n):
    from .dynamics import degree_estimate

    r = degree_estimate(n, SCAN_PRIME)
    top = max(r["histogram"])
    return top == 4, dict(r, max_fibre=top)


def case_degree7(rng):
    return _degree(7)


def case_degree8(rng):
    return _degree(8)


def _multiplier(n, rng):
    from .dynamics import form_multiplier

    vals = Counter(_signed(form_multiplier(n, x)) for x in _realization_points(n, 20, rng))
    ok = len(vals) == 1 and abs(next(iter(vals))) == 2
    return ok, {"values": dict(vals), "p": SAMPLE_PRIME}


def case_multiplier7(rng):
    return _multiplier(7, rng)


def case_multiplier8(rng):
    return _multiplier(8, rng)


def _profile(n):
    from .modular import bad_factors, fiber_profile, profile_summary, weierstrass

    E = weierstrass(n)
    prof = fiber_profile(E, bad_factors(n))
    rows, total = profile_summary(prof)
    identity = E.c4 * E.c4 * E.c4 - E.c6 * E.c6 == E.discriminant * 1728
    multiplicative = all(c == 0 for _, _, c in prof)
    return rows, total, identity and multiplicative


def case_modular7(rng):
    from .modular import point_order, torsion_point_7, weierstrass

    rows, total, inv = _profile(7)
    order = point_order(torsion_point_7(), weierstrass(7))
    orders = sorted(d for _, d in rows)
    ok = inv and total == 24 and order == 7 and orders == [1, 7, 7, 7]
    return ok, {"profile": rows, "total": total, "torsion_order": order}


def case_modular8(rng):
    from .modular import cubic_model_check_8, j_identity_check_8

    rows, total, inv = _profile(8)
    cof = cubic_model_check_8()
    jid = j_identity_check_8()
    orders = sorted(d for _, d in rows)
    ok = inv and total == 24 and jid and orders == [1, 2, 4, 8, 8]
    return ok, {"profile": rows, "total": total, "j_identity": jid, "cubic_cofactor": str(cof)}


def case_matroids(rng):
    from .families import realizes_matroid, random_surface_point

    star = realizes_matroid(7, _star())
    F = _field(SAMPLE_PRIME)
    hits = 0
    for _ in range(20):
        for _ in range(6):
            if realizes_matroid(8, random_surface_point(8, F, rng)):
                hits += 1
                break
    return star and hits == 20, {"M7_at_star": star, "M8_hits": hits}


def case_families(rng):
    from .arrangements import labeled_lambda7
    from .families import (
        excluded_locus_member,
        line_lies_on_surface,
        lines_on_surface,
        parametrized_realization,
    )

    lines = [line_lies_on_surface(8, f) for f in lines_on_surface(8)]
    c0, c1 = parametrized_realization(7, _star())
    mirror = labeled_lambda7(c0) == c1
    on_l1 = "L1" in excluded_locus_member((0, 0, 0, 1))
    ok = all(lines) and len(lines) == 8 and mirror and on_l1
    return ok, {"lines_on_Z8": sum(lines), "mirror": mirror, "catalog": on_l1}


CASES = {
    "semiconj7": (case_semiconj7, "plane map identity Q1(Q1,Q2,Q3) ~ Q1 R^2 (degree 36)"),
    "branch7": (case_branch7, "discriminant of Z7 over the plane = c z1 Q S^2"),
    "branch8": (case_branch8, "discriminant of Z8 over the plane = c (z1^2 - z2 z3) Q8 S^2"),
    "degrees7": (case_degrees7, "degrees of F, F^2, F^3 are 6, 21, 82"),
    "mu8": (case_mu8, "mu8 fixes conic points and maps quartic points to the conic"),
    "aut7": (case_aut7, "sigma group of order 42, orbit of x*, commutation with the self-map"),
    "aut8": (case_aut8, "automorphism group of order 32 and the invariance involution"),
    "commute7": (case_commute7, "projection commutes with the self-map and F at 100 points"),
    "tvectors7": (case_tvectors7, "t-vector of C0 + C1 at x*"),
    "tvectors8": (case_tvectors8, "t-vector of C0 + C1 at random points"),
    "periodic8": (case_periodic8, "fixed point over F_1013 with an arrangement of period 3"),
    "degree7": (case_degree7, "fibre sizes of the seven-line self-map over F_101"),
    "degree8": (case_degree8, "fibre sizes of the eight-line self-map over F_101"),
    "multiplier7": (case_multiplier7, "multiplier of the 2-form, seven lines"),
    "multiplier8": (case_multiplier8, "multiplier of the 2-form, eight lines"),
    "modular7": (case_modular7, "E7: torsion point of order 7 and discriminant profile"),
    "modular8": (case_modular8, "E8: discriminant profile, j identity, cubic model"),
    "matroids": (case_matroids, "realizations carry the model matroids"),
    "families": (case_families, "lines on Z8, mirror identity and curve catalog"),
}


def run_case(case_id, seed=0):
    """Run one case; returns a report dict (without wall time)."""
    if case_id not in CASES:
        raise UnknownCase(case_id)
    fn, _ = CASES[case_id]
    rng = random.Random(f"{case_id}:{seed}")
    try:
        ok, witness = fn(rng)
        status = "pass" if ok else "fail"
    except Degenerate as e:
        status, witness = "skip", {"error": f"{type(e).__name__}: {e}"}
    except Exception as e:  # noqa: BLE001 - reported as a failure with its reproducer
        status, witness = "fail", {"error": f"{type(e).__name__}: {e}"}
    return {"case": case_id, "status": status, "seed": seed, "witness": _jsonable(witness)}


def _timed(args):
    case_id, seed = args
    t = time.perf_counter()
    rep = run_case(case_id, seed)
    return rep, time.perf_counter() - t


# ---------------------------------------------------------------------------
# commands


def _emit(lines, path):
    text = "".join(json.dumps(r, sort_keys=True) + "\n" for r in lines)
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args):
    if args.list:
        for cid, (_, desc) in CASES.items():
            print(f"{cid}\t{desc}")
        return EXIT_PASS
    ids = args.case or list(CASES)
    for cid in ids:
        if cid not in CASES:
            print(f"unknown case: {cid}", file=sys.stderr)
            return EXIT_USAGE
    work = [(cid, args.seed) for cid in ids]
    if args.jobs == 1 or len(work) == 1:
        results = [_timed(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            results = list(ex.map(_timed, work))
    reports = [r for r, _ in results]
    _emit(reports, args.json)
    for rep, dt in results:
        print(f"{rep['case']:<12} {rep['status'].upper():<4} {dt:8.2f}s", file=sys.stderr)
    statuses = {r["status"] for r in reports}
    if "fail" in statuses:
        return EXIT_FAIL
    if "skip" in statuses:
        return EXIT_SKIP
    return EXIT_PASS


def _functional_graph(n, p):
    from .dynamics import lambda_step
    from .families import as_point, enumerate_surface_points

    succ = {}
    for x in enumerate_surface_points(n, p):
        try:
            succ[x] = as_point(lambda_step(n, x))
        except (Degenerate, NonInvertible):
            succ[x] = None
    return succ


def orbit_lengths(n, p):
    """Histogram of ``(tail, period)`` over all points, ``period = None`` for orbits leaving the domain."""
    succ = _functional_graph(n, p)
    hist = Counter()
    for x in succ:
        seen, cur, k = {}, x, 0
        while cur is not None and cur not in seen:
            seen[cur] = k
            cur = succ.get(cur)
            k += 1
        if cur is None:
            hist[(k, None)] += 1
        else:
            hist[(seen[cur], k - seen[cur])] += 1
    return [{"tail": t, "period": q, "count": c} for (t, q), c in sorted(hist.items(), key=str)]


def cmd_scan(args):
    from .dynamics import degree_estimate

    if args.stat == "degree":
        out = degree_estimate(args.n, args.p)
    else:
        out = {"p": args.p, "n": args.n, "orbits": orbit_lengths(args.n, args.p)}
    _emit([_jsonable(out)], None)
    return EXIT_PASS


def cmd_orbit(args):
    from .dynamics import orbit
    from .families import surface_eval

    F = _field(args.p)
    try:
        x = tuple(F(int(v)) for v in args.point.split(","))
    except ValueError:
        print("point must be three integers a,b,c", file=sys.stderr)
        return EXIT_USAGE
    if len(x) != 3 or surface_eval(args.n, x) != 0:
        print("point is not on the surface", file=sys.stderr)
        return EXIT_USAGE
    rec = orbit(args.n, x, args.max)
    _emit([rec.to_json()], None)
    return EXIT_PASS if rec.reason in ("periodic", "budget") else EXIT_SKIP


def cmd_dump(args):
    from .families import sigma_polynomials, surface_model
    from .modular import weierstrass
    from .semiconj import plane_map_model

    if args.what == "quartic":
        out = surface_model(args.n).quartic.to_json()
    elif args.what == "families":
        out = surface_model(args.n).to_json()
    elif args.what == "sigma":
        if args.n != 7:
            print("sigma maps exist for n = 7", file=sys.stderr)
            return EXIT_USAGE
        out = {w: [p.to_json() for p in sigma_polynomials(w)] for w in ("sigma1", "sigma2")}
    elif args.what == "planemap":
        out = plane_map_model(args.n).to_json()
    else:
        out = weierstrass(args.n).to_json()
    _emit([_jsonable(out)], None)
    return EXIT_PASS


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser():
    ap = _Parser(prog="linedyn", description="Line arrangement dynamics on Z7 and Z8.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run verification cases")
    v.add_argument("--case", action="append", help="case id (repeatable; default all)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    v.add_argument("--json", metavar="PATH", help="write JSON lines here instead of stdout")
    v.add_argument("--list", action="store_true", help="list the cases")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", help="statistics over all points of a finite field")
    s.add_argument("--n", type=int, choices=(7, 8), required=True)
    s.add_argument("--p", type=int, default=SCAN_PRIME)
    s.add_argument("--stat", choices=("degree", "orbit-lengths"), default="degree")
    s.set_defaults(func=cmd_scan)

    o = sub.add_parser("orbit", help="iterate the self-map from a point")
    o.add_argument("--n", type=int, choices=(7, 8), required=True)
    o.add_argument("--p", type=int, required=True)
    o.add_argument("--point", required=True, help="chart coordinates a,b,c")
    o.add_argument("--max", type=int, default=100)
    o.set_defaults(func=cmd_orbit)

    d = sub.add_parser("dump", help="print model data as JSON")
    d.add_argument("--n", type=int, choices=(7, 8), required=True)
    d.add_argument("--what", choices=("quartic", "families", "sigma", "planemap", "weierstrass"), required=True)
    d.set_defaults(func=cmd_dump)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    t = time.perf_counter()
    try:
        code = args.func(args)
    except (ValueError, UnknownCase) as e:
        print(f"error: {e}", file=sys.stderr)
        code = EXIT_USAGE
    print(f"wall time {time.perf_counter() - t:.2f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
