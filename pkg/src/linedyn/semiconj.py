"""Plane maps under the double covers ``Z_n -> P^2``.

The projection from ``s8 = (1:0:0:0)`` forgets ``y1``; it is two-to-one since
both quartics are quadratic in ``y1``.  For seven lines the self-map descends
to the explicit sextic plane map ``F = (Q1 : Q2 : Q3)``; for eight lines the
plane map is evaluated pointwise through the surface.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import constants as K
from .dynamics import lambda_step
from .errors import (
    CertificationFailed,
    Degenerate,
    IndeterminacyPoint,
    NoLift,
    NonInvertible,
)
from .families import _quadratic_roots, _y1_coefficients, surface_model
from .fields import QQ, ExtensionField, field_of, is_unit
from .mpoly import (
    NOT_A_SQUARE,
    NOT_DIVISIBLE,
    MPoly,
    certify_coprime,
    discriminant_wrt,
    exact_divide,
    gcd_many,
    poly_sqrt,
)
from .projective import ProjPoint, _div


class PlaneMapModel:
    """Polynomial data of the plane maps; ``n = 7`` carries the explicit map."""

    def __init__(self, n):
        self.n = n
        z1, z2, z3 = MPoly.gens(3, names=K.Z)
        self.gens = (z1, z2, z3)
        if n == 7:
            self.Q = K.poly(K.QUINTIC, K.Z)
            self.Q1 = z1 * self.Q
            self.Q2 = K.poly(K.Q2, K.Z)
            self.Q3 = K.poly(K.Q3, K.Z)
            self.R4 = K.poly(K.R4, K.Z)
            self.R7 = K.poly(K.R7, K.Z)
            self.R = z2**2 * (z1 - z3) ** 2 * self.R4 * self.R7 * Fraction(K.R_SCALAR)
            self.components = (self.Q1, self.Q2, self.Q3)
            self.branch = z1 * self.Q
        elif n == 8:
            self.conic = K.poly(K.BRANCH_CONIC_8, K.Z)
            self.Q8 = K.poly(K.BRANCH_QUARTIC_8, K.Z)
            self.branch = self.conic * self.Q8
        else:
            raise ValueError("n must be 7 or 8")

    def to_json(self):
        if self.n == 7:
            names = ("Q", "Q1", "Q2", "Q3", "R4", "R7", "R")
        else:
            names = ("conic", "Q8")
        return {k: getattr(self, k).to_json() for k in names}


@lru_cache(maxsize=None)
def plane_map_model(n):
    return PlaneMapModel(n)


# ---------------------------------------------------------------------------
# the algebraic identity and the branch curves


def verify_semiconjugacy_identity():
    """Compare ``Q1(Q1, Q2, Q3)`` with ``Q1 * R^2``.

    The report records literal equality and, independently, the exact ratio
    of the two sides when it is a constant.
    """
    M = plane_map_model(7)
    lhs = M.Q1.substitute(list(M.components))
    rhs = M.Q1 * M.R * M.R
    q = exact_divide(lhs, rhs)
    ratio = q.constant_value() if q is not NOT_DIVISIBLE and q.is_constant() else None
    return {
        "degree": lhs.degree(),
        "homogeneous": lhs.is_homogeneous(),
        "lhs_terms": len(lhs),
        "rhs_terms": len(rhs),
        "equal": lhs == rhs,
        "ratio": ratio,
        "lhs": lhs,
        "rhs": rhs,
    }


def _to_plane(p):
    """Rename ``(y2, y3, y4)`` to ``(z1, z2, z3)`` in a polynomial free of ``y1``."""
    q = p.drop_variable(0) if p.n == 4 else p
    return MPoly(3, dict(q.terms), q.field, K.Z)


def branch_curve(n):
    """Certified factorization ``disc_y1 = c * W * S^2`` of the projection's branch data."""
    D = _to_plane(discriminant_wrt(surface_model(n).quartic, 0))
    W = plane_map_model(n).branch
    E = exact_divide(D, W)
    if E is NOT_DIVISIBLE:
        raise CertificationFailed("the expected branch curve does not divide the discriminant")
    c = E.leading_coefficient()
    S = poly_sqrt(E / c)
    if S is NOT_A_SQUARE or S.is_zero():
        raise CertificationFailed("the cofactor is not a constant times a square")
    if D != W * S * S * c:
        raise CertificationFailed("reassembled product differs from the discriminant")
    return W, S, c


# ---------------------------------------------------------------------------
# the explicit plane map for seven lines


def F_eval(z):
    """``(Q1 : Q2 : Q3)`` at a point of the plane."""
    c = z.coords if isinstance(z, ProjPoint) else tuple(z)
    v = tuple(q(c) for q in plane_map_model(7).components)
    if all(x == 0 for x in v):
        raise IndeterminacyPoint(f"F is undefined at {z}")
    return ProjPoint(v)


def F_on_line_L():
    """Reduced binary forms ``(a, b)`` with ``F(0 : z2 : z3) = (0 : a : b)``."""
    M = plane_map_model(7)
    z1, z2, z3 = M.gens
    zero = MPoly.const(0, 3, names=K.Z)
    vals = [q.substitute([zero, z2, z3]) for q in M.components]
    if not vals[0].is_zero():
        raise CertificationFailed("F does not preserve the line z1 = 0")
    g = gcd_many(vals[1:])
    a, b = (exact_divide(v, g) for v in vals[1:])
    return a, b


def proportional(pair, other):
    """Binary forms ``(a, b)`` and ``(c, d)`` define the same map: ``a d == b c``."""
    a, b = pair
    c, d = other
    return a * d == b * c


def indeterminacy_points_7():
    """Base points of ``F``: the five rational ones and ``q_r`` over ``Q(r)``.

    ``q_r`` is given at the generator ``r`` of the cubic field; since ``F`` has
    rational coefficients this covers all three conjugate points.
    """
    pts = [ProjPoint(v) for v in K.INDETERMINACY_RATIONAL_7.values()]
    E = ExtensionField(QQ, list(K.INDETERMINACY_CUBIC_7), name="r")
    r = E.gen
    pts.append(ProjPoint((-r * r + 2 * r, r, E.one)))
    return pts


# ---------------------------------------------------------------------------
# pointwise plane maps through the surface


def projection(y):
    """``(y1 : y2 : y3 : y4) -> (y2 : y3 : y4)``; chart points get ``y4 = 1``."""
    c = y.coords if isinstance(y, ProjPoint) else tuple(y)
    if len(c) == 3:
        one = field_of(*c).one if field_of(*c) is not QQ else 1
        c = (c[0],) + tuple(c[1:]) + (one,)
    if all(x == 0 for x in c[1:]):
        raise IndeterminacyPoint("projection centre")
    return ProjPoint(c[1:])


def lifts(n, z):
    """Chart points of ``Z_n`` over ``z`` (at most two)."""
    c = z.coords if isinstance(z, ProjPoint) else tuple(z)
    if not is_unit(c[2]):
        raise NoLift("lifts are taken in the chart y4 = 1")
    F = field_of(*c)
    x2, x3 = _div(c[0], c[2]), _div(c[1], c[2])
    one = F.one if F is not QQ else 1
    a, b, cc = (f((0 * x2, x2, x3, one)) for f in _y1_coefficients(n))
    roots = _quadratic_roots(a, b, cc, F)
    if roots is None:
        raise NoLift("the whole fibre lies on the surface")
    if not roots:
        raise NoLift("the fibre has no rational point")
    return [(r, x2, x3) for r in roots]


def mu_pointwise(n, z):
    """The plane map at ``z``: project the self-map of a lift.

    Every lift in the domain of the self-map must give the same image.
    """
    images = []
    last_error = None
    for x in lifts(n, z):
        try:
            images.append(projection(lambda_step(n, x)))
        except (Degenerate, NonInvertible) as e:
            last_error = e
    if not images:
        raise last_error
    if any(im != images[0] for im in images):
        raise CertificationFailed(f"the two lifts over {z} give different images")
    return images[0]


def commuting_square_check(x):
    """``projection(lambda(x)) == F(projection(x))`` for a chart point of ``Z_7``."""
    return projection(lambda_step(7, x)) == F_eval(projection(x))


# ---------------------------------------------------------------------------
# iterates of F


@lru_cache(maxsize=None)
def iterate_components(k):
    """Coprime components of ``F^k`` (up to a common scalar)."""
    if k < 1:
        raise ValueError("k must be positive")
    M = plane_map_model(7)
    if k == 1:
        return tuple(M.components)
    prev = iterate_components(k - 1)
    raw = [q.substitute(list(prev)) for q in M.components]
    g = gcd_many(raw)
    return tuple(exact_divide(r, g) for r in raw)


def iterate_degree(k):
    """Degree of the coprime representative of ``F^k``."""
    comps = iterate_components(k)
    if not certify_coprime(list(comps)):
        raise CertificationFailed("components share a factor")
    return comps[0].degree()


# ---------------------------------------------------------------------------
# values of the plane map on the branch curve, as limits along plane lines


def _poly_divmod(a, b, p):
    from ._modgcd import _trim

    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        s = len(a) - len(b)
        q[s] = c
        for i, bi in enumerate(b):
            a[s + i] = (a[s + i] - c * bi) % p
        a.pop()
        _trim(a)
    return _trim(q), a


def rational_reconstruction(xs, ys, p, max_num_degree):
    """``(num, den)`` dense mod-p lists with ``num(x)/den(x) = y`` at the samples.

    Extended Euclid on the interpolating polynomial and the product of
    ``(s - x_i)``; the numerator degree is at most ``max_num_degree``.
    """
    from ._modgcd import _divexact, _interpolate, _sub, _ugcd, _umul

    m = [1]
    for x in xs:
        m = _umul(m, [-x % p, 1], p)
    f = _interpolate(list(xs), list(ys), p)
    r0, r1, t0, t1 = m, f, [], [1]
    while len(r1) - 1 > max_num_degree:
        q, r = _poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        t0, t1 = t1, _sub(t0, _umul(q, t1, p), p)
    g = _ugcd(r1, t1, p) if r1 else t1
    if len(g) > 1:
        r1 = _divexact(r1, g, p) if r1 else r1
        t1 = _divexact(t1, g, p)
    return r1, t1


def mu_limit(n, z, w, weights, samples=60, max_degree=24):
    """Limit of the plane map at ``z`` along the plane line ``z + s w``.

    The map is sampled at points of the line where it is defined, its three
    coordinates divided by the linear form ``weights``; each ratio is then
    recovered as a rational function of ``s`` and evaluated at ``s = 0``.
    Needs a prime field with room for ``samples`` good points.
    """
    from ._modgcd import _eval

    F = field_of(*z.coords)
    p = F.p
    xs, vals = [], []
    s = 1
    while len(xs) < samples and s < p:
        pt = ProjPoint(tuple(a + F(s) * b for a, b in zip(z.coords, w)))
        s += 1
        try:
            im = mu_pointwise(n, pt)
        except (Degenerate, NonInvertible, NoLift, IndeterminacyPoint, CertificationFailed):
            continue
        L = sum((wi * c for wi, c in zip(weights, im.coords)), F.zero)
        if L == 0:
            continue
        xs.append(s - 1)
        vals.append(tuple((c / L).v for c in im.coords))
    if len(xs) < samples:
        raise NoLift("not enough points of the line in the domain of the map")
    fit, check = samples - 10, range(samples - 10, samples)
    out = []
    for j in range(3):
        num, den = rational_reconstruction(xs[:fit], [v[j] for v in vals[:fit]], p, max_degree)
        for i in check:
            d = _eval(den, xs[i], p)
            if d == 0 or _eval(num, xs[i], p) * pow(d, -1, p) % p != vals[i][j]:
                raise CertificationFailed("the sampled map is not a rational function of low degree")
        d0 = _eval(den, 0, p)
        if d0 == 0:
            raise IndeterminacyPoint("the chosen linear form vanishes at the limit")
        out.append(F(_eval(num, 0, p) * pow(d0, -1, p)))
    return ProjPoint(tuple(out))


def branch_points_8(kind, p, count, rng):
    """Random points of the conic (``kind="conic"``) or the quartic (``"quartic"``) over ``F_p``."""
    from ._modgcd import roots_mod_p
    from .fields import PrimeField

    F = PrimeField(p)
    M = plane_map_model(8)
    out = []
    while len(out) < count:
        if kind == "conic":
            s = F.random(rng)
            out.append(ProjPoint((s, s * s, F.one)))
            continue
        if kind != "quartic":
            raise ValueError("kind is 'conic' or 'quartic'")
        b = rng.randrange(p)
        coeffs = [0] * (M.Q8.degree_in(0) + 1)
        for e, c in M.Q8.items():
            coeffs[e[0]] += int(c) * pow(b, e[1], p)
        for r in roots_mod_p(coeffs, p, rng):
            if len(out) < count:
                out.append(ProjPoint((F(r), F(b), F.one)))
    return out


def mu8_branch_check(p=100003, count=20, seed=0):
    """Limits of the eight-line plane map at sampled branch points.

    Returns ``(conic_fixed, quartic_to_conic)``: how many sampled conic points
    are fixed and how many sampled quartic points land on the conic.
    """
    import random

    rng = random.Random(seed)
    conic = plane_map_model(8).conic
    fixed = on_conic = 0
    for kind in ("conic", "quartic"):
        for z in branch_points_8(kind, p, count, rng):
            F = field_of(*z.coords)
            w = [F.random(rng) for _ in range(3)]
            weights = [F.random(rng) for _ in range(3)]
            im = mu_limit(8, z, w, weights)
            if kind == "conic":
                fixed += im == z
            else:
                on_conic += conic(*im.coords) == 0
    return fixed, on_conic
