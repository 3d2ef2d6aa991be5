"""Elliptic curves over Q(t) attached to the elliptic fibrations of Z_7 and Z_8.

Curves are in the form ``y^2 = x^3 + a2 x^2 + a4 x + a6`` with coefficients
in a rational function field.  Places of Q(t) are rational numbers, monic
irreducible polynomials given explicitly, or infinity.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import ceil, lcm

from . import _upoly
from . import constants as K
from .errors import CertificationFailed
from .fields import QQ, RationalFunctionField
from .mpoly import NOT_DIVISIBLE, MPoly, exact_divide, parse, univariate_coeffs

QT = RationalFunctionField(QQ, "t")
INFINITY = "inf"


def ratfun(num, den="1", field=QT):
    """Rational function from two polynomial strings in ``t``."""
    n = univariate_coeffs(K.poly(num, ("t",)))
    d = univariate_coeffs(K.poly(den, ("t",)))
    return field.from_poly(n, d)


class CurvePoint:
    """An affine point ``(x, y)`` or the point at infinity ``O`` (``x is None``)."""

    __slots__ = ("x", "y")

    def __init__(self, x=None, y=None):
        self.x = x
        self.y = y

    @property
    def is_zero(self):
        return self.x is None

    def __eq__(self, o):
        if not isinstance(o, CurvePoint):
            return NotImplemented
        if self.is_zero or o.is_zero:
            return self.is_zero and o.is_zero
        return self.x == o.x and self.y == o.y

    def __hash__(self):
        return hash(None) if self.is_zero else hash((self.x, self.y))

    def __repr__(self):
        return "O" if self.is_zero else f"({self.x!r}, {self.y!r})"


O = CurvePoint()


class WeierstrassModel:
    """``y^2 = x^3 + a2 x^2 + a4 x + a6``."""

    def __init__(self, a2, a4, a6, field=QT, name=None):
        self.field = field
        self.a2, self.a4, self.a6 = (field(a) for a in (a2, a4, a6))
        self.name = name
        if self.discriminant == 0:
            raise ValueError("singular Weierstrass equation")

    @classmethod
    def from_strings(cls, data, name=None):
        return cls(*(ratfun(*data[k]) for k in ("a2", "a4", "a6")), name=name)

    # standard invariants with a1 = a3 = 0
    @property
    def b2(self):
        return self.a2 * 4

    @property
    def b4(self):
        return self.a4 * 2

    @property
    def b6(self):
        return self.a6 * 4

    @property
    def b8(self):
        return self.a2 * self.a6 * 4 - self.a4 * self.a4

    @property
    def c4(self):
        return self.b2 * self.b2 - self.b4 * 24

    @property
    def c6(self):
        b2 = self.b2
        return -(b2 * b2 * b2) + b2 * self.b4 * 36 - self.b6 * 216

    @property
    def discriminant(self):
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -(b2 * b2 * b8) - b4 * b4 * b4 * 8 - b6 * b6 * 27 + b2 * b4 * b6 * 9

    def j_invariant(self):
        c4 = self.c4
        return c4 * c4 * c4 / self.discriminant

    def rhs(self, x):
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def contains(self, P):
        return P.is_zero or P.y * P.y == self.rhs(P.x)

    def point(self, x, y):
        P = CurvePoint(self.field(x), self.field(y))
        if not self.contains(P):
            raise ValueError("point is not on the curve")
        return P

    def neg(self, P):
        return P if P.is_zero else CurvePoint(P.x, -P.y)

    def add(self, P, Q):
        if P.is_zero:
            return Q
        if Q.is_zero:
            return P
        if P.x == Q.x:
            if P.y + Q.y == 0:
                return O
            lam = ((P.x * 3 + self.a2 * 2) * P.x + self.a4) / (P.y * 2)
        else:
            lam = (Q.y - P.y) / (Q.x - P.x)
        x = lam * lam - self.a2 - P.x - Q.x
        return CurvePoint(x, lam * (P.x - x) - P.y)

    def mul(self, k, P):
        if k < 0:
            return self.mul(-k, self.neg(P))
        R, A = O, P
        while k:
            if k & 1:
                R = self.add(R, A)
            A = self.add(A, A)
            k >>= 1
        return R

    def double_x(self, P):
        """x-coordinate of ``2P`` from the second division polynomial."""
        x = P.x
        psi2 = ((x * 4 + self.b2) * x + self.b4 * 2) * x + self.b6
        phi2 = x * x * x * x - self.b4 * x * x - self.b6 * x * 2 - self.b8
        return phi2 / psi2

    def substitute(self, g):
        """The curve with ``t`` replaced by the rational function ``g``."""
        return WeierstrassModel(self.a2(g), self.a4(g), self.a6(g), g.field, self.name)

    def to_json(self):
        return {k: self.field.format(getattr(self, k)) for k in ("a2", "a4", "a6")}

    def __repr__(self):
        return f"WeierstrassModel(a2={self.a2!r}, a4={self.a4!r}, a6={self.a6!r})"


def ec_group_law(P, Q, E):
    return E.add(P, Q)


def point_order(P, E, bound=12):
    """Least ``k <= bound`` with ``kP = O``, else ``None``."""
    R = P
    for k in range(1, bound + 1):
        if R.is_zero:
            return k
        R = E.add(R, P)
    return None


# ---------------------------------------------------------------------------
# valuations and fibre profiles


def valuation(f, place):
    """Order of the rational function ``f`` at ``place``.

    ``place`` is a rational number, a monic coefficient list of an
    irreducible polynomial, or :data:`INFINITY`.
    """
    if f == 0:
        raise ValueError("valuation of zero")
    if place == INFINITY:
        return (len(f.den) - 1) - (len(f.num) - 1)
    if isinstance(place, (list, tuple)):
        return _upoly.factor_multiplicity(f.num, list(place)) - _upoly.factor_multiplicity(
            f.den, list(place)
        )
    return _upoly.root_multiplicity(f.num, place) - _upoly.root_multiplicity(f.den, place)


def _divisors(n):
    n = abs(n)
    out, d = set(), 1
    while d * d <= n:
        if n % d == 0:
            out.update((d, n // d))
        d += 1
    return out


def rational_roots(coeffs):
    """Distinct rational roots of a nonzero polynomial with rational coefficients."""
    a = _upoly.trim([Fraction(c) for c in coeffs])
    roots = set()
    while a and a[0] == 0:
        roots.add(Fraction(0))
        a = a[1:]
    if len(a) < 2:
        return sorted(roots)
    den = lcm(*(c.denominator for c in a))
    ints = [int(c * den) for c in a]
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for r in (Fraction(p, q), Fraction(-p, q)):
                if _upoly.evaluate(ints, r) == 0:
                    roots.add(r)
    return sorted(roots)


def _weight_shift(E, place):
    """Least ``k`` making the model integral at ``place`` after ``a_i -> pi^(i k) a_i``."""
    k = 0
    for a, w in ((E.a2, 2), (E.a4, 4), (E.a6, 6)):
        if a != 0:
            k = max(k, ceil(-valuation(a, place) / w))
    return k


def place_label(place):
    if place == INFINITY:
        return "inf"
    if isinstance(place, (list, tuple)):
        return repr(QT.from_poly(list(place)))
    return str(place)


def place_degree(place):
    return len(place) - 1 if isinstance(place, (list, tuple)) else 1


def fiber_profile(E, factors=()):
    """Orders of the discriminant of an integral model at every bad place.

    At each place the coefficients are rescaled by the least power of a
    uniformizer making them integral; the reported order is that of the
    rescaled discriminant.  ``factors`` lists irreducible polynomials (as
    strings in ``t``) to keep whole.  Returns ``(place, order, c4_order)``
    triples, ``place`` being a Fraction, a monic coefficient list, or
    :data:`INFINITY`.  Raises :class:`CertificationFailed` if some bad
    place is neither rational nor among ``factors``.
    """
    D = E.discriminant
    polys = [D.num, D.den] + [a.den for a in (E.a2, E.a4, E.a6)]
    places = []
    rest = []
    for f in factors:
        places.append(tuple(_upoly.monic(univariate_coeffs(K.poly(f, ("t",))))))
    for p in polys:
        for pl in places:
            if isinstance(pl, tuple):
                while len(p) > 1 and not _upoly.divmod_(p, list(pl))[1]:
                    p = _upoly.divmod_(p, list(pl))[0]
        for r in rational_roots(p):
            if r not in places:
                places.append(r)
            p = _upoly.divmod_(p, [-r, 1])[0] if _upoly.evaluate(p, r) == 0 else p
        rest.append(p)
    for p in rest:
        q = list(p)
        for r in rational_roots(q):
            while len(q) > 1 and _upoly.evaluate(q, r) == 0:
                q = _upoly.divmod_(q, [-r, 1])[0]
        if len(q) > 1:
            raise CertificationFailed(f"unaccounted factor {QT.from_poly(q)!r} of the discriminant")
    places.append(INFINITY)
    out = []
    for pl in places:
        k = _weight_shift(E, pl)
        d = valuation(D, pl) + 12 * k
        if d > 0:
            c = valuation(E.c4, pl) + 4 * k if E.c4 != 0 else None
            out.append((pl, d, c))
    return out


def profile_summary(profile):
    """``[(label, order)]`` and the total ``sum(order * degree)``."""
    rows = [(place_label(pl), d) for pl, d, _ in profile]
    return rows, sum(d * place_degree(pl) for pl, d, _ in profile)


# ---------------------------------------------------------------------------
# the two models


@lru_cache(maxsize=None)
def weierstrass(n):
    if n == 7:
        return WeierstrassModel.from_strings(K.WEIERSTRASS_7, name="E7")
    if n == 8:
        return WeierstrassModel.from_strings(K.WEIERSTRASS_8, name="E8")
    raise ValueError("n must be 7 or 8")


def torsion_point_7():
    x, y, z = (ratfun(s) for s in K.TORSION_POINT_7)
    return weierstrass(7).point(x / z, y / z)


def bad_factors(n):
    return (K.BAD_CUBIC_7,) if n == 7 else (K.BAD_QUADRATIC_8,)


def e_prime_8():
    """``eta^2 = xi^3 + (2 - s^2) xi^2 + xi`` with ``s = 2t^2/(t^2 - 1)``, over Q(t)."""
    s = ratfun("2*t^2", "t^2 - 1")
    return WeierstrassModel(2 - s * s, 1, 0, name="E8'")


def j_identity_check_8():
    """Compare ``j(E8)`` at ``(1 - 1/t)/2`` with ``j(E8')`` at ``t``."""
    g = ratfun("t - 1", "2*t")
    return weierstrass(8).j_invariant()(g) == e_prime_8().j_invariant()


def cubic_model_check_8(cubic=K.CUBIC_MODEL_8):
    """Cofactor of the cubic model in the quartic of Z_8 restricted to ``(X, 1 + t(Y - 1), Y, 1)``.

    Raises :class:`CertificationFailed` when the restriction is not a
    multiple of ``cubic`` by a polynomial.
    """
    from .families import surface_model

    names = ("X", "Y", "t")
    X, Y, t = MPoly.gens(3, names=names)
    q = surface_model(8).quartic
    restricted = q.substitute([X, t * (Y - 1) + 1, Y, MPoly.const(1, 3, names=names)])
    c = parse(cubic, names)
    cof = exact_divide(restricted, c)
    if cof is NOT_DIVISIBLE:
        raise CertificationFailed("the restricted quartic is not a multiple of the cubic")
    return cof
