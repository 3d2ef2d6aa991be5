"""The quartic surfaces Z_7 and Z_8 and the line arrangements they parametrize.

A point ``x = (x1, x2, x3)`` of the affine chart ``y4 = 1`` of the surface
determines two labeled arrangements ``C0(x)`` and ``C1(x)`` through explicit
normal-vector formulas.  The surfaces are quadratic in each coordinate, which
is what the point enumeration and the curve germs below rely on.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from . import constants as K
from .arrangements import LabeledArrangement
from .errors import (
    BudgetExceeded,
    CertificationFailed,
    DegenerateRealization,
    IndeterminacyPoint,
    NoRoot,
    NonInvertible,
)
from .fields import (
    QQ,
    ExtensionField,
    PowerSeriesRing,
    PrimeField,
    field_of,
    is_unit,
)
from .matroids import matroid_from_arrangement, matroid_M
from .mpoly import NOT_DIVISIBLE, MPoly, exact_divide, unpack
from .projective import ProjLine, ProjPoint, _div

MAX_ENUM_PRIME = 2**14


class SurfaceModel:
    """Equation, frame, family formulas and point catalogs of ``Z_n``."""

    def __init__(self, n):
        if n not in (7, 8):
            raise ValueError("n must be 7 or 8")
        self.n = n
        seven = n == 7
        self.quartic = K.poly(K.QUARTIC_7 if seven else K.QUARTIC_8, K.Y)
        self.frame = [ProjLine(v) for v in (K.FRAME_7 if seven else K.FRAME_8)]
        self.c0 = [tuple(K.poly(s, K.X) for s in row) for row in (K.C0_7 if seven else K.C0_8)]
        self.c1 = [tuple(K.poly(s, K.X) for s in row) for row in (K.C1_7 if seven else K.C1_8)]
        self.singular_points = [
            ProjPoint(v) for v in (K.SINGULAR_POINTS_7 if seven else K.SINGULAR_POINTS_8)
        ]
        # the chart y4 = 1 in the variables x1, x2, x3
        one = MPoly.const(1, 3, names=K.X)
        self.chart = self.quartic.substitute(list(MPoly.gens(3, names=K.X)) + [one])

    def gradient(self):
        return [self.quartic.diff(i) for i in range(4)]

    def to_json(self):
        return {
            "n": self.n,
            "quartic": self.quartic.to_json(),
            "frame": [l.to_strings() for l in self.frame],
            "C0": [[p.to_json() for p in row] for row in self.c0],
            "C1": [[p.to_json() for p in row] for row in self.c1],
            "singular_points": [p.to_strings() for p in self.singular_points],
        }

    def __repr__(self):
        return f"SurfaceModel(n={self.n})"


@lru_cache(maxsize=None)
def surface_model(n):
    return SurfaceModel(n)


def _coords(y):
    return y.coords if isinstance(y, ProjPoint) else tuple(y)


def surface_eval(n, y):
    """Value of the quartic at ``y`` (four coordinates) or at a chart point ``(x1, x2, x3)``."""
    c = _coords(y)
    if len(c) == 3:
        return surface_model(n).chart(c)
    return surface_model(n).quartic(c)


def chart_point(y):
    """Affine coordinates ``(x1, x2, x3)`` of a point with ``y4 != 0``."""
    c = _coords(y)
    if len(c) == 3:
        return c
    if not is_unit(c[3]):
        raise DegenerateRealization("point lies on the plane y4 = 0")
    return tuple(_div(ci, c[3]) for ci in c[:3])


def as_point(x):
    """The projective point ``(x1 : x2 : x3 : 1)``."""
    c = _coords(x)
    if len(c) == 4:
        return ProjPoint(c)
    one = field_of(*c).one if field_of(*c) is not QQ else 1
    return ProjPoint(tuple(c) + (one,))


def _evaluate_rows(rows, x):
    F = field_of(*x)
    lift = (lambda c: c) if F is QQ else F  # noqa: E731
    out = []
    for k, row in enumerate(rows):
        v = tuple(lift(p(x)) for p in row)
        if all(c == 0 for c in v):
            raise DegenerateRealization(f"normal vector {k + 1} vanishes")
        out.append(ProjLine(v))
    return out


def parametrized_realization(n, x):
    """The labeled arrangements ``C0(x)`` and ``C1(x)`` of the family formulas."""
    M = surface_model(n)
    x = chart_point(x)
    c0 = _evaluate_rows(M.c0, x)
    c1 = _evaluate_rows(M.c1, x)
    if len(set(c0 + c1)) != len(c0) + len(c1):
        raise DegenerateRealization("two lines of the realization coincide")
    return LabeledArrangement(c0, check=False), LabeledArrangement(c1, check=False)


def realizes_matroid(n, x):
    """True when ``C0(x) + C1(x)`` has exactly the combinatorics of the model matroid."""
    try:
        c0, c1 = parametrized_realization(n, x)
    except DegenerateRealization:
        return False
    return matroid_from_arrangement(c0 + c1) == matroid_M(n, "families")


# ---------------------------------------------------------------------------
# points over finite fields


def _quadratic_roots(a, b, c, field):
    """Roots of ``a t^2 + b t + c`` in ``field``; ``None`` when every value is a root."""
    if a == 0:
        if b == 0:
            return None if c == 0 else []
        return [-c / b]
    d = b * b - 4 * a * c
    try:
        s = field.sqrt(d)
    except NoRoot:
        return []
    two_a = 2 * a
    r1, r2 = (-b + s) / two_a, (-b - s) / two_a
    return [r1] if r1 == r2 else [r1, r2]


def _y1_coefficients(n):
    q = surface_model(n).quartic
    parts = q.coeffs_in(0)
    return [parts.get(k, MPoly(4, {}, names=K.Y)) for k in (2, 1, 0)]


def random_surface_point(n, field, rng, tries=1000):
    """A random chart point of ``Z_n`` over a finite field (or an extension of one)."""
    a, b, c = _y1_coefficients(n)
    for _ in range(tries):
        x2, x3 = field.random(rng), field.random(rng)
        v = (field.zero, x2, x3, field.one)
        roots = _quadratic_roots(a(v), b(v), c(v), field)
        if not roots:
            continue
        x1 = roots[rng.randrange(len(roots))]
        return (x1, x2, x3)
    raise BudgetExceeded("no surface point found")


def random_realization_point(n, field, rng, tries=50):
    """A random chart point whose realization has the model combinatorics."""
    for _ in range(tries):
        x = random_surface_point(n, field, rng)
        if realizes_matroid(n, x):
            return x
    raise BudgetExceeded("no point of the realization locus found")


def _compile_mod(poly, p):
    """Terms of a rational polynomial as ``(int coefficient mod p, exponents)``."""
    F = PrimeField(p)
    return [(F(c).v, unpack(k, poly.n)) for k, c in poly.terms.items()]


def _eval_mod(terms, v, p):
    acc = 0
    for c, e in terms:
        t = c
        for vi, ei in zip(v, e):
            if ei:
                t = t * pow(vi, ei, p)
        acc += t
    return acc % p


def enumerate_surface_points(n, p):
    """Every point of ``Z_n`` over ``F_p``, as canonical projective points."""
    if p > MAX_ENUM_PRIME:
        raise BudgetExceeded(f"enumeration over F_{p} exceeds the budget p <= {MAX_ENUM_PRIME}")
    F = PrimeField(p)
    coeffs = [_compile_mod(f, p) for f in _y1_coefficients(n)]
    out = []
    # (y2 : y3 : y4) runs over P^2, y1 over the affine line; (1:0:0:0) is separate
    for tail in _proj_plane(p):
        v = (0,) + tail
        a, b, c = (_eval_mod(t, v, p) for t in coeffs)
        roots = _quadratic_roots(F(a), F(b), F(c), F)
        if roots is None:
            roots = list(F.elements())
        for r in roots:
            out.append(ProjPoint((r,) + tuple(F(t) for t in tail)))
    top = (F.one, F.zero, F.zero, F.zero)
    if surface_eval(n, top) == 0:
        out.append(ProjPoint(top))
    return out


def _proj_plane(p):
    for b, c in product(range(p), repeat=2):
        yield (1, b, c)
    for c in range(p):
        yield (0, 1, c)
    yield (0, 0, 1)


# ---------------------------------------------------------------------------
# excluded locus of the seven-line family


def excluded_locus_member(y, n=7):
    """Names of the catalogued curves of the complement that contain ``y``."""
    if n != 7:
        raise ValueError("the curve catalog exists for n = 7 only")
    c = _coords(y)
    names = []
    for name, forms in K.EXCLUDED_LINES_7.items():
        if all(K.poly(f, K.Y)(c) == 0 for f in forms):
            names.append(name)
    if all(K.poly(f, K.Y)(c) == 0 for f in K.EXCLUDED_CONIC_7):
        names.append("Co")
    if all(K.poly(f, K.Y)(c) == 0 for f in K.EXCLUDED_GENUS_ONE_SAMPLE_7):
        names.append("E")
    return names


def base_points_8():
    """The base points of the eight-line map, each over Q, Q(sqrt 2) or Q(i)."""
    out = []
    for kind, coords in K.BASE_POINTS_8:
        if kind is None:
            out.append(ProjPoint([QQ.parse(c) for c in coords]))
            continue
        field = _ext_field(kind)
        # coordinates are polynomials in the adjoined root s
        out.append(ProjPoint([K.poly(c, ("s",))(field.gen) + field.zero for c in coords]))
    return out


@lru_cache(maxsize=None)
def _ext_field(kind):
    if kind == "sqrt2":
        return ExtensionField(QQ, [1, 0, -2], name="s")
    if kind == "i":
        return ExtensionField(QQ, [1, 0, 1], name="s")
    return QQ


def lines_on_surface(n=8):
    """Pairs of linear forms cutting out the lines listed on ``Z_n``."""
    if n != 8:
        raise ValueError("the line list exists for n = 8")
    return [tuple(K.poly(f, K.Y) for f in pair) for pair in K.LINES_ON_Z8]


def line_parametrization(forms):
    """Two points spanning the line ``{l1 = l2 = 0}`` of P^3."""
    from .projective import cross

    rows = [[f.coefficient(tuple(int(i == j) for i in range(4))) for j in range(4)] for f in forms]
    # kernel of a 2x4 matrix from its 2x2 minors
    pts = []
    for drop in range(4):
        idx = [i for i in range(4) if i != drop]
        a = [rows[0][i] for i in idx]
        b = [rows[1][i] for i in idx]
        v = cross(a, b)
        full = [0] * 4
        for i, vi in zip(idx, v):
            full[i] = vi
        if any(full):
            pts.append(tuple(full))
    basis = []
    for v in pts:
        if not basis or any(
            basis[0][i] * v[j] - basis[0][j] * v[i] != 0 for i in range(4) for j in range(4)
        ):
            basis.append(v)
        if len(basis) == 2:
            return basis
    raise ValueError("forms do not cut out a line")


def line_lies_on_surface(n, forms):
    """The quartic vanishes identically on the line ``forms = 0``."""
    p, q = line_parametrization(forms)
    s, t = MPoly.gens(2, names=("s", "t"))
    return surface_model(n).quartic.substitute([p[i] * s + q[i] * t for i in range(4)]).is_zero()


# ---------------------------------------------------------------------------
# the matroid automorphisms acting by polynomials (seven lines)


def sigma_polynomials(which):
    texts = {"sigma1": K.SIGMA1_7, "sigma2": K.SIGMA2_7}[which]
    return [K.poly(t, K.Y) for t in texts]


def sigma_polynomial_action(which, y):
    """Image of ``y`` under the polynomial map of ``sigma1`` or ``sigma2``."""
    v = tuple(f(_coords(y)) for f in sigma_polynomials(which))
    if all(c == 0 for c in v):
        raise IndeterminacyPoint(f"{which} is undefined at {y}")
    return ProjPoint(v)


def sigma_preserves_surface(which):
    """Cofactor ``c`` with ``f(sigma) = c * f`` for the quartic ``f`` of ``Z_7``.

    Raises :class:`CertificationFailed` if the pulled-back quartic is not a
    multiple of ``f``.
    """
    f = surface_model(7).quartic
    cof = exact_divide(f.substitute(sigma_polynomials(which)), f)
    if cof is NOT_DIVISIBLE:
        raise CertificationFailed(f"{which} does not preserve the surface")
    return cof


def sigma_orbit(y, limit=1000):
    """Orbit of ``y`` under the group generated by both polynomial maps."""
    start = as_point(y)
    seen, todo = {start}, [start]
    while todo:
        cur = todo.pop()
        for which in ("sigma1", "sigma2"):
            z = sigma_polynomial_action(which, cur)
            if z not in seen:
                if len(seen) >= limit:
                    raise BudgetExceeded("orbit exceeds the limit")
                seen.add(z)
                todo.append(z)
    return seen


def surface_germ(n, y, direction, prec=10):
    """A formal curve germ on ``Z_n`` through ``y``, as four power series.

    Three coordinates move linearly along ``direction``; the remaining one is
    solved from the quartic, which is quadratic in every variable.  Raises
    :class:`NoRoot` when the chosen data do not give a germ (retry with another
    direction).
    """
    c = _coords(y)
    field = field_of(*c)
    R = PowerSeriesRing(field, prec)
    e = R.gen
    q = surface_model(n).quartic
    for solve in range(4):
        base = [R(ci) + R(di) * e if i != solve else None for i, (ci, di) in enumerate(zip(c, direction))]
        parts = q.coeffs_in(solve)
        A, B, C = (
            _series_eval(parts.get(k), base, solve, R) for k in (2, 1, 0)
        )
        # shift the unknown by its value at the base point: A Z^2 + B' Z + C' = 0
        y0 = R(c[solve])
        Bs = B + 2 * A * y0
        Cs = C + B * y0 + A * y0 * y0
        if Cs.c[0] != 0:
            continue
        Z = None
        if Bs.c[0] != 0:
            Z = R.zero
            for _ in range(prec):
                Z = -(Cs + A * Z * Z) / Bs
        elif A.c[0] != 0:
            try:
                s = (Bs * Bs - 4 * A * Cs).sqrt()
            except NoRoot:
                continue
            for sign in (1, -1):
                cand = (-Bs + sign * s) / (2 * A)
                if cand.c[0] == 0:
                    Z = cand
                    break
        if Z is None:
            continue
        germ = list(base)
        germ[solve] = y0 + Z
        return germ
    raise NoRoot("no curve germ in this direction")


def _series_eval(poly, base, skip, R):
    if poly is None:
        return R.zero
    vals = [b if b is not None else R.zero for b in base]
    out = poly.evaluate(vals)
    return R(out) if not hasattr(out, "ring") else out


def limit_along(polys, germ):
    """Limit point of ``[f(germ(e)) for f in polys]`` as ``e -> 0``."""
    vals = [f.evaluate(germ) for f in polys]
    vals = [v if hasattr(v, "valuation") else germ[0].ring(v) for v in vals]
    vs = [v.valuation() for v in vals]
    finite = [v for v in vs if v is not None]
    if not finite:
        raise IndeterminacyPoint("the map vanishes identically along the germ")
    m = min(finite)
    if m >= germ[0].ring.prec - 2:
        raise IndeterminacyPoint("precision exhausted before a nonzero term")
    return ProjPoint([v.c[m] for v in vals])


def sigma_limits(which, y, rng, samples=6, n=7):
    """Set of limits of the sigma map along random curve germs through ``y``."""
    field = field_of(*_coords(y))
    out = set()
    found = tries = 0
    while found < samples and tries < 20 * samples:
        tries += 1
        d = [field.random(rng) if field is not QQ else rng.randint(-9, 9) for _ in range(4)]
        try:
            germ = surface_germ(n, y, d)
            out.add(limit_along(sigma_polynomials(which), germ))
        except (NoRoot, NonInvertible, IndeterminacyPoint):
            continue
        found += 1
    return out
