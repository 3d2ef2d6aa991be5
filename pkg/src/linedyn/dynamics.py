"""Period maps, the self-maps of Z_7 and Z_8, orbits, and automorphism actions.

The self-map is computed geometrically: realize the point as an arrangement,
apply the line operator, move the result back into the reference frame, and
read off the new surface point.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field

from . import constants as K
from .arrangements import LabeledArrangement, labeled_lambda
from .errors import (
    ChartSingular,
    Degenerate,
    DegenerateOperator,
    LinearSolveDegenerate,
    NonInvertible,
)
from .families import (
    chart_point,
    enumerate_surface_points,
    parametrized_realization,
    surface_eval,
    surface_model,
)
from .fields import JetRing, PrimeField, field_of, format_scalar, is_unit
from .matroids import Permutation
from .projective import ProjPoint, _div, frame_map, meet


def _as_arrangement(A):
    return A if isinstance(A, LabeledArrangement) else LabeledArrangement(A, check=False)


def period_map(n, A):
    """Surface point of an arrangement with the model combinatorics.

    For ``n = 7`` only the first seven lines are used.  For ``n = 8`` the
    arrangement must hold all sixteen lines, the second block being read off.
    """
    A = _as_arrangement(A)
    M = surface_model(n)
    g = frame_map(A.lines[:4], M.frame)
    if n == 7:
        l1, l5, l7 = (g.apply_line(A.lines[i]) for i in (0, 4, 6))
        p57 = meet(l5, l7).coords
        if not is_unit(p57[0]):
            raise LinearSolveDegenerate("the point p57 lies at infinity")
        x2, x3 = _div(p57[1], p57[0]), _div(p57[2], p57[0])
        _, a, b = meet(l1, l7).coords
        # p17 = (0 : a : b) is linear in x1
        den = b * (x2 - x2 * x2 - x2 * x3)
        if not is_unit(den):
            raise LinearSolveDegenerate("vanishing coefficient of x1")
        num = a * (x2 * x3 + x3 * x3 - x3) - b * (x2 * x2 - x2)
        return (_div(num, den), x2, x3)
    if len(A) != 16:
        raise ValueError("the eight-line period map needs sixteen lines")
    u = g.apply_line(A.lines[14]).coords
    v = g.apply_line(A.lines[15]).coords
    if not is_unit(u[0]) or not is_unit(v[0]):
        raise LinearSolveDegenerate("reference normals have a vanishing first coordinate")
    return (_div(u[1], u[0]), _div(v[1], v[0]), _div(v[2], v[0]))


def lambda_arrangements(n, x):
    """``(C0, C1, C2)`` with ``C2`` the labeled operator applied to ``C1``."""
    c0, c1 = parametrized_realization(n, x)
    return c0, c1, labeled_lambda(n, c1)


def lambda_step(n, x, verify=False):
    """Image of the chart point ``x`` under the self-map of ``Z_n``."""
    x = chart_point(x)
    if n == 7:
        c0, c1 = parametrized_realization(n, x)
        if verify:
            c2 = labeled_lambda(7, c1)
        out = period_map(7, c1)
    else:
        c0, c1, c2 = lambda_arrangements(n, x)
        out = period_map(8, c1 + c2 if verify else LabeledArrangement(c1.lines + c2.lines, check=False))
    if verify:
        _verify_step(n, c1, c2, out)
    return out


def _verify_step(n, c1, c2, y):
    if surface_eval(n, y) != 0:
        raise AssertionError("image is off the surface")
    g = frame_map(c1.lines[:4], surface_model(n).frame)
    d0, d1 = parametrized_realization(n, y)
    if d0 != c1.transform(g) or d1 != c2.transform(g):
        raise AssertionError("image realization is not frame-equivalent to the operator output")


@dataclass
class OrbitRecord:
    start: tuple
    iterates: list = dc_field(default_factory=list)
    period: int | None = None
    preperiod: int | None = None
    reason: str = "budget"

    def to_json(self):
        fmt = lambda x: [format_scalar(c) for c in x]  # noqa: E731
        return {
            "start": fmt(self.start),
            "iterates": [fmt(x) for x in self.iterates],
            "period": self.period,
            "preperiod": self.preperiod,
            "reason": self.reason,
        }


def orbit(n, x, max_iter):
    """Iterate the self-map until a repeat, a degenerate step, or ``max_iter`` steps."""
    x = chart_point(x)
    rec = OrbitRecord(start=x, iterates=[x])
    seen = {x: 0}
    cur = x
    for _ in range(max_iter):
        try:
            cur = lambda_step(n, cur)
        except (Degenerate, NonInvertible) as e:
            rec.reason = type(e).__name__
            return rec
        if cur in seen:
            rec.preperiod = seen[cur]
            rec.period = len(rec.iterates) - seen[cur]
            rec.reason = "periodic"
            rec.iterates.append(cur)
            return rec
        seen[cur] = len(rec.iterates)
        rec.iterates.append(cur)
    return rec


def arrangement_period(n, x, max_iter=12):
    """Least ``k`` with ``C_k`` projectively equal to ``C0`` under the labeled operator."""
    c0, c = parametrized_realization(n, x)[0], None
    c = c0
    for k in range(1, max_iter + 1):
        try:
            c = labeled_lambda(n, c)
        except Degenerate:
            return None
        if c == c0:
            return k
    return None


def degree_estimate(n, p, points=None):
    """Fibre-size histogram of the self-map over ``F_p`` and its modal fibre size."""
    if points is None:
        points = enumerate_surface_points(n, p)
    images = Counter()
    domain = 0
    for y in points:
        try:
            images[lambda_step(n, y)] += 1
        except (Degenerate, NonInvertible):
            continue
        domain += 1
    hist = Counter(images.values())
    mode = max(hist.items(), key=lambda kv: (kv[1], -kv[0]))[0] if hist else None
    return {
        "p": p,
        "points": len(points),
        "domain": domain,
        "histogram": dict(sorted(hist.items())),
        "mode": mode,
    }


# ---------------------------------------------------------------------------
# the 2-form multiplier


def _jet_point(n, x, implicit=0):
    """Chart point as jets: the two free coordinates move, ``x[implicit]`` follows the surface."""
    f = surface_model(n).chart
    J = JetRing(field_of(*x))
    fx = [f.diff(i)(x) for i in range(3)]
    i, j, k = implicit, (implicit + 1) % 3, (implicit + 2) % 3
    if fx[i] == 0:
        raise ChartSingular("the implicit partial derivative vanishes at the source point")
    pt = [None] * 3
    pt[i] = J(x[i], -fx[j] / fx[i], -fx[k] / fx[i])
    pt[j] = J(x[j], 1, 0)
    pt[k] = J(x[k], 0, 1)
    return tuple(pt), fx[i]


def jet_multiplier(n, x, step, implicit=0):
    """Pull-back factor of ``dx_j dx_k / f_xi`` (cyclic ``i, j, k``) under a map on chart points."""
    jx, fxi = _jet_point(n, x, implicit)
    y = step(jx)
    base = tuple(c.c for c in y)
    i, j, k = implicit, (implicit + 1) % 3, (implicit + 2) % 3
    fyi = surface_model(n).chart.diff(i)(base)
    if fyi == 0:
        raise ChartSingular("the implicit partial derivative vanishes at the image point")
    det = y[j].d1 * y[k].d2 - y[j].d2 * y[k].d1
    return det * fxi / fyi


def form_multiplier(n, x, implicit=0):
    """Multiplier of the self-map on the 2-form ``dx2 dx3 / f_x1``.

    ``implicit`` selects the coordinate solved from the surface equation; the
    form is the same for every choice.
    """
    x = chart_point(x)
    if not isinstance(field_of(*x), PrimeField):
        raise TypeError("the multiplier is computed over a prime field")
    return jet_multiplier(n, x, lambda jx: lambda_step(n, jx), implicit)


# ---------------------------------------------------------------------------
# automorphisms of the matroid acting on the surface


def aut_action(n, s, x):
    """Surface point of the arrangement ``C0(x) + C1(x)`` with lines permuted by ``s``."""
    if isinstance(s, str):
        s = Permutation.from_cycles(s, 2 * n)
    c0, c1 = parametrized_realization(n, x)
    return period_map(n, (c0 + c1).permuted(s))


def base_coordinate(x):
    """``t = (y2 - y4) / y3`` on the chart ``y4 = 1``."""
    x = chart_point(x)
    if not is_unit(x[2]):
        raise NonInvertible("t is undefined where y3 = 0")
    return _div(x[1] - 1, x[2])


def mobius_order3(t):
    """``t -> -1 / (t + 1)``."""
    return _div(-1, t + 1)


def sigma0_base_check(x):
    """``t`` is invariant under sigma0 composed with the self-map."""
    y = aut_action(7, K.SIGMA0_PERM, lambda_step(7, x))
    return base_coordinate(y) == base_coordinate(x)


def commutes_with(n, s, x):
    """The self-map commutes with the arrangement action of ``s`` at ``x``."""
    if isinstance(s, str):
        s = Permutation.from_cycles(s, 2 * n)
    return aut_action(n, s, lambda_step(n, x)) == lambda_step(n, aut_action(n, s, x))


def invariant_under(n, s, x):
    """``lambda(s . x) == lambda(x)``."""
    if isinstance(s, str):
        s = Permutation.from_cycles(s, 2 * n)
    return lambda_step(n, aut_action(n, s, x)) == lambda_step(n, x)
