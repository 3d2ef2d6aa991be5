"""Points and lines of projective space with exact coordinates.

A line of the plane is stored as its normal vector, so points and lines share
the same coordinate machinery.  Coordinates are kept in canonical form: the
first invertible coordinate is scaled to 1, which makes projective equality a
plain tuple comparison and lets points be used as dictionary keys.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import IdenticalLines, NonGenericFrame, NonInvertible
from .fields import QQ, field_of, format_scalar, is_unit


def _div(x, y):
    if isinstance(x, int) and isinstance(y, int):
        return Fraction(x, y)
    return x / y


def _normalize(coords):
    if any(isinstance(c, (int, Fraction)) for c in coords):
        # plain rationals mixed with field elements are moved into that field
        F = field_of(*coords)
        if F is not QQ:
            coords = tuple(F(c) for c in coords)
    for c in coords:
        if is_unit(c):
            return tuple(_div(x, c) for x in coords)
    raise ValueError("projective coordinates must not all vanish")


class ProjPoint:
    """A point of P^2 or P^3 given by homogeneous coordinates."""

    __slots__ = ("coords",)

    def __init__(self, *coords):
        if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
            coords = coords[0]
        self.coords = _normalize(coords)

    @property
    def dim(self):
        return len(self.coords) - 1

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return len(self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint) or type(self) is not type(other):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def key(self):
        from .fields import sort_key

        return tuple(sort_key(c) for c in self.coords)

    def to_strings(self):
        return [format_scalar(c) for c in self.coords]

    def __repr__(self):
        return f"{type(self).__name__}({':'.join(format_scalar(c) for c in self.coords)})"


class ProjLine(ProjPoint):
    """A line of P^2, stored as its normal vector."""

    __slots__ = ()


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] if len(a) == 3 else sum(
        x * y for x, y in zip(a, b)
    )


def cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def det3(a, b, c):
    return dot(a, cross(b, c))


def incident(point, line):
    return dot(point.coords, line.coords) == 0


def meet(l1, l2):
    """Intersection point of two distinct lines."""
    v = cross(l1.coords, l2.coords)
    if all(x == 0 for x in v):
        raise IdenticalLines(f"{l1} and {l2} coincide")
    return ProjPoint(v)


def join(p1, p2):
    """Line through two distinct points."""
    v = cross(p1.coords, p2.coords)
    if all(x == 0 for x in v):
        raise IdenticalLines(f"{p1} and {p2} coincide")
    return ProjLine(v)


# ---------------------------------------------------------------------------
# 3x3 matrices as tuples of rows


def mat_mul(A, B):
    return tuple(
        tuple(sum((A[i][k] * B[k][j] for k in range(1, 3)), A[i][0] * B[0][j]) for j in range(3))
        for i in range(3)
    )


def mat_vec(A, v):
    return tuple(A[i][0] * v[0] + A[i][1] * v[1] + A[i][2] * v[2] for i in range(3))


def transpose(A):
    return tuple(tuple(A[j][i] for j in range(3)) for i in range(3))


def mat_det(A):
    return det3(A[0], A[1], A[2])


def adjugate(A):
    # columns of the inverse are the cross products of the rows
    c0 = cross(A[1], A[2])
    c1 = cross(A[2], A[0])
    c2 = cross(A[0], A[1])
    return transpose((c0, c1, c2))


def mat_inv(A):
    d = mat_det(A)
    if not is_unit(d):
        raise NonInvertible("singular matrix")
    adj = adjugate(A)
    return tuple(tuple(_div(x, d) for x in row) for row in adj)


def from_columns(c0, c1, c2):
    return tuple(tuple((c0[i], c1[i], c2[i])) for i in range(3))


class ProjMap2:
    """An element of PGL_3 acting on points by ``M v`` and on lines by ``M^{-T} l``."""

    __slots__ = ("matrix", "_dual")

    def __init__(self, matrix, dual=None):
        self.matrix = tuple(tuple(r) for r in matrix)
        if not is_unit(mat_det(self.matrix)):
            raise NonInvertible("projective map needs an invertible matrix")
        self._dual = dual

    @classmethod
    def identity(cls, one=1):
        z = one * 0
        return cls(((one, z, z), (z, one, z), (z, z, one)))

    @property
    def dual_matrix(self):
        # any scalar multiple of M^{-T} acts the same; the transposed adjugate avoids division
        if self._dual is None:
            self._dual = transpose(adjugate(self.matrix))
        return self._dual

    def apply_point(self, p):
        return ProjPoint(mat_vec(self.matrix, p.coords))

    def apply_line(self, line):
        return ProjLine(mat_vec(self.dual_matrix, line.coords))

    def __call__(self, obj):
        if isinstance(obj, ProjLine):
            return self.apply_line(obj)
        if isinstance(obj, ProjPoint):
            return self.apply_point(obj)
        return [self(o) for o in obj]

    def __matmul__(self, other):
        return ProjMap2(mat_mul(self.matrix, other.matrix))

    def inverse(self):
        return ProjMap2(adjugate(self.matrix))

    def __eq__(self, other):
        if not isinstance(other, ProjMap2):
            return NotImplemented
        return ProjPoint(sum(self.matrix, ())) == ProjPoint(sum(other.matrix, ()))

    def __hash__(self):
        return hash(ProjPoint(sum(self.matrix, ())))

    def __repr__(self):
        return f"ProjMap2({self.matrix!r})"


def _frame_matrix(vectors):
    """Matrix sending e1, e2, e3, (1,1,1) to the four given vectors, up to scale."""
    a1, a2, a3, a4 = vectors
    A = from_columns(a1, a2, a3)
    d = mat_det(A)
    if not is_unit(d):
        raise NonGenericFrame("three of the four frame vectors are dependent")
    # Cramer's rule for A lam = a4, scaled by det(A)
    lam = (det3(a4, a2, a3), det3(a1, a4, a3), det3(a1, a2, a4))
    if any(not is_unit(x) for x in lam):
        raise NonGenericFrame("frame vectors are not in general position")
    return from_columns(
        tuple(lam[0] * x for x in a1),
        tuple(lam[1] * x for x in a2),
        tuple(lam[2] * x for x in a3),
    )


def frame_map(src, dst):
    """The unique g in PGL_3 with ``g(src[i]) == dst[i]`` for four lines in general position."""
    Ha = _frame_matrix([l.coords for l in src])
    Hb = _frame_matrix([l.coords for l in dst])
    # h acts on normal vectors; the point matrix is h^{-T}, i.e. proportional to adj(h)^T
    h = mat_mul(Hb, adjugate(Ha))
    return ProjMap2(transpose(adjugate(h)), dual=h)


def point_frame_map(src, dst):
    """The unique g in PGL_3 with ``g(src[i]) == dst[i]`` for four points in general position."""
    Ha = _frame_matrix([p.coords for p in src])
    Hb = _frame_matrix([p.coords for p in dst])
    return ProjMap2(mat_mul(Hb, adjugate(Ha)))
