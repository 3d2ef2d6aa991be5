"""Labeled line arrangements and the operators built from their k-points.

Line indices in tables are 0-based positions in the arrangement.
"""

from __future__ import annotations

from itertools import combinations

from .constants import OCTAGON_SETS
from .errors import DegenerateOperator, DuplicateLines, IdenticalLines, NonGenericFrame
from .fields import field_from_json
from .projective import ProjLine, _frame_matrix, cross, det3, dot, frame_map, join, meet


class LabeledArrangement:
    """An ordered tuple of pairwise distinct lines of the plane."""

    __slots__ = ("lines",)

    def __init__(self, lines, check=True):
        lines = tuple(l if isinstance(l, ProjLine) else ProjLine(l) for l in lines)
        if check and len(set(lines)) != len(lines):
            raise DuplicateLines("arrangement has coincident lines")
        self.lines = lines

    def __len__(self):
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return LabeledArrangement(self.lines[i], check=False)
        return self.lines[i]

    def __add__(self, other):
        return LabeledArrangement(self.lines + tuple(other), check=True)

    def __eq__(self, other):
        if not isinstance(other, LabeledArrangement):
            return NotImplemented
        return self.lines == other.lines

    def __hash__(self):
        return hash(self.lines)

    def unlabeled(self):
        return frozenset(self.lines)

    def transform(self, g):
        return LabeledArrangement([g.apply_line(l) for l in self.lines], check=False)

    def permuted(self, perm):
        """Arrangement whose k-th line is line ``perm(k)`` of this one (1-based permutation)."""
        return LabeledArrangement([self.lines[perm(k + 1) - 1] for k in range(len(self))], check=False)

    def to_json(self, field):
        return {"field": field.to_json(), "lines": [[field.format(c) for c in l] for l in self.lines]}

    @classmethod
    def from_json(cls, d):
        field = field_from_json(d["field"])
        return cls([ProjLine([field.parse(c) for c in l]) for l in d["lines"]])

    def __repr__(self):
        return f"LabeledArrangement({list(self.lines)!r})"


def singular_points(C):
    """Map each intersection point to the sorted tuple of lines through it."""
    lines = C.lines if isinstance(C, LabeledArrangement) else tuple(C)
    if len(lines) < 2:
        raise ValueError("need at least two lines")
    table = {}
    for i, j in combinations(range(len(lines)), 2):
        try:
            p = meet(lines[i], lines[j])
        except IdenticalLines:
            raise DuplicateLines(f"lines {i} and {j} coincide") from None
        s = table.get(p)
        if s is None:
            table[p] = {i, j}
        else:
            s.add(i)
            s.add(j)
    return {p: tuple(sorted(s)) for p, s in table.items()}


def t_vector(table):
    """``{k: number of k-points}``."""
    out = {}
    for s in table.values():
        out[len(s)] = out.get(len(s), 0) + 1
    return dict(sorted(out.items()))


def rich_lines(points, m_set):
    """Lines containing exactly ``m`` of the given points for some ``m`` in ``m_set``."""
    points = list(points)
    on = {}
    for a, b in combinations(range(len(points)), 2):
        l = join(points[a], points[b])
        s = on.get(l)
        if s is None:
            on[l] = {a, b}
        else:
            s.add(a)
            s.add(b)
    return sorted((l for l, s in on.items() if len(s) in m_set), key=lambda l: l.key())


def lambda_operator(C, n_set, m_set):
    """All lines through exactly ``m`` (``m`` in ``m_set``) of the ``k``-points (``k`` in ``n_set``).

    The result is unlabeled, sorted by canonical coordinates, and may be empty.
    """
    table = singular_points(C)
    pts = [p for p, s in table.items() if len(s) in n_set]
    return LabeledArrangement(rich_lines(pts, set(m_set)), check=False)


def _pair_meets(lines):
    m = len(lines)
    meets = {}
    for i, j in combinations(range(m), 2):
        v = cross(lines[i].coords, lines[j].coords)
        if all(x == 0 for x in v):
            raise DuplicateLines(f"lines {i} and {j} coincide")
        meets[i, j] = v
    return meets


def _perfect_matchings(items):
    if not items:
        yield []
        return
    a = items[0]
    for k in range(1, len(items)):
        b = items[k]
        rest = items[1:k] + items[k + 1:]
        for m in _perfect_matchings(rest):
            yield [(a, b)] + m


def labeled_lambda7(C):
    """For each j, the unique line through exactly three double points of C minus line j."""
    lines = C.lines if isinstance(C, LabeledArrangement) else tuple(C)
    if len(lines) != 7:
        raise ValueError("labeled_lambda7 needs 7 lines")
    meets = _pair_meets(lines)
    zero = lambda v: all(x == 0 for x in v)  # noqa: E731
    out = []
    for j in range(7):
        rest = [i for i in range(7) if i != j]
        # double points of H_j: pairs whose meet lies on no third line of H_j
        double = {}
        for a, b in combinations(rest, 2):
            v = meets[a, b]
            if all(dot(v, lines[c].coords) != 0 for c in rest if c != a and c != b):
                double[a, b] = v
        found = []
        # a line of H_j itself carrying exactly three double points
        for a in rest:
            on = [pq for pq in double if a in pq]
            if len(on) == 3:
                found.append(lines[a])
        # any other line meets each line of H_j once, so its double points come from a matching
        for m in _perfect_matchings(rest):
            if all(pq in double for pq in m):
                u, v, w = (double[pq] for pq in m)
                if det3(u, v, w) == 0:
                    l = cross(u, v)
                    if zero(l):
                        continue
                    found.append(ProjLine(l))
        found = set(found)
        if len(found) != 1:
            raise DegenerateOperator(f"slot {j + 1}: {len(found)} candidate lines")
        out.append(found.pop())
    return LabeledArrangement(out, check=False)


def labeled_lambda8(C, sets=OCTAGON_SETS):
    """For each k, the line through every point ``p_ij`` with ``{i, j}`` in ``S_k``."""
    lines = C.lines if isinstance(C, LabeledArrangement) else tuple(C)
    if len(lines) != 8:
        raise ValueError("labeled_lambda8 needs 8 lines")
    out = []
    for k, S in enumerate(sets):
        pts = []
        for i, j in S:
            v = cross(lines[i - 1].coords, lines[j - 1].coords)
            if all(x == 0 for x in v):
                raise DuplicateLines(f"lines {i} and {j} coincide")
            pts.append(v)
        l = None
        for a, b in combinations(range(len(pts)), 2):
            c = cross(pts[a], pts[b])
            if not all(x == 0 for x in c):
                l = c
                break
        if l is None:
            raise DegenerateOperator(f"slot {k + 1}: the points of S_{k + 1} coincide")
        if any(dot(l, p) != 0 for p in pts):
            raise DegenerateOperator(f"slot {k + 1}: the points of S_{k + 1} are not collinear")
        out.append(ProjLine(l))
    return LabeledArrangement(out, check=False)


def labeled_lambda(n, C):
    return labeled_lambda7(C) if n == 7 else labeled_lambda8(C)


class _NotEquivalent:
    def __bool__(self):
        return False

    def __repr__(self):
        return "NotEquivalent"


NOT_EQUIVALENT = _NotEquivalent()


def proj_equivalent(A, B):
    """The unique g with ``g(A[i]) == B[i]`` for all i, or :data:`NOT_EQUIVALENT`."""
    if len(A) != len(B) or len(A) < 4:
        raise ValueError("need two arrangements of equal length at least 4")
    _frame_matrix([l.coords for l in A.lines[:4]])
    try:
        g = frame_map(A.lines[:4], B.lines[:4])
    except NonGenericFrame:
        return NOT_EQUIVALENT
    if all(g.apply_line(a) == b for a, b in zip(A.lines[4:], B.lines[4:])):
        return g
    return NOT_EQUIVALENT
