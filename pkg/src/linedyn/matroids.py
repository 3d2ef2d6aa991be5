"""Rank-3 matroids stored by their non-bases, and permutations of the ground set.

Ground-set elements are numbered from 1.  For the two models the primed atom
``j'`` is ``j + 7`` (seven lines) or ``j + 8`` (eight lines).
"""

from __future__ import annotations

import re
from collections import deque
from itertools import combinations

from .constants import OCTAGON_SETS
from .projective import det3


class Permutation:
    """A bijection of ``{1..m}`` in one-line notation."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError("not a permutation of 1..m")
        self.images = images

    @classmethod
    def identity(cls, m):
        return cls(range(1, m + 1))

    @classmethod
    def from_cycles(cls, text, m):
        img = list(range(1, m + 1))
        for cyc in re.findall(r"\(([^)]*)\)", text):
            elems = [int(x) for x in cyc.split(",") if x.strip()]
            for a, b in zip(elems, elems[1:] + elems[:1]):
                img[a - 1] = b
        return cls(img)

    @property
    def size(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other):
        """Composition: ``(s * t)(i) == s(t(i))``."""
        return Permutation(self.images[j - 1] for j in other.images)

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def __pow__(self, e):
        out = Permutation.identity(self.size)
        base = self if e >= 0 else self.inverse()
        for _ in range(abs(e)):
            out = out * base
        return out

    def order(self):
        k, p = 1, self
        ident = Permutation.identity(self.size)
        while p != ident:
            p = p * self
            k += 1
        return k

    def cycles(self):
        seen, out = set(), []
        for i in range(1, self.size + 1):
            if i in seen:
                continue
            c, j = [], i
            while j not in seen:
                seen.add(j)
                c.append(j)
                j = self(j)
            if len(c) > 1:
                out.append(tuple(c))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cs = self.cycles()
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cs) or "()"


class Rank3Matroid:
    """Ground set ``{1..m}``; every 3-subset not listed as a non-basis is a basis."""

    __slots__ = ("m", "nonbases")

    def __init__(self, m, nonbases):
        self.m = m
        nb = set()
        for t in nonbases:
            t = tuple(sorted(t))
            if len(set(t)) != 3 or not all(1 <= x <= m for x in t):
                raise ValueError(f"bad triple {t}")
            nb.add(t)
        self.nonbases = frozenset(nb)

    def is_basis(self, triple):
        t = tuple(sorted(triple))
        return len(set(t)) == 3 and t not in self.nonbases

    def is_nonbasis(self, triple):
        return tuple(sorted(triple)) in self.nonbases

    def __len__(self):
        return len(self.nonbases)

    def __eq__(self, other):
        return isinstance(other, Rank3Matroid) and self.m == other.m and self.nonbases == other.nonbases

    def __hash__(self):
        return hash((self.m, self.nonbases))

    def to_json(self):
        return {"ground": self.m, "nonbases": [list(t) for t in sorted(self.nonbases)]}

    def __repr__(self):
        return f"Rank3Matroid(m={self.m}, {len(self.nonbases)} non-bases)"


def matroid_from_arrangement(C):
    """Non-bases are the triples of concurrent lines."""
    lines = [l.coords for l in C]
    nb = [
        (i + 1, j + 1, k + 1)
        for i, j, k in combinations(range(len(lines)), 3)
        if det3(lines[i], lines[j], lines[k]) == 0
    ]
    return Rank3Matroid(len(lines), nb)


# the explicit seven-line families number their lines so that the residue rule
# holds after swapping labels 2,3 and 6,7 (on plain and primed atoms alike)
FAMILY_RELABEL_7 = (1, 3, 2, 4, 5, 7, 6)


def matroid_M7(labeling="residue"):
    """Non-bases ``{a, b, c'}`` with ``a + b = 2c (mod 7)``.

    With ``labeling="families"`` the rule is applied to the labels of
    :data:`FAMILY_RELABEL_7`, which is how the explicit families are numbered.
    """
    if labeling == "residue":
        r = lambda i: i  # noqa: E731
    elif labeling == "families":
        r = lambda i: FAMILY_RELABEL_7[i - 1]  # noqa: E731
    else:
        raise ValueError(f"unknown labeling {labeling!r}")
    nb = []
    for c in range(1, 8):
        for a, b in combinations(range(1, 8), 2):
            if (r(a) + r(b) - 2 * r(c)) % 7 == 0:
                nb.append((a, b, c + 7))
    return Rank3Matroid(14, nb)


def matroid_M8():
    nb = [(i, j, k + 9) for k, S in enumerate(OCTAGON_SETS) for i, j in S]
    return Rank3Matroid(16, nb)


def matroid_M(n, labeling="residue"):
    return matroid_M7(labeling) if n == 7 else matroid_M8()


def is_automorphism(M, s):
    if s.size != M.m:
        return False
    return all(tuple(sorted(s(i) for i in t)) in M.nonbases for t in M.nonbases)


def group_closure(gens):
    """All products of the generators, by breadth-first search."""
    gens = list(gens)
    ident = Permutation.identity(gens[0].size)
    seen = {ident}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = s * g
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return sorted(seen, key=lambda p: p.images)
