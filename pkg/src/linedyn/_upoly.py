"""Dense univariate polynomials as coefficient lists, lowest degree first.

Coefficients are any exact scalars supporting ``+ - * /`` and comparison
with ``0``.  Every function returns trimmed lists (no trailing zeros); the
zero polynomial is ``[]``.
"""

from __future__ import annotations

from fractions import Fraction


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a):
    return len(a) - 1


def add(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        if i < len(a) and i < len(b):
            out.append(a[i] + b[i])
        elif i < len(a):
            out.append(a[i])
        else:
            out.append(b[i])
    return trim(out)


def neg(a):
    return [-c for c in a]


def sub(a, b):
    return add(a, neg(b))


def scale(a, c):
    if c == 0:
        return []
    return trim([x * c for x in a])


def mul(a, b):
    if not a or not b:
        return []
    out = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def _div(x, y):
    if isinstance(x, int) and isinstance(y, int):
        q = Fraction(x, y)
        return int(q) if q.denominator == 1 else q
    return x / y


def divmod_(a, b):
    """Euclidean division; ``b`` must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    if len(r) < len(b):
        return [], trim(r)
    q = [None] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = _div(r[k], lc)
        q[k - db] = c
        if c != 0:
            for j in range(db + 1):
                r[k - db + j] = r[k - db + j] - c * b[j]
    return trim(q), trim(r[:db])


def monic(a):
    if not a:
        return []
    lc = a[-1]
    return [_div(c, lc) for c in a]


def gcd(a, b):
    """Monic gcd; gcd(0, 0) = 0."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_(a, b)[1]
    return monic(a)


def xgcd(a, b, one):
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = [one], []
    t0, t1 = [], [one]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return [], [], []
    inv = _div(one, r0[-1])
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def evaluate(a, x):
    acc = None
    for c in reversed(a):
        acc = c if acc is None else acc * x + c
    return 0 if acc is None else acc


def derivative(a):
    return trim([a[i] * i for i in range(1, len(a))])


def compose(a, b, one):
    """a(b(t))."""
    out = []
    for c in reversed(a):
        out = add(mul(out, b), [c * one] if c != 0 else [])
    return out


def power(a, e, one):
    out = [one]
    base = a
    while e:
        if e & 1:
            out = mul(out, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return out


def root_multiplicity(a, r):
    """Largest k with (t - r)^k dividing a; raises on the zero polynomial."""
    a = trim(a)
    if not a:
        raise ValueError("multiplicity in the zero polynomial is undefined")
    k = 0
    while True:
        # synthetic division by (t - r)
        n = len(a)
        q = [None] * (n - 1)
        acc = a[-1]
        for i in range(n - 2, -1, -1):
            q[i] = acc
            acc = a[i] + acc * r
        if acc != 0 or n == 1:
            return k
        a = trim(q)
        k += 1


def factor_multiplicity(a, f):
    """Largest k with f^k dividing a, for a nonconstant f."""
    a = trim(a)
    if not a:
        raise ValueError("multiplicity in the zero polynomial is undefined")
    if len(trim(f)) < 2:
        raise ValueError("factor must be nonconstant")
    k = 0
    while True:
        q, r = divmod_(a, f)
        if r:
            return k
        a = q
        k += 1
