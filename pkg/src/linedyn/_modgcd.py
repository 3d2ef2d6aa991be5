"""Modular gcd of integer polynomials in two variables, and of ternary forms.

Bivariate polynomials are dicts ``{(i, j): int}`` for ``z1^i z2^j``.  Modulo p
they are stored densely as a list over the ``z1`` degree of coefficient lists
in ``z2`` (lowest degree first).  The gcd modulo p is found by evaluating
``z2`` and interpolating (Brown's dense algorithm); images for several primes
are combined by Chinese remaindering and rational reconstruction.  Callers
verify the result by exact division over the rationals.
"""

from __future__ import annotations

from fractions import Fraction

import gmpy2

# ---------------------------------------------------------------------------
# dense univariate polynomials mod p (lists, lowest degree first)


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _eval(a, x, p):
    r = 0
    for c in reversed(a):
        r = (r * x + c) % p
    return r


def _monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _rem(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    while len(a) - 1 >= db and a:
        q = a[-1] * inv % p
        s = len(a) - 1 - db
        if q:
            for i in range(db + 1):
                a[s + i] = (a[s + i] - q * b[i]) % p
        a.pop()
        _trim(a)
    return a


def _divexact(a, b, p):
    """Quotient of ``a`` by ``b`` or ``None`` when the division leaves a remainder."""
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [] if not _trim(a) else None
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - db)
    for s in range(len(a) - 1 - db, -1, -1):
        c = a[s + db] * inv % p
        q[s] = c
        if c:
            for i in range(db + 1):
                a[s + i] = (a[s + i] - c * b[i]) % p
    return q if not any(a[:db]) else None


def _ugcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _rem(a, b, p)
    return _monic(a, p)


def _umul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return [c % p for c in out]


def _interpolate(xs, ys, p):
    """Newton interpolation through ``(xs[i], ys[i])``."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) * pow(xs[i] - xs[i - j], -1, p) % p
    out = [coef[-1]]
    for i in range(n - 2, -1, -1):
        # out = out * (z - xs[i]) + coef[i]
        nxt = [0] * (len(out) + 1)
        for k, c in enumerate(out):
            nxt[k + 1] = (nxt[k + 1] + c) % p
            nxt[k] = (nxt[k] - c * xs[i]) % p
        nxt[0] = (nxt[0] + coef[i]) % p
        out = nxt
    return _trim(out)


# ---------------------------------------------------------------------------
# dense bivariate polynomials mod p


def _to_dense(d, p):
    if not d:
        return []
    dx = max(i for i, _ in d)
    out = [[] for _ in range(dx + 1)]
    for (i, j), c in d.items():
        row = out[i]
        if len(row) <= j:
            row.extend([0] * (j + 1 - len(row)))
        row[j] = (row[j] + c) % p
    for row in out:
        _trim(row)
    while out and not out[-1]:
        out.pop()
    return out


def _bi_eval(A, a, p):
    return _trim([_eval(row, a, p) for row in A])


def _bi_content(A, p):
    g = []
    for row in A:
        if row:
            g = _ugcd(g, row, p) if g else _monic(row, p)
            if len(g) == 1:
                break
    return g


def _bi_divexact_scalar(A, c, p):
    return [_divexact(row, c, p) if row else [] for row in A]


def _bi_divides(H, A, p):
    """True when ``H`` divides ``A`` in ``F_p[z2][z1]`` (``H`` primitive in ``z1``)."""
    A = [list(r) for r in A]
    dh = len(H) - 1
    lc = H[-1]
    while len(A) - 1 >= dh and A:
        top = A[-1]
        if top:
            q = _divexact(top, lc, p)
            if q is None:
                return False
            s = len(A) - 1 - dh
            for i in range(dh + 1):
                prod = _umul(q, H[i], p)
                row = A[s + i]
                if len(row) < len(prod):
                    row.extend([0] * (len(prod) - len(row)))
                for k, c in enumerate(prod):
                    row[k] = (row[k] - c) % p
                _trim(row)
        A.pop()
        while A and not A[-1]:
            A.pop()
    return not A


def _zdeg(A):
    return max((len(r) - 1 for r in A if r), default=-1)


def bigcd_mod(A, B, p, start=1):
    """Gcd of two dense bivariate polynomials mod ``p``, normalized to leading coefficient 1."""
    if not A:
        return _bi_monic(B, p)
    if not B:
        return _bi_monic(A, p)
    cA, cB = _bi_content(A, p), _bi_content(B, p)
    c = _ugcd(cA, cB, p)
    A, B = _bi_divexact_scalar(A, cA, p), _bi_divexact_scalar(B, cB, p)
    gam = _ugcd(A[-1], B[-1], p)
    bound = len(gam) - 1 + min(_zdeg(A), _zdeg(B))
    xs, imgs, best = [], [], None
    a = start
    while a < p:
        if _eval(A[-1], a, p) and _eval(B[-1], a, p):
            g = _ugcd(_bi_eval(A, a, p), _bi_eval(B, a, p), p)
            d = len(g) - 1
            if best is None or d < best:
                best, xs, imgs = d, [], []
            if d == best:
                ga = _eval(gam, a, p)
                xs.append(a)
                imgs.append([x * ga % p for x in g])
                if best == 0:
                    return _bi_monic([c], p)
                if len(xs) >= bound + 1:
                    H = [_interpolate(xs, [im[i] for im in imgs], p) for i in range(best + 1)]
                    H = _bi_divexact_scalar(H, _bi_content(H, p), p)
                    if _bi_divides(H, A, p) and _bi_divides(H, B, p):
                        return _bi_monic([_umul(row, c, p) for row in H], p)
        a += 1
    raise ArithmeticError("ran out of evaluation points")


def _bi_monic(A, p):
    if not A:
        return A
    lc = A[-1][-1]
    inv = pow(lc, -1, p)
    return [[c * inv % p for c in row] for row in A]


# ---------------------------------------------------------------------------
# lifting to the rationals


def _ratrec(a, m):
    """Rational ``r/s`` with ``r = a s (mod m)`` and ``|r|, s < sqrt(m/2)``, or ``None``."""
    a %= m
    bound = gmpy2.isqrt(m // 2)
    r0, r1, s0, s1 = m, a, 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    return Fraction(int(r1), int(s1))


def _primes(start=2**61):
    p = int(gmpy2.next_prime(start))
    while True:
        yield p
        p = int(gmpy2.next_prime(p))


def _lex_lead(d):
    return d[max(d)] if d else 0


def bigcd_candidates(polys):
    """Successive rational candidates for the gcd of integer bivariate polynomials.

    Each candidate is a dict ``{(i, j): Fraction}`` whose lex-leading
    coefficient (``z1`` before ``z2``) is 1.
    """
    polys = [d for d in polys if d]
    leads = [_lex_lead(d) for d in polys]
    mod, acc, deg, last = 1, None, None, None
    for p in _primes():
        if any(l % p == 0 for l in leads):
            continue
        dense = [_to_dense(d, p) for d in polys]
        g = dense[0]
        for B in dense[1:]:
            g = bigcd_mod(g, B, p)
        g = _bi_monic(g, p)
        gdict = {(i, j): c for i, row in enumerate(g) for j, c in enumerate(row) if c}
        key = (len(g) - 1, max((i + j for i, j in gdict), default=0))
        if deg is None or key < deg:
            deg, mod, acc, last = key, p, gdict, None
        elif key > deg:
            continue
        else:
            # Chinese remaindering coefficient by coefficient
            inv = pow(mod, -1, p)
            keys = set(acc) | set(gdict)
            new = {}
            for k in keys:
                a, b = acc.get(k, 0), gdict.get(k, 0)
                new[k] = a + mod * ((b - a) * inv % p)
            mod *= p
            acc = {k: v for k, v in new.items() if v}
        rec = {}
        for k, v in acc.items():
            r = _ratrec(v, mod)
            if r is None:
                rec = None
                break
            rec[k] = r
        if rec is not None and rec == last:
            yield rec
        last = rec


def coprime_mod_p(polys, p=None):
    """Certificate that integer bivariate polynomials have no common factor.

    True when, for a prime not dividing any lex-leading coefficient, the gcd
    modulo that prime is constant.  A common factor over the rationals would
    survive reduction with its degree intact.
    """
    polys = [d for d in polys if d]
    for q in _primes() if p is None else [p]:
        if any(_lex_lead(d) % q == 0 for d in polys):
            if p is not None:
                return False
            continue
        dense = [_to_dense(d, q) for d in polys]
        g = dense[0]
        for B in dense[1:]:
            g = bigcd_mod(g, B, q)
            if len(g) == 1 and len(g[0]) == 1:
                return True
        return len(g) == 1 and len(g[0]) == 1
    return False


def _powmod_x(e, f, p, shift=0):
    """``(x + shift)^e`` modulo ``f``."""
    result, base = [1], _rem([shift % p, 1], f, p)
    while e:
        if e & 1:
            result = _rem(_umul(result, base, p), f, p)
        base = _rem(_umul(base, base, p), f, p)
        e >>= 1
    return result


def roots_mod_p(f, p, rng):
    """Distinct roots in ``F_p`` of the dense polynomial ``f`` (odd ``p``)."""
    f = _monic(_trim([c % p for c in f]), p)
    if len(f) < 2:
        return []
    xp = _powmod_x(p, f, p)
    g = _ugcd(f, _trim(_rem(_sub(xp, [0, 1], p), f, p)), p)
    out, stack = [], [g]
    while stack:
        h = stack.pop()
        if len(h) == 2:
            out.append(-h[0] * pow(h[1], -1, p) % p)
            continue
        if len(h) < 2:
            continue
        while True:
            a = rng.randrange(p)
            s = _powmod_x((p - 1) // 2, h, p, a)
            d = _ugcd(h, _sub(s, [1], p), p)
            if 1 < len(d) < len(h):
                break
        stack += [d, _divexact(h, d, p)]
    return sorted(out)


def _sub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])
