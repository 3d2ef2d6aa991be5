"""Sparse multivariate polynomials over exact fields.

Terms live in a dict from packed monomial keys to nonzero coefficients.  A key
stores the total degree in its top bits followed by the exponents, so ordering
keys as integers is graded lexicographic order with ``x0 > x1 > ...``.

Coefficients over the rationals are ``int`` or ``Fraction``; over other fields
they are that field's elements.  Evaluation accepts any ring elements (field
scalars, jets, power series, or other polynomials for substitution).
"""

from __future__ import annotations

import ast
import heapq
from fractions import Fraction
from math import gcd as igcd

from .errors import FieldMismatch, UnsupportedDegree
from .fields import QQ, Fp, NoRoot, field_from_json, format_scalar, sort_key
from . import _upoly

BITS = 16
MASK = (1 << BITS) - 1


def pack(exps):
    n = len(exps)
    key = sum(exps) << (BITS * n)
    for i, e in enumerate(exps):
        key |= e << (BITS * (n - 1 - i))
    return key


def unpack(key, n):
    return tuple((key >> (BITS * (n - 1 - i))) & MASK for i in range(n))


def key_degree(key, n):
    return key >> (BITS * n)


def _divides(kb, ka, n):
    """True when monomial kb divides monomial ka."""
    for i in range(n + 1):
        s = BITS * i
        if ((kb >> s) & MASK) > ((ka >> s) & MASK):
            return False
    return True


def _nc(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class NotDivisible:
    """Returned (not raised) when an exact division fails."""

    def __bool__(self):
        return False

    def __repr__(self):
        return "NotDivisible"


class NotASquare:
    """Returned (not raised) when a polynomial has no square root."""

    def __bool__(self):
        return False

    def __repr__(self):
        return "NotASquare"


NOT_DIVISIBLE = NotDivisible()
NOT_A_SQUARE = NotASquare()


class MPoly:
    __slots__ = ("n", "terms", "field", "names")

    def __init__(self, n, terms=None, field=QQ, names=None):
        self.n = n
        self.terms = terms if terms is not None else {}
        self.field = field
        self.names = names

    # construction -----------------------------------------------------------

    @classmethod
    def const(cls, c, n, field=QQ, names=None):
        c = _nc(c)
        return cls(n, {0: c} if c != 0 else {}, field, names)

    @classmethod
    def var(cls, i, n, field=QQ, names=None):
        return cls(n, {pack(tuple(1 if j == i else 0 for j in range(n))): field.one if field is not QQ else 1}, field, names)

    @classmethod
    def gens(cls, n, field=QQ, names=None):
        return [cls.var(i, n, field, names) for i in range(n)]

    @classmethod
    def from_dict(cls, d, n=None, field=QQ, names=None):
        """Build from ``{exponent tuple: coefficient}``."""
        terms = {}
        for e, c in d.items():
            if n is None:
                n = len(e)
            c = _nc(c)
            if c != 0:
                k = pack(e)
                terms[k] = _nc(terms.get(k, 0) + c)
                if terms[k] == 0:
                    del terms[k]
        return cls(n or 0, terms, field, names)

    def _new(self, terms):
        return MPoly(self.n, terms, self.field, self.names)

    def _coerce(self, o):
        if isinstance(o, MPoly):
            if o.n != self.n:
                raise FieldMismatch(f"polynomials in {self.n} and {o.n} variables")
            return o
        if isinstance(o, (int, Fraction, Fp)) or hasattr(o, "field"):
            return MPoly.const(o, self.n, self.field, self.names)
        return None

    # inspection -------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        """(exponents, coefficient) pairs in decreasing graded-lex order."""
        n = self.n
        return [(unpack(k, n), self.terms[k]) for k in sorted(self.terms, reverse=True)]

    def coefficient(self, exps):
        return self.terms.get(pack(tuple(exps)), 0)

    def leading_key(self):
        return max(self.terms)

    def leading_term(self):
        k = max(self.terms)
        return unpack(k, self.n), self.terms[k]

    def leading_coefficient(self):
        return self.terms[max(self.terms)]

    def degree(self):
        if not self.terms:
            return -1
        return key_degree(max(self.terms), self.n)

    def min_degree(self):
        if not self.terms:
            return -1
        return key_degree(min(self.terms), self.n)

    def degree_in(self, i):
        if not self.terms:
            return -1
        s = BITS * (self.n - 1 - i)
        return max((k >> s) & MASK for k in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        d = self.degree()
        return all(key_degree(k, self.n) == d for k in self.terms)

    def is_constant(self):
        return not self.terms or list(self.terms) == [0]

    def constant_value(self):
        return self.terms.get(0, 0)

    def variables(self):
        used = set()
        for k in self.terms:
            for i, e in enumerate(unpack(k, self.n)):
                if e:
                    used.add(i)
        return sorted(used)

    # arithmetic -------------------------------------------------------------

    def __add__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        t = dict(self.terms)
        for k, c in o.terms.items():
            v = t.get(k)
            if v is None:
                t[k] = c
            else:
                v = _nc(v + c)
                if v == 0:
                    del t[k]
                else:
                    t[k] = v
        return self._new(t)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c):
        c = _nc(c)
        if c == 0:
            return self._new({})
        out = {}
        for k, v in self.terms.items():
            w = _nc(v * c)
            if w != 0:
                out[k] = w
        return self._new(out)

    def __mul__(self, o):
        if not isinstance(o, MPoly):
            if isinstance(o, (int, Fraction, Fp)) or hasattr(o, "field"):
                return self.scale(o)
            return NotImplemented
        if o.n != self.n:
            raise FieldMismatch(f"polynomials in {self.n} and {o.n} variables")
        a, b = self.terms, o.terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return self._new({k: _nc(c) for k, c in out.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = MPoly.const(1, self.n, self.field, self.names)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __truediv__(self, c):
        if isinstance(c, MPoly):
            q = exact_divide(self, c)
            if q is NOT_DIVISIBLE:
                raise ZeroDivisionError("polynomial division is not exact")
            return q
        if isinstance(c, int):
            c = Fraction(c)
        return self.scale(1 / c)

    def __eq__(self, o):
        if isinstance(o, MPoly):
            return self.n == o.n and self.terms == o.terms
        if isinstance(o, (int, Fraction, Fp)):
            return self.terms == ({0: _nc(o)} if o != 0 else {})
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # calculus and structure ---------------------------------------------------

    def diff(self, i):
        s = BITS * (self.n - 1 - i)
        top = BITS * self.n
        out = {}
        for k, c in self.terms.items():
            e = (k >> s) & MASK
            if e:
                out[k - (1 << s) - (1 << top)] = _nc(c * e)
        return self._new(out)

    def coeffs_in(self, i):
        """Split as ``sum_k x_i**k * P_k``; returns ``{k: P_k}`` with ``P_k`` free of ``x_i``."""
        s = BITS * (self.n - 1 - i)
        top = BITS * self.n
        parts = {}
        for k, c in self.terms.items():
            e = (k >> s) & MASK
            parts.setdefault(e, {})[k - (e << s) - (e << top)] = c
        return {e: self._new(t) for e, t in parts.items()}

    def drop_variable(self, i):
        """Re-index a polynomial not involving ``x_i`` into ``n - 1`` variables."""
        out = {}
        for k, c in self.terms.items():
            e = unpack(k, self.n)
            if e[i]:
                raise ValueError(f"polynomial involves variable {i}")
            out[pack(e[:i] + e[i + 1:])] = c
        names = None if self.names is None else self.names[:i] + self.names[i + 1:]
        return MPoly(self.n - 1, out, self.field, names)

    def insert_variable(self, i):
        out = {pack(unpack(k, self.n)[:i] + (0,) + unpack(k, self.n)[i:]): c for k, c in self.terms.items()}
        return MPoly(self.n + 1, out, self.field, None)

    def homogeneous_part(self, d):
        return self._new({k: c for k, c in self.terms.items() if key_degree(k, self.n) == d})

    def map_coefficients(self, f, field=None):
        out = {}
        for k, c in self.terms.items():
            w = _nc(f(c))
            if w != 0:
                out[k] = w
        return MPoly(self.n, out, field or self.field, self.names)

    def change_field(self, field):
        """Image under the coercion map into ``field`` (for example reduction mod p)."""
        return self.map_coefficients(field, field)

    def integer_primitive(self):
        """Scalar multiple with coprime integer coefficients and positive leading coefficient."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // igcd(den, c.denominator)
        ints = {k: int(c * den) for k, c in self.terms.items()}
        g = 0
        for c in ints.values():
            g = igcd(g, c)
        if ints[max(ints)] < 0:
            g = -g
        return self._new({k: c // g for k, c in ints.items()})

    def monic(self):
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        if isinstance(lc, int):
            lc = Fraction(lc)
        return self.scale(1 / lc)

    # evaluation -------------------------------------------------------------

    def __call__(self, *vals):
        if len(vals) == 1 and isinstance(vals[0], (list, tuple)):
            vals = vals[0]
        return self.evaluate(vals)

    def evaluate(self, vals):
        """Evaluate at a tuple of ring elements (scalars, jets, series or polynomials)."""
        if len(vals) != self.n:
            raise ValueError(f"expected {self.n} values, got {len(vals)}")
        if not self.terms:
            return 0
        if any(isinstance(v, MPoly) for v in vals):
            return self.substitute(vals)
        n = self.n
        maxdeg = [self.degree_in(i) for i in range(n)]
        pows = []
        for i, v in enumerate(vals):
            p = [1, v]
            for _ in range(maxdeg[i] - 1):
                p.append(p[-1] * v)
            pows.append(p)
        acc = 0
        for k, c in self.terms.items():
            t = c
            for i in range(n):
                e = (k >> (BITS * (n - 1 - i))) & MASK
                if e:
                    t = pows[i][e] * t
            acc = t + acc
        return acc

    def substitute(self, polys):
        """Compose with polynomials (or scalars) substituted for every variable, by nested Horner."""
        target = next(p for p in polys if isinstance(p, MPoly))
        m = target.n
        polys = [p if isinstance(p, MPoly) else MPoly.const(p, m, target.field, target.names) for p in polys]
        return _horner(self.items(), 0, polys, MPoly.const(0, m, target.field, target.names))

    # output -----------------------------------------------------------------

    def var_names(self):
        if self.names:
            return list(self.names)
        return [f"x{i + 1}" for i in range(self.n)]

    def __repr__(self):
        if not self.terms:
            return "0"
        names = self.var_names()
        parts = []
        for e, c in self.items():
            mon = "*".join(
                names[i] if x == 1 else f"{names[i]}^{x}" for i, x in enumerate(e) if x
            )
            cs = format_scalar(c)
            if mon:
                if cs == "1":
                    parts.append(mon)
                elif cs == "-1":
                    parts.append("-" + mon)
                else:
                    parts.append(f"({cs})*{mon}" if "/" in cs or not cs.lstrip("-").isdigit() else f"{cs}*{mon}")
            else:
                parts.append(cs)
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def to_json(self):
        fmt = self.field.format if self.field is not QQ else format_scalar
        return {
            "vars": self.var_names(),
            "field": self.field.to_json(),
            "terms": [{"e": list(e), "c": fmt(c)} for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, d):
        field = field_from_json(d.get("field", {"type": "Q"}))
        names = tuple(d["vars"])
        terms = {}
        for t in d["terms"]:
            c = field.parse(t["c"])
            terms[tuple(t["e"])] = c
        p = cls.from_dict(terms, len(names), field, names)
        return p


def _horner(items, i, polys, zero):
    # items: (exps, coeff) sorted decreasing; all exps agree on variables < i
    n = len(items[0][0])
    if i == n:
        c = sum(c for _, c in items)
        return zero + c
    groups = {}
    for e, c in items:
        groups.setdefault(e[i], []).append((e, c))
    acc = None
    prev = None
    for d in sorted(groups, reverse=True):
        inner = _horner(groups[d], i + 1, polys, zero)
        if acc is None:
            acc = inner
        else:
            acc = acc * (polys[i] ** (prev - d)) + inner
        prev = d
    if prev:
        acc = acc * (polys[i] ** prev)
    return acc


# ---------------------------------------------------------------------------
# parsing


def parse(text, names, field=QQ):
    """Parse a polynomial written with ``+ - * ^ **``, integers, rationals and the given variable names."""
    names = tuple(names)
    n = len(names)
    gens = {nm: MPoly.var(i, n, QQ, names) for i, nm in enumerate(names)}
    tree = ast.parse(text.replace("^", "**").replace("−", "-"), mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                if isinstance(b, MPoly):
                    if not b.is_constant():
                        raise ValueError("division by a non-constant")
                    b = b.constant_value()
                return a.scale(Fraction(1) / b)
            if isinstance(node.op, ast.Pow):
                if isinstance(b, MPoly):
                    b = b.constant_value()
                return a ** int(b)
        if isinstance(node, ast.UnaryOp):
            v = ev(node.operand)
            if isinstance(node.op, ast.USub):
                return -v
            if isinstance(node.op, ast.UAdd):
                return v
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return MPoly.const(node.value, n, QQ, names)
        if isinstance(node, ast.Name) and node.id in gens:
            return gens[node.id]
        raise ValueError(f"cannot parse polynomial fragment {ast.dump(node)}")

    p = ev(tree)
    if not isinstance(p, MPoly):
        p = MPoly.const(p, n, QQ, names)
    if field is not QQ:
        p = p.change_field(field)
    p.names = names
    return p


# ---------------------------------------------------------------------------
# exact division and square roots


def exact_divide(a, b):
    """Return ``q`` with ``a == b*q`` or :data:`NOT_DIVISIBLE`."""
    if not b.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.n != b.n:
        raise FieldMismatch("different variable counts")
    n = a.n
    if not a.terms:
        return a._new({})
    lk = max(b.terms)
    lc = b.terms[lk]
    inv = Fraction(1, lc) if isinstance(lc, int) else 1 / lc
    bt = [(k, c) for k, c in b.terms.items() if k != lk]
    r = dict(a.terms)
    heap = [-k for k in r]
    heapq.heapify(heap)
    q = {}
    while heap:
        k = -heapq.heappop(heap)
        c = r.pop(k, None)
        if c is None or c == 0:
            continue
        if not _divides(lk, k, n):
            return NOT_DIVISIBLE
        qk = k - lk
        qc = _nc(c * inv)
        q[qk] = qc
        for kb, cb in bt:
            kk = qk + kb
            v = r.get(kk)
            if v is None:
                r[kk] = -qc * cb
                heapq.heappush(heap, -kk)
            else:
                r[kk] = v - qc * cb
    return a._new(q)


def divides(b, a):
    return exact_divide(a, b) is not NOT_DIVISIBLE


def _field_sqrt(c, field):
    if field is QQ or isinstance(c, (int, Fraction)):
        return QQ.sqrt(Fraction(c))
    return field.sqrt(c)


def poly_sqrt(a):
    """Return ``s`` with ``s*s == a`` (leading coefficient canonical) or :data:`NOT_A_SQUARE`."""
    if not a.terms:
        return a
    n = a.n
    lk = max(a.terms)
    exps = unpack(lk, n)
    if any(e % 2 for e in exps):
        return NOT_A_SQUARE
    try:
        c0 = _nc(_field_sqrt(a.terms[lk], a.field))
    except NoRoot:
        return NOT_A_SQUARE
    k0 = pack(tuple(e // 2 for e in exps))
    s = {k0: c0}
    two_c0 = 2 * c0
    inv = Fraction(1, two_c0) if isinstance(two_c0, int) else 1 / two_c0
    r = dict(a.terms)
    # r = a - s^2, maintained incrementally
    r[2 * k0] = _nc(r[2 * k0] - c0 * c0)
    if r[2 * k0] == 0:
        del r[2 * k0]
    floor = a.min_degree() // 2
    while r:
        k = max(r)
        if not _divides(k0, k, n):
            return NOT_A_SQUARE
        tk = k - k0
        if key_degree(tk, n) < floor:
            return NOT_A_SQUARE
        tc = _nc(r[k] * inv)
        # r -= (2 s + t) t
        for ks, cs in s.items():
            kk = ks + tk
            v = _nc(r.get(kk, 0) - 2 * cs * tc)
            if v == 0:
                r.pop(kk, None)
            else:
                r[kk] = v
        kk = 2 * tk
        v = _nc(r.get(kk, 0) - tc * tc)
        if v == 0:
            r.pop(kk, None)
        else:
            r[kk] = v
        s[tk] = tc
    return a._new(s)


# ---------------------------------------------------------------------------
# discriminants and univariate helpers


def discriminant_wrt(f, var, drop=True):
    """``b^2 - 4ac`` for ``f = a x^2 + b x + c`` in the variable ``x = x_var``."""
    parts = f.coeffs_in(var)
    if max(parts) != 2:
        raise UnsupportedDegree(f"degree {max(parts)} in variable {var}; only quadratics are handled")
    zero = f._new({})
    a, b, c = parts.get(2, zero), parts.get(1, zero), parts.get(0, zero)
    d = b * b - a * c * 4
    return d.drop_variable(var) if drop else d


def univariate_coeffs(f, var=None):
    """Dense coefficient list (lowest degree first) of a polynomial in one variable."""
    used = f.variables()
    if var is None:
        var = used[0] if used else 0
    if any(v != var for v in used):
        raise ValueError("polynomial is not univariate")
    d = f.degree_in(var) if f.terms else -1
    out = [0] * (d + 1)
    for e, c in f.items():
        out[e[var]] = c
    return out


def from_univariate(coeffs, n=1, var=0, field=QQ, names=None):
    d = {}
    for i, c in enumerate(coeffs):
        if c != 0:
            d[tuple(i if j == var else 0 for j in range(n))] = c
    return MPoly.from_dict(d, n, field, names)


def root_multiplicity(f, r, var=None):
    """Largest k with ``(t - r)^k`` dividing the univariate polynomial ``f``."""
    return _upoly.root_multiplicity(univariate_coeffs(f, var), r)


def multiplicity_at_infinity(f, expected_degree, var=None):
    """Degree defect ``expected_degree - deg f``."""
    return expected_degree - (len(_upoly.trim(univariate_coeffs(f, var))) - 1)


def univariate_gcd(f, g, var=None):
    return _upoly.gcd(univariate_coeffs(f, var), univariate_coeffs(g, var))


def grlex_sort_key(p):
    return tuple((e, sort_key(c)) for e, c in p.items())


# ---------------------------------------------------------------------------
# greatest common divisors


def _is_unit_poly(p):
    return p.is_constant() and not p.is_zero()


def _prem(a, b, v):
    """Pseudo-remainder of ``a`` by ``b`` as polynomials in ``x_v``."""
    db = b.degree_in(v)
    lb = b.coeffs_in(v)[db]
    xv = MPoly.var(v, a.n, a.field, a.names)
    r = a
    while r.terms and r.degree_in(v) >= db:
        dr = r.degree_in(v)
        lr = r.coeffs_in(v)[dr]
        r = r * lb - b * lr * xv ** (dr - db)
    return r


def _content(a, v):
    g = None
    for c in a.coeffs_in(v).values():
        g = c if g is None else _prs_gcd(g, c)
        if _is_unit_poly(g):
            break
    return g


def _prs_gcd(a, b):
    """Gcd by recursive primitive pseudo-remainder sequences (any coefficient field)."""
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    used = sorted(set(a.variables()) | set(b.variables()))
    if not used:
        return MPoly.const(1, a.n, a.field, a.names)
    v = used[0]
    if a.degree_in(v) == 0 or b.degree_in(v) == 0:
        # one of them is free of x_v: the gcd divides its coefficients
        free, other = (a, b) if a.degree_in(v) == 0 else (b, a)
        return _prs_gcd(free, _content(other, v))
    ca, cb = _content(a, v), _content(b, v)
    c = _prs_gcd(ca, cb)
    pa, pb = exact_divide(a, ca), exact_divide(b, cb)
    if pa.degree_in(v) < pb.degree_in(v):
        pa, pb = pb, pa
    while not pb.is_zero() and pb.degree_in(v) > 0:
        r = _prem(pa, pb, v)
        if r.is_zero():
            pa, pb = pb, r
            break
        pa, pb = pb, exact_divide(r, _content(r, v))
    if pb.is_zero():
        g = exact_divide(pa, _content(pa, v))
    else:
        g = MPoly.const(1, a.n, a.field, a.names)
    return _normalize_gcd(c * g)


def _normalize_gcd(g):
    if g.is_zero():
        return g
    if g.field is QQ:
        return g.integer_primitive()
    return g.monic()


def _int_dicts(polys, dehomogenize):
    out = []
    for p in polys:
        p = p.integer_primitive()
        d = {}
        for e, c in p.items():
            d[e[:2] if dehomogenize else e] = c
        out.append(d)
    return out


def _modular_gcd(polys):
    from . import _modgcd

    n = polys[0].n
    homog = n == 3
    shift = 0
    if homog:
        shift = min(min(e[2] for e, _ in p.items()) for p in polys)
    dicts = _int_dicts(polys, homog)
    for attempt, cand in enumerate(_modgcd.bigcd_candidates(dicts)):
        if homog:
            D = max(i + j for i, j in cand)
            terms = {(i, j, D - i - j + shift): c for (i, j), c in cand.items()}
        else:
            terms = dict(cand)
        g = MPoly.from_dict(terms, n, QQ, polys[0].names).integer_primitive()
        if all(divides(g, p) for p in polys):
            return g
        if attempt > 20:
            break
    raise ArithmeticError("modular gcd did not stabilize")


def gcd_many(polys):
    """Gcd of several polynomials, up to a scalar (integer primitive over the rationals)."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        raise ValueError("gcd of zero polynomials")
    if len(polys) == 1:
        return _normalize_gcd(polys[0])
    n = polys[0].n
    if polys[0].field is QQ and (
        n == 2 or (n == 3 and all(p.is_homogeneous() for p in polys))
    ):
        if any(_is_unit_poly(p) for p in polys):
            return MPoly.const(1, n, QQ, polys[0].names)
        return _modular_gcd(polys)
    g = polys[0]
    for p in polys[1:]:
        g = _prs_gcd(g, p)
        if _is_unit_poly(g):
            break
    return _normalize_gcd(g)


def gcd(a, b):
    """Greatest common divisor up to a scalar; ``gcd(a, 0) == a``."""
    if a.is_zero():
        return _normalize_gcd(b)
    if b.is_zero():
        return _normalize_gcd(a)
    return gcd_many([a, b])


gcd_multivariate = gcd


def prs_gcd(a, b):
    """The pseudo-remainder gcd, also usable as an independent check of :func:`gcd`."""
    return _normalize_gcd(_prs_gcd(a, b))


def certify_coprime(polys):
    """True when homogeneous ternary (or binary) integer forms share no factor.

    Uses a gcd modulo a prime that keeps every lex-leading coefficient; a
    constant gcd there rules out a common factor over the rationals.
    """
    from . import _modgcd

    n = polys[0].n
    if n == 3:
        if min(min(e[2] for e, _ in p.items()) for p in polys) > 0:
            return False
        return _modgcd.coprime_mod_p(_int_dicts(polys, True))
    if n == 2:
        return _modgcd.coprime_mod_p(_int_dicts(polys, False))
    return _is_unit_poly(gcd_many(polys))
