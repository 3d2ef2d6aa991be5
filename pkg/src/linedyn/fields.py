"""Exact scalar arithmetic.

Rationals are plain :class:`fractions.Fraction` (or ``int``) values.  The other
scalar types carry a reference to their parent field object and interoperate
with ``int`` and ``Fraction`` operands, which are coerced into the field.
Mixing elements of two different fields raises :class:`FieldMismatch`.

Field objects:

* :data:`QQ` -- the rationals.
* :class:`PrimeField` -- integers modulo an odd prime ``p < 2**63``.
* :class:`ExtensionField` -- ``K[u]/(m(u))`` for a monic ``m`` of degree 2..4.
* :class:`RationalFunctionField` -- ``K(t)`` with reduced fractions.
* :class:`JetRing` -- ``K[e1, e2]/(e1, e2)**2``, used for exact first derivatives.
* :class:`PowerSeriesRing` -- ``K[[e]]`` truncated at a fixed precision, used to
  take limits of rational maps along curves.
"""

from __future__ import annotations

import random as _random
from fractions import Fraction
from math import isqrt

import gmpy2

from . import _upoly


from .errors import FieldMismatch, NoRoot, NonInvertible  # noqa: F401


def is_zero(x):
    return x == 0


def is_unit(x):
    """True when ``x`` is invertible (nonzero for fields)."""
    if isinstance(x, (Jet, PowerSeries)):
        return x.lead_is_unit()
    return x != 0


def sort_key(x):
    """A deterministic total-order key for scalars of one field."""
    if isinstance(x, int):
        return (x, 1)
    if isinstance(x, Fraction):
        return (x.numerator, x.denominator)
    if isinstance(x, Fp):
        return x.v
    if isinstance(x, ExtElement):
        return tuple(sort_key(c) for c in x.c)
    if isinstance(x, Jet):
        return (sort_key(x.c), sort_key(x.d1), sort_key(x.d2))
    if isinstance(x, RatFunc):
        return (tuple(sort_key(c) for c in x.num), tuple(sort_key(c) for c in x.den))
    if isinstance(x, PowerSeries):
        return tuple(sort_key(c) for c in x.c)
    raise TypeError(f"no ordering for {type(x).__name__}")


def format_scalar(x):
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


# ---------------------------------------------------------------------------
# rationals


class RationalField:
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, str)):
            return Fraction(x)
        raise FieldMismatch(f"cannot coerce {x!r} into QQ")

    def parse(self, s):
        return Fraction(s)

    def format(self, x):
        return format_scalar(Fraction(x))

    def random(self, rng, bound=50):
        den = rng.randint(1, bound)
        return Fraction(rng.randint(-bound, bound), den)

    def sqrt(self, a):
        a = Fraction(a)
        if a < 0:
            raise NoRoot(f"{a} is negative")
        n, d = isqrt(a.numerator), isqrt(a.denominator)
        if n * n != a.numerator or d * d != a.denominator:
            raise NoRoot(f"{a} is not a rational square")
        return Fraction(n, d)

    def to_json(self):
        return {"type": "Q"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


# ---------------------------------------------------------------------------
# prime fields


class PrimeField:
    def __init__(self, p):
        p = int(p)
        if p == 2 or p >= 2**63 or not gmpy2.is_prime(p):
            raise ValueError(f"{p} is not an odd prime below 2**63")
        self.p = p
        self.characteristic = p
        self.zero = Fp(0, self)
        self.one = Fp(1, self)

    def __call__(self, x):
        if type(x) is Fp:
            if x.field.p != self.p:
                raise FieldMismatch(f"element of F_{x.field.p} used in F_{self.p}")
            return x
        if isinstance(x, int):
            return Fp(x % self.p, self)
        if isinstance(x, Fraction):
            return Fp(x.numerator * _inv_mod(x.denominator, self.p) % self.p, self)
        if isinstance(x, str):
            return self(Fraction(x))
        raise FieldMismatch(f"cannot coerce {x!r} into F_{self.p}")

    def parse(self, s):
        return self(Fraction(s))

    def format(self, x):
        return str(self(x).v)

    def random(self, rng, nonzero=False):
        lo = 1 if nonzero else 0
        return Fp(rng.randrange(lo, self.p), self)

    def elements(self):
        for v in range(self.p):
            yield Fp(v, self)

    def sqrt(self, a):
        return sqrt_in_field(self(a))

    def to_json(self):
        return {"type": "Fp", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def _inv_mod(a, p):
    try:
        return pow(a, -1, p)
    except ValueError:
        raise NonInvertible(f"{a} is not invertible modulo {p}") from None


class Fp:
    """An element of a prime field, reduced to ``[0, p)``."""

    __slots__ = ("v", "field")

    def __init__(self, v, field):
        self.v = v
        self.field = field

    def _other(self, o):
        if type(o) is Fp:
            if o.field.p != self.field.p:
                raise FieldMismatch(f"F_{self.field.p} vs F_{o.field.p}")
            return o.v
        if isinstance(o, int):
            return o % self.field.p
        if isinstance(o, Fraction):
            p = self.field.p
            return o.numerator * _inv_mod(o.denominator, p) % p
        return None

    def __add__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return Fp((self.v + w) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return Fp((self.v - w) % self.field.p, self.field)

    def __rsub__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return Fp((w - self.v) % self.field.p, self.field)

    def __mul__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return Fp(self.v * w % self.field.p, self.field)

    __rmul__ = __mul__

    def __truediv__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        p = self.field.p
        return Fp(self.v * _inv_mod(w, p) % p, self.field)

    def __rtruediv__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        p = self.field.p
        return Fp(w * _inv_mod(self.v, p) % p, self.field)

    def __neg__(self):
        return Fp(-self.v % self.field.p, self.field)

    def __pow__(self, e):
        p = self.field.p
        if e < 0:
            return Fp(pow(_inv_mod(self.v, p), -e, p), self.field)
        return Fp(pow(self.v, e, p), self.field)

    def inverse(self):
        return Fp(_inv_mod(self.v, self.field.p), self.field)

    def __eq__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return self.v == w

    def __hash__(self):
        return hash((self.v, self.field.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return str(self.v)


def sqrt_in_field(a):
    """Square root in a prime field by Tonelli-Shanks.

    Returns the smaller representative of the two roots; raises :class:`NoRoot`
    for non-residues.
    """
    if not isinstance(a, Fp):
        raise TypeError("sqrt_in_field expects a prime-field element")
    p = a.field.p
    n = a.v
    if n == 0:
        return a.field.zero
    if pow(n, (p - 1) // 2, p) != 1:
        raise NoRoot(f"{n} is not a square modulo {p}")
    if p % 4 == 3:
        r = pow(n, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
    return Fp(min(r, p - r), a.field)


# ---------------------------------------------------------------------------
# simple algebraic extensions


class ExtensionField:
    """``base[u] / (minpoly)``; ``minpoly`` is given leading coefficient first."""

    def __init__(self, base, minpoly, name="u"):
        coeffs = [base(c) for c in minpoly]
        if coeffs[0] != 1:
            raise ValueError("minimal polynomial must be monic")
        if not 2 <= len(coeffs) - 1 <= 4:
            raise ValueError("extension degree must be between 2 and 4")
        if coeffs[-1] == 0:
            raise ValueError("minimal polynomial must have nonzero constant term")
        self.base = base
        self.name = name
        self.minpoly = tuple(coeffs)
        self.degree = len(coeffs) - 1
        # low-to-high, without the leading 1
        self._low = tuple(reversed(coeffs))[:-1]
        self.characteristic = base.characteristic
        self.zero = ExtElement((base.zero,) * self.degree, self)
        self.one = ExtElement((base.one,) + (base.zero,) * (self.degree - 1), self)
        self.gen = ExtElement(
            (base.zero, base.one) + (base.zero,) * (self.degree - 2), self
        )

    def __call__(self, x):
        if isinstance(x, ExtElement):
            if x.field != self:
                raise FieldMismatch("elements of different extensions")
            return x
        if isinstance(x, (list, tuple)):
            return self._reduce([self.base(c) for c in x])
        b = self.base(x)
        return ExtElement((b,) + (self.base.zero,) * (self.degree - 1), self)

    def _reduce(self, coeffs):
        c = list(coeffs)
        d = self.degree
        for k in range(len(c) - 1, d - 1, -1):
            lead = c[k]
            if lead != 0:
                for i in range(d):
                    c[k - d + i] = c[k - d + i] - lead * self._low[i]
        c = c[:d] + [self.base.zero] * (d - len(c))
        return ExtElement(tuple(self.base(x) for x in c), self)

    def parse(self, s):
        if isinstance(s, (list, tuple)):
            return self([self.base.parse(c) for c in s])
        return self(self.base.parse(s))

    def format(self, x):
        return [self.base.format(c) for c in self(x).c]

    def random(self, rng):
        return ExtElement(tuple(self.base.random(rng) for _ in range(self.degree)), self)

    def to_json(self):
        return {
            "type": "ext",
            "base": self.base.to_json(),
            "minpoly": [self.base.format(c) for c in self.minpoly],
        }

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.base == self.base
            and other.minpoly == self.minpoly
        )

    def __hash__(self):
        return hash(("ext", self.base, self.minpoly))

    def __repr__(self):
        return f"{self.base!r}[{self.name}]/({self.minpoly})"


def adjoin_root(base, minpoly, name="u"):
    """Return the extension of ``base`` by a root of ``minpoly`` (leading coefficient first)."""
    return ExtensionField(base, minpoly, name)


class ExtElement:
    __slots__ = ("c", "field")

    def __init__(self, c, field):
        self.c = c
        self.field = field

    def _other(self, o):
        if isinstance(o, ExtElement):
            if o.field != self.field:
                raise FieldMismatch("elements of different extensions")
            return o
        if isinstance(o, (int, Fraction, Fp)):
            return self.field(o)
        return None

    def __add__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return ExtElement(tuple(a + b for a, b in zip(self.c, o.c)), self.field)

    __radd__ = __add__

    def __neg__(self):
        return ExtElement(tuple(-a for a in self.c), self.field)

    def __sub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return ExtElement(tuple(a - b for a, b in zip(self.c, o.c)), self.field)

    def __rsub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        d = self.field.degree
        zero = self.field.base.zero
        prod = [zero] * (2 * d - 1)
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j, b in enumerate(o.c):
                prod[i + j] = prod[i + j] + a * b
        return self.field._reduce(prod)

    __rmul__ = __mul__

    def inverse(self):
        F = self.field
        m = list(reversed(F.minpoly))
        g, s, _ = _upoly.xgcd(_upoly.trim(self.c), m, F.base.one)
        if len(g) != 1:
            raise NonInvertible(f"{self} is not invertible (modulus reducible or element zero)")
        return F._reduce(s)

    def __truediv__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out, base = self.field.one, self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return all(a == b for a, b in zip(self.c, o.c))

    def __hash__(self):
        if all(c == 0 for c in self.c[1:]):
            return hash(self.c[0])
        return hash(self.c)

    def __bool__(self):
        return any(c != 0 for c in self.c)

    def __repr__(self):
        name = self.field.name
        parts = []
        for i, c in enumerate(self.c):
            if c == 0:
                continue
            mon = "" if i == 0 else (name if i == 1 else f"{name}^{i}")
            parts.append(f"({format_scalar(c)})" + (f"*{mon}" if mon else ""))
        return " + ".join(parts) or "0"


# ---------------------------------------------------------------------------
# rational functions in one variable


class RationalFunctionField:
    def __init__(self, base=QQ, var="t"):
        self.base = base
        self.var = var
        self.characteristic = base.characteristic
        self.zero = RatFunc([], [base.one], self, reduced=True)
        self.one = RatFunc([base.one], [base.one], self, reduced=True)
        self.gen = RatFunc([base.zero, base.one], [base.one], self, reduced=True)

    def __call__(self, x):
        if isinstance(x, RatFunc):
            if x.field != self:
                raise FieldMismatch("rational functions over different fields")
            return x
        b = self.base(x)
        return RatFunc([b], [self.base.one], self)

    def from_poly(self, coeffs, den=None):
        """Build num/den from coefficient lists, lowest degree first."""
        num = [self.base(c) for c in coeffs]
        d = [self.base(c) for c in den] if den is not None else [self.base.one]
        return RatFunc(num, d, self)

    def parse(self, s):
        if isinstance(s, dict):
            return self.from_poly(
                [self.base.parse(c) for c in s["num"]], [self.base.parse(c) for c in s["den"]]
            )
        return self(self.base.parse(s))

    def format(self, x):
        x = self(x)
        return {
            "num": [self.base.format(c) for c in x.num],
            "den": [self.base.format(c) for c in x.den],
        }

    def random(self, rng, degree=2):
        num = [self.base.random(rng) for _ in range(degree + 1)]
        den = [self.base.random(rng) for _ in range(degree)] + [self.base.one]
        return self.from_poly(num, den)

    def to_json(self):
        return {"type": "ratfun", "base": self.base.to_json(), "var": self.var}

    def __eq__(self, other):
        return (
            isinstance(other, RationalFunctionField)
            and other.base == self.base
            and other.var == self.var
        )

    def __hash__(self):
        return hash(("ratfun", self.base, self.var))

    def __repr__(self):
        return f"{self.base!r}({self.var})"


class RatFunc:
    """A reduced fraction ``num/den`` with ``den`` monic."""

    __slots__ = ("num", "den", "field")

    def __init__(self, num, den, field, reduced=False):
        num = _upoly.trim(num)
        den = _upoly.trim(den)
        if not den:
            raise NonInvertible("rational function with zero denominator")
        if not reduced:
            if not num:
                den = [field.base.one]
            else:
                g = _upoly.gcd(num, den)
                if len(g) > 1:
                    num = _upoly.divmod_(num, g)[0]
                    den = _upoly.divmod_(den, g)[0]
                lc = den[-1]
                if lc != 1:
                    num = [_upoly._div(c, lc) for c in num]
                    den = [_upoly._div(c, lc) for c in den]
        self.num = num
        self.den = den
        self.field = field

    def _other(self, o):
        if isinstance(o, RatFunc):
            if o.field != self.field:
                raise FieldMismatch("rational functions over different fields")
            return o
        if isinstance(o, (int, Fraction, Fp, ExtElement)):
            return self.field(o)
        return None

    def __add__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(_upoly.add(self.num, o.num), self.den, self.field)
        num = _upoly.add(_upoly.mul(self.num, o.den), _upoly.mul(o.num, self.den))
        return RatFunc(num, _upoly.mul(self.den, o.den), self.field)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(_upoly.neg(self.num), self.den, self.field, reduced=True)

    def __sub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return RatFunc(
            _upoly.mul(self.num, o.num), _upoly.mul(self.den, o.den), self.field
        )

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise NonInvertible("inverse of the zero rational function")
        return RatFunc(self.den, self.num, self.field)

    def __truediv__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        one = self.field.base.one
        return RatFunc(_upoly.power(self.num, e, one), _upoly.power(self.den, e, one), self.field)

    def __eq__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if len(self.den) == 1 and len(self.num) <= 1:
            return hash(self.num[0] if self.num else 0)
        return hash((tuple(self.num), tuple(self.den)))

    def __bool__(self):
        return bool(self.num)

    def __call__(self, x):
        """Evaluate at a scalar or substitute another rational function."""
        if isinstance(x, RatFunc):
            return _ratfun_compose(self, x)
        d = _upoly.evaluate(self.den, x)
        if d == 0:
            raise NonInvertible("evaluation at a pole")
        return _upoly.evaluate(self.num, x) / d

    def __repr__(self):
        v = self.field.var

        def show(a):
            terms = []
            for i, c in enumerate(a):
                if c == 0:
                    continue
                mon = "" if i == 0 else (v if i == 1 else f"{v}^{i}")
                terms.append(format_scalar(c) + (f"*{mon}" if mon else ""))
            return " + ".join(reversed(terms)) or "0"

        if self.den == [self.field.base.one]:
            return show(self.num)
        return f"({show(self.num)})/({show(self.den)})"


def _ratfun_compose(f, g):
    F = g.field
    num = F.zero
    for c in reversed(f.num):
        num = num * g + c
    den = F.zero
    for c in reversed(f.den):
        den = den * g + c
    return num / den


# ---------------------------------------------------------------------------
# first-order jets in two infinitesimals


class JetRing:
    def __init__(self, base):
        self.base = base
        self.characteristic = base.characteristic
        z, o = base.zero, base.one
        self.zero = Jet(z, z, z, self)
        self.one = Jet(o, z, z, self)
        self.e1 = Jet(z, o, z, self)
        self.e2 = Jet(z, z, o, self)

    def __call__(self, x, d1=None, d2=None):
        if isinstance(x, Jet):
            return x
        b = self.base
        return Jet(
            b(x),
            b.zero if d1 is None else b(d1),
            b.zero if d2 is None else b(d2),
            self,
        )

    def to_json(self):
        return {"type": "jet", "base": self.base.to_json()}

    def __eq__(self, other):
        return isinstance(other, JetRing) and other.base == self.base

    def __hash__(self):
        return hash(("jet", self.base))

    def __repr__(self):
        return f"Jets({self.base!r})"


class Jet:
    """``c + d1*e1 + d2*e2`` with all products of infinitesimals zero."""

    __slots__ = ("c", "d1", "d2", "ring")

    def __init__(self, c, d1, d2, ring):
        self.c = c
        self.d1 = d1
        self.d2 = d2
        self.ring = ring

    def _other(self, o):
        if isinstance(o, Jet):
            if o.ring != self.ring:
                raise FieldMismatch("jets over different bases")
            return o
        if isinstance(o, (int, Fraction, Fp, ExtElement)):
            return self.ring(o)
        return None

    def __add__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return Jet(self.c + o.c, self.d1 + o.d1, self.d2 + o.d2, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.c, -self.d1, -self.d2, self.ring)

    def __sub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return Jet(self.c - o.c, self.d1 - o.d1, self.d2 - o.d2, self.ring)

    def __rsub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return Jet(
            self.c * o.c,
            self.c * o.d1 + o.c * self.d1,
            self.c * o.d2 + o.c * self.d2,
            self.ring,
        )

    __rmul__ = __mul__

    def lead_is_unit(self):
        return self.c != 0

    def inverse(self):
        if self.c == 0:
            raise NonInvertible("jet with zero constant part")
        ic = 1 / self.c if not isinstance(self.c, int) else Fraction(1, self.c)
        return Jet(ic, -self.d1 * ic * ic, -self.d2 * ic * ic, self.ring)

    def __truediv__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return self.ring.one
        ce = self.c ** (e - 1)
        return Jet(ce * self.c, e * ce * self.d1, e * ce * self.d2, self.ring)

    def __eq__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return self.c == o.c and self.d1 == o.d1 and self.d2 == o.d2

    def __hash__(self):
        if self.d1 == 0 and self.d2 == 0:
            return hash(self.c)
        return hash((self.c, self.d1, self.d2))

    def __bool__(self):
        return self.c != 0 or self.d1 != 0 or self.d2 != 0

    def __repr__(self):
        return f"Jet({self.c!r}, {self.d1!r}, {self.d2!r})"


# ---------------------------------------------------------------------------
# truncated power series in one variable


class PowerSeriesRing:
    def __init__(self, base, prec=12):
        self.base = base
        self.prec = prec
        self.characteristic = base.characteristic
        z, o = base.zero, base.one
        self.zero = PowerSeries([z] * prec, self)
        self.one = PowerSeries([o] + [z] * (prec - 1), self)
        self.gen = PowerSeries([z, o] + [z] * (prec - 2), self)

    def __call__(self, x):
        if isinstance(x, PowerSeries):
            return x
        if isinstance(x, (list, tuple)):
            c = [self.base(v) for v in x][: self.prec]
            return PowerSeries(c + [self.base.zero] * (self.prec - len(c)), self)
        return PowerSeries([self.base(x)] + [self.base.zero] * (self.prec - 1), self)

    def __eq__(self, other):
        return (
            isinstance(other, PowerSeriesRing)
            and other.base == self.base
            and other.prec == self.prec
        )

    def __hash__(self):
        return hash(("series", self.base, self.prec))

    def __repr__(self):
        return f"{self.base!r}[[e]]/e^{self.prec}"


class PowerSeries:
    __slots__ = ("c", "ring")

    def __init__(self, c, ring):
        self.c = c
        self.ring = ring

    def _other(self, o):
        if isinstance(o, PowerSeries):
            if o.ring != self.ring:
                raise FieldMismatch("series over different rings")
            return o
        if isinstance(o, (int, Fraction, Fp, ExtElement)):
            return self.ring(o)
        return None

    def __add__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return PowerSeries([a + b for a, b in zip(self.c, o.c)], self.ring)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-a for a in self.c], self.ring)

    def __sub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return PowerSeries([a - b for a, b in zip(self.c, o.c)], self.ring)

    def __rsub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        n = self.ring.prec
        out = [self.ring.base.zero] * n
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j in range(n - i):
                b = o.c[j]
                if b != 0:
                    out[i + j] = out[i + j] + a * b
        return PowerSeries(out, self.ring)

    __rmul__ = __mul__

    def valuation(self):
        for i, a in enumerate(self.c):
            if a != 0:
                return i
        return None

    def lead_is_unit(self):
        return self.c[0] != 0

    def shift(self, k):
        """Divide by ``e**k``; the top ``k`` coefficients become unknown and are zeroed."""
        z = self.ring.base.zero
        return PowerSeries(self.c[k:] + [z] * k, self.ring)

    def inverse(self):
        if self.c[0] == 0:
            raise NonInvertible("series with zero constant term")
        n = self.ring.prec
        inv0 = 1 / self.c[0] if not isinstance(self.c[0], int) else Fraction(1, self.c[0])
        out = [inv0]
        for k in range(1, n):
            s = self.ring.base.zero
            for i in range(1, k + 1):
                s = s + self.c[i] * out[k - i]
            out.append(-s * inv0)
        return PowerSeries(out, self.ring)

    def __truediv__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out, base = self.ring.one, self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def sqrt(self):
        """Square root with the base field's square root of the leading coefficient.

        The valuation must be even; the result is accurate to ``prec - v/2`` terms.
        """
        v = self.valuation()
        if v is None:
            return self.ring.zero
        if v % 2:
            raise NoRoot("odd valuation")
        u = self.shift(v)
        r0 = self.ring.base.sqrt(u.c[0])
        n = self.ring.prec
        out = [r0] + [self.ring.base.zero] * (n - 1)
        two_r0 = 2 * r0
        for k in range(1, n):
            s = u.c[k]
            for i in range(1, k):
                s = s - out[i] * out[k - i]
            out[k] = Fraction(s, two_r0) if isinstance(s, int) and isinstance(two_r0, int) else s / two_r0
        r = PowerSeries(out, self.ring)
        h = v // 2
        return PowerSeries([self.ring.base.zero] * h + r.c[: n - h], self.ring)

    def __eq__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return all(a == b for a, b in zip(self.c, o.c))

    def __hash__(self):
        return hash(tuple(self.c))

    def __bool__(self):
        return any(a != 0 for a in self.c)

    def __repr__(self):
        return f"Series({self.c!r})"


# ---------------------------------------------------------------------------
# serialization


def field_from_json(d):
    kind = d["type"]
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return PrimeField(d["p"])
    if kind == "ext":
        base = field_from_json(d["base"])
        return ExtensionField(base, [base.parse(c) for c in d["minpoly"]])
    if kind == "ratfun":
        return RationalFunctionField(field_from_json(d["base"]), d.get("var", "t"))
    if kind == "jet":
        return JetRing(field_from_json(d["base"]))
    raise ValueError(f"unknown field type {kind!r}")


def field_of(*xs):
    """The field of the first element that carries one; rationals otherwise."""
    for x in xs:
        f = getattr(x, "field", None)
        if f is not None:
            return f
        r = getattr(x, "ring", None)
        if r is not None:
            return r
    return QQ


def default_rng(seed=None):
    return _random.Random(seed)
