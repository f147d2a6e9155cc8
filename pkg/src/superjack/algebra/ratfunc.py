"""Exact polynomials and rational functions in the single parameter alpha.

Polynomials are integer coefficient tuples in ascending degree with no
trailing zeros; the zero polynomial is the empty tuple.  Rational functions
are kept in a canonical reduced form so that ``==`` is structural equality.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

ZERO: tuple[int, ...] = ()
ONE: tuple[int, ...] = (1,)


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return _trim(out)


def pneg(p):
    return tuple(-c for c in p)


def psub(p, q):
    return padd(p, pneg(q))


def pmul(p, q):
    if not p or not q:
        return ZERO
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def pscale(p, k):
    if k == 0:
        return ZERO
    return tuple(c * k for c in p)


def content(p):
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def primitive(p):
    g = content(p)
    if g in (0, 1):
        return p
    return tuple(c // g for c in p)


def pdivexact(p, q):
    """Exact quotient p / q over the integers; raises if q does not divide p."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p)
    dq = len(q) - 1
    lq = q[-1]
    if len(rem) - 1 < dq:
        if rem:
            raise ArithmeticError("polynomial division is not exact")
        return ZERO
    quot = [0] * (len(rem) - dq)
    for k in range(len(rem) - 1, dq - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        if c % lq:
            raise ArithmeticError("polynomial division is not exact")
        t = c // lq
        quot[k - dq] = t
        for i, b in enumerate(q):
            rem[k - dq + i] -= t * b
    if any(rem):
        raise ArithmeticError("polynomial division is not exact")
    return _trim(quot)


def _prem(a, b):
    # pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        k = len(r) - 1
        c = r[-1]
        r = [x * lb for x in r]
        for i, y in enumerate(b):
            r[k - db + i] -= c * y
        r = list(_trim(r))
    return tuple(r)


def pgcd(p, q):
    """Greatest common divisor in Z[alpha], normalised to positive leading coefficient."""
    if not p:
        g = q
    elif not q:
        g = p
    else:
        cont = gcd(content(p), content(q))
        a, b = primitive(p), primitive(q)
        if len(a) < len(b):
            a, b = b, a
        while b:
            r = _prem(a, b)
            a, b = b, primitive(r) if r else ZERO
        g = pscale(primitive(a), cont)
    if g and g[-1] < 0:
        g = pneg(g)
    return g


def peval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def preverse(p, deg):
    """alpha^deg * p(1/alpha); requires deg >= degree of p."""
    out = [0] * (deg + 1)
    for i, c in enumerate(p):
        out[deg - i] = c
    return _trim(out)


def pformat(p, var="alpha", latex=False):
    if not p:
        return "0"
    pieces = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mon = var if i == 1 else (f"{var}^{{{i}}}" if latex else f"{var}^{i}")
            if a == 1:
                body = mon
            else:
                body = f"{a}{' ' if latex else '*'}{mon}"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def _is_const(p):
    return len(p) <= 1


class AlphaRational:
    """An element of Q(alpha) in canonical reduced form.

    ``num`` and ``den`` are integer polynomials with no common polynomial
    factor, no common integer content, and ``den`` has positive leading
    coefficient.  Zero is ``0 / 1``.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=ZERO, den=ONE, *, _canonical=False):
        if isinstance(num, int):
            num = _trim((num,))
        if isinstance(den, int):
            den = _trim((den,))
        if not _canonical:
            num, den = _canonicalize(tuple(num), tuple(den))
        self.num = num
        self.den = den
        self._hash = None

    # construction helpers
    @classmethod
    def from_int(cls, k):
        return cls(_trim((k,)), ONE, _canonical=True)

    @classmethod
    def from_fraction(cls, q):
        q = Fraction(q)
        return cls(_trim((q.numerator,)), (q.denominator,), _canonical=True)

    @classmethod
    def poly(cls, coeffs):
        """The polynomial with ascending integer coefficients ``coeffs``."""
        return cls(_trim(coeffs), ONE, _canonical=True)

    @classmethod
    def alpha(cls):
        return cls((0, 1), ONE, _canonical=True)

    @classmethod
    def linear(cls, a, c):
        """a*alpha + c."""
        return cls(_trim((c, a)), ONE, _canonical=True)

    # predicates
    def is_zero(self):
        return not self.num

    def is_polynomial(self):
        return self.den == ONE

    def __bool__(self):
        return bool(self.num)

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, AlphaRational):
            return other
        if isinstance(other, int):
            return AlphaRational.from_int(other)
        if isinstance(other, Fraction):
            return AlphaRational.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            if self.den == ONE:
                return AlphaRational(padd(self.num, other.num), ONE, _canonical=True)
            return AlphaRational(padd(self.num, other.num), self.den)
        num = padd(pmul(self.num, other.den), pmul(other.num, self.den))
        return AlphaRational(num, pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return AlphaRational(pneg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return AlphaRational(ZERO, ONE, _canonical=True)
        if self.den == ONE and other.den == ONE:
            return AlphaRational(pmul(self.num, other.num), ONE, _canonical=True)
        return AlphaRational(pmul(self.num, other.num), pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(alpha)")
        return AlphaRational(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = AlphaRational.from_int(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # evaluation and substitution
    def evaluate(self, x):
        """Exact value at a rational point ``x``."""
        x = Fraction(x)
        d = peval(self.den, x)
        if d == 0:
            raise ZeroDivisionError(f"pole at alpha={x}")
        return Fraction(peval(self.num, x)) / d

    def at_reciprocal(self):
        """The rational function alpha -> 1/alpha."""
        dn = max(len(self.num) - 1, 0)
        dd = max(len(self.den) - 1, 0)
        deg = max(dn, dd)
        return AlphaRational(preverse(self.num, deg), preverse(self.den, deg))

    # rendering
    def format(self, latex=False):
        var = r"\alpha" if latex else "alpha"
        n = pformat(self.num, var, latex)
        if self.den == ONE:
            return n
        d = pformat(self.den, var, latex)
        if latex:
            return rf"\frac{{{n}}}{{{d}}}"
        if len(self.num) > 1 and sum(1 for c in self.num if c) > 1:
            n = f"({n})"
        if sum(1 for c in self.den if c) > 1 or len(self.den) > 1:
            d = f"({d})"
        return f"{n} / {d}"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"AlphaRational({self.num!r}, {self.den!r})"

    def to_json(self):
        return {"num": list(self.num), "den": list(self.den)}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(obj["num"]), tuple(obj["den"]))


def _canonicalize(num, den):
    num, den = _trim(num), _trim(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return ZERO, ONE
    if len(den) > 1:
        g = pgcd(num, den)
        if len(g) > 1:
            num = pdivexact(num, g)
            den = pdivexact(den, g)
    c = gcd(content(num), content(den))
    if c > 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    if den[-1] < 0:
        num, den = pneg(num), pneg(den)
    return num, den


ALPHA = AlphaRational.alpha()
R_ONE = AlphaRational.from_int(1)
R_ZERO = AlphaRational.from_int(0)
