"""Sparse integer polynomials in the indeterminates a_1..a_m, b_1..b_{m-1}."""

from __future__ import annotations

import json


class MultiPoly:
    """Integer polynomial over a fixed alphabet {a_1..a_m, b_1..b_{m-1}}.

    Exponent vectors have length ``2m - 1``: positions ``0..m-1`` hold
    ``a_1..a_m`` and positions ``m..2m-2`` hold ``b_1..b_{m-1}``.
    """

    __slots__ = ("m", "terms")

    def __init__(self, m, terms=None):
        if m < 1:
            raise ValueError("m must be at least 1")
        self.m = m
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    e = tuple(e)
                    if len(e) != 2 * m - 1:
                        raise ValueError("exponent vector has wrong arity")
                    self.terms[e] = self.terms.get(e, 0) + c
            self.terms = {e: c for e, c in self.terms.items() if c}

    @property
    def arity(self):
        return 2 * self.m - 1

    # constructors
    @classmethod
    def const(cls, m, c):
        return cls(m, {(0,) * (2 * m - 1): c} if c else None)

    @classmethod
    def zero(cls, m):
        return cls(m)

    @classmethod
    def one(cls, m):
        return cls.const(m, 1)

    @classmethod
    def a(cls, m, i):
        if not 1 <= i <= m:
            raise IndexError(f"a_{i} not in ring with m={m}")
        e = [0] * (2 * m - 1)
        e[i - 1] = 1
        return cls(m, {tuple(e): 1})

    @classmethod
    def b(cls, m, j):
        if not 1 <= j <= m - 1:
            raise IndexError(f"b_{j} not in ring with m={m}")
        e = [0] * (2 * m - 1)
        e[m + j - 1] = 1
        return cls(m, {tuple(e): 1})

    @classmethod
    def linear(cls, m, a_idx=None, b_idx=None, c=0):
        """a_{a_idx} + b_{b_idx} + c, either index may be omitted."""
        e0 = (0,) * (2 * m - 1)
        terms = {}
        if c:
            terms[e0] = c
        if a_idx is not None:
            e = list(e0)
            e[a_idx - 1] = 1
            terms[tuple(e)] = 1
        if b_idx is not None:
            if not 1 <= b_idx <= m - 1:
                raise IndexError(f"b_{b_idx} not in ring with m={m}")
            e = list(e0)
            e[m + b_idx - 1] = 1
            terms[tuple(e)] = terms.get(tuple(e), 0) + 1
        return cls(m, terms)

    def _check(self, other):
        if isinstance(other, int):
            return MultiPoly.const(self.m, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if other.m != self.m:
            raise ValueError(f"ring mismatch: m={self.m} vs m={other.m}")
        return other

    # arithmetic
    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return _raw(self.m, out)

    __radd__ = __add__

    def __neg__(self):
        return _raw(self.m, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return _raw(self.m, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = MultiPoly.one(self.m)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(self.m, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def leading(self):
        """Lex-greatest exponent and its coefficient."""
        e = max(self.terms)
        return e, self.terms[e]

    def exact_div(self, other):
        """Quotient self / other, raising ArithmeticError unless it is exact."""
        other = self._check(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        le, lc = other.leading()
        rem = MultiPoly(self.m, self.terms)
        quot = {}
        while rem.terms:
            e, c = rem.leading()
            diff = tuple(x - y for x, y in zip(e, le))
            if min(diff) < 0 or c % lc:
                raise ArithmeticError("multivariate division is not exact")
            t = _raw(self.m, {diff: c // lc})
            quot[diff] = quot.get(diff, 0) + c // lc
            rem = rem - t * other
        return MultiPoly(self.m, quot)

    # substitutions
    def substitute(self, mapping):
        """Replace variables by polynomials.

        ``mapping`` has keys ``("a", i)`` or ``("b", j)`` and MultiPoly values
        in the same ring; unmapped variables are left alone.
        """
        m = self.m
        index = {}
        for (kind, idx), poly in mapping.items():
            pos = idx - 1 if kind == "a" else m + idx - 1
            index[pos] = self._check(poly)
        out = MultiPoly.zero(m)
        cache = {}
        for e, c in self.terms.items():
            kept = list(e)
            term = MultiPoly.const(m, c)
            for pos, poly in index.items():
                k = e[pos]
                if k:
                    kept[pos] = 0
                    key = (pos, k)
                    if key not in cache:
                        cache[key] = poly ** k
                    term = term * cache[key]
            out = out + term * _raw(m, {tuple(kept): 1})
        return out

    def substitute_b(self, rules):
        """Apply b_j -> 1 - a_r for each ``j: r`` in ``rules``."""
        m = self.m
        mapping = {("b", j): MultiPoly.const(m, 1) - MultiPoly.a(m, r) for j, r in rules.items()}
        return self.substitute(mapping)

    def shift_b(self, upto=None):
        """Simultaneous substitution b_l <- b_{l+1}.

        With ``upto`` set only b_1..b_upto are shifted; otherwise every b that
        occurs is shifted, and b_{m-1} occurring is an error.
        """
        m = self.m
        out = {}
        for e, c in self.terms.items():
            bs = list(e[m:])
            nb = [0] * (m - 1)
            for l, k in enumerate(bs, start=1):
                if not k:
                    continue
                if upto is not None and l > upto:
                    nb[l - 1] += k
                    continue
                if l + 1 > m - 1:
                    raise IndexError(f"shift of b_{l} leaves the ring m={m}")
                nb[l] += k
            ne = e[:m] + tuple(nb)
            out[ne] = out.get(ne, 0) + c
        return MultiPoly(m, out)

    def variables(self):
        names = set()
        m = self.m
        for e in self.terms:
            for pos, k in enumerate(e):
                if k:
                    names.add(("a", pos + 1) if pos < m else ("b", pos - m + 1))
        return names

    def evaluate(self, values):
        """Evaluate with ``values`` mapping ("a", i)/("b", j) to numbers."""
        m = self.m
        total = 0
        for e, c in self.terms.items():
            t = c
            for pos, k in enumerate(e):
                if k:
                    key = ("a", pos + 1) if pos < m else ("b", pos - m + 1)
                    t *= values[key] ** k
            total += t
        return total

    def embed(self, m):
        """The same polynomial in a ring with at least as many variables."""
        if m < self.m:
            raise ValueError("cannot embed into a smaller ring")
        out = {}
        for e, c in self.terms.items():
            a = list(e[: self.m]) + [0] * (m - self.m)
            b = list(e[self.m:]) + [0] * (m - self.m)
            out[tuple(a + b)] = c
        return _raw(m, out)

    # rendering
    def _sorted_terms(self):
        m = self.m

        def key(item):
            e = item[0]
            return (-sum(e), tuple(-x for x in e))

        return sorted(self.terms.items(), key=key)

    def format(self, latex=False):
        if not self.terms:
            return "0"
        m = self.m
        parts = []
        for e, c in self._sorted_terms():
            factors = []
            for pos, k in enumerate(e):
                if not k:
                    continue
                if pos < m:
                    name = f"a_{{{pos + 1}}}" if latex else f"a_{pos + 1}"
                else:
                    name = f"b_{{{pos - m + 1}}}" if latex else f"b_{pos - m + 1}"
                if k > 1:
                    name += f"^{{{k}}}" if latex else f"^{k}"
                factors.append(name)
            a = abs(c)
            if not factors:
                body = str(a)
            elif a == 1:
                body = (" " if latex else "*").join(factors)
            else:
                body = (" " if latex else "*").join([str(a)] + factors)
            parts.append(("-" if c < 0 else "+", body))
        s, body = parts[0]
        out = ("-" if s == "-" else "") + body
        for s, body in parts[1:]:
            out += f" {s} {body}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"MultiPoly(m={self.m}, {self.format()})"

    def to_json(self):
        return {
            "m": self.m,
            "terms": [{"exp": list(e), "coeff": c} for e, c in self._sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["m"], {tuple(t["exp"]): t["coeff"] for t in obj["terms"]})


def _raw(m, terms):
    p = MultiPoly.__new__(MultiPoly)
    p.m = m
    p.terms = terms
    return p


def product(factors, m):
    out = MultiPoly.one(m)
    for f in factors:
        out = out * f
    return out
