"""Polynomials in commuting x_1..x_N and anticommuting theta_1..theta_N.

A monomial key is ``(thetas, exps)``: ``thetas`` a strictly increasing tuple
of 1-based indices, ``exps`` a length-N exponent tuple.  The sign coming from
reordering thetas is always folded into the coefficient.
"""

from __future__ import annotations

from collections import Counter
from itertools import permutations
from math import factorial

from .linalg import perm_sign
from .ratfunc import AlphaRational, R_ZERO


def sort_thetas(indices):
    """Canonical order of a theta word: returns (sorted tuple, sign), sign 0 if a theta repeats."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return (), 0
    return tuple(sorted(idx)), perm_sign(idx)


def _coeff(c):
    if isinstance(c, AlphaRational):
        return c
    return AlphaRational(R_ZERO.num) + c


class SuperPolynomial:
    __slots__ = ("N", "terms")

    def __init__(self, N, terms=None):
        if N < 0:
            raise ValueError("negative variable count")
        self.N = N
        self.terms = {}
        if terms:
            for (th, ex), c in terms.items():
                self._add_term(tuple(th), tuple(ex), _coeff(c))

    def _add_term(self, th, ex, c):
        if len(ex) != self.N:
            raise ValueError("exponent vector length differs from N")
        key = (th, ex)
        v = self.terms.get(key)
        v = c if v is None else v + c
        if v.is_zero():
            self.terms.pop(key, None)
        else:
            self.terms[key] = v

    @classmethod
    def monomial(cls, N, thetas=(), exps=None, coeff=1):
        exps = tuple(exps) if exps is not None else (0,) * N
        th, sign = sort_thetas(thetas)
        p = cls(N)
        if sign:
            p._add_term(th, exps, _coeff(coeff) * sign)
        return p

    @classmethod
    def constant(cls, N, c=1):
        return cls.monomial(N, (), None, c)

    @classmethod
    def theta(cls, N, i):
        return cls.monomial(N, (i,))

    @classmethod
    def x(cls, N, i, power=1):
        e = [0] * N
        e[i - 1] = power
        return cls.monomial(N, (), e)

    def _check(self, other):
        if isinstance(other, SuperPolynomial):
            if other.N != self.N:
                raise ValueError(f"mismatched variable counts {self.N} and {other.N}")
            return other
        if isinstance(other, (int, AlphaRational)):
            return SuperPolynomial.constant(self.N, other)
        return NotImplemented

    def copy(self):
        p = SuperPolynomial(self.N)
        p.terms = dict(self.terms)
        return p

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.copy()
        for (th, ex), c in other.terms.items():
            p._add_term(th, ex, c)
        return p

    __radd__ = __add__

    def __neg__(self):
        p = SuperPolynomial(self.N)
        p.terms = {k: -c for k, c in self.terms.items()}
        return p

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def scale(self, c):
        c = _coeff(c)
        p = SuperPolynomial(self.N)
        if c.is_zero():
            return p
        p.terms = {k: v * c for k, v in self.terms.items()}
        return p

    def __mul__(self, other):
        if isinstance(other, (int, AlphaRational)):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = SuperPolynomial(self.N)
        for (th1, ex1), c1 in self.terms.items():
            s1 = set(th1)
            for (th2, ex2), c2 in other.terms.items():
                if s1.intersection(th2):
                    continue
                th, sign = sort_thetas(th1 + th2)
                ex = tuple(a + b for a, b in zip(ex1, ex2))
                c = c1 * c2
                p._add_term(th, ex, c if sign > 0 else -c)
        return p

    def __rmul__(self, other):
        if isinstance(other, (int, AlphaRational)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, AlphaRational)):
            other = SuperPolynomial.constant(self.N, other)
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    def __hash__(self):
        return hash((self.N, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def coefficient(self, thetas, exps):
        th, sign = sort_thetas(thetas)
        if not sign:
            return R_ZERO
        c = self.terms.get((th, tuple(exps)))
        if c is None:
            return R_ZERO
        return c if sign > 0 else -c

    def fermionic_degrees(self):
        return {len(th) for th, _ in self.terms}

    def map_coefficients(self, fn):
        p = SuperPolynomial(self.N)
        for k, c in self.terms.items():
            v = fn(c)
            if not v.is_zero():
                p.terms[k] = v
        return p

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def format(self, latex=False):
        if not self.terms:
            return "0"
        out = []
        for (th, ex), c in self.sorted_terms():
            factors = []
            if th:
                if latex:
                    factors.append("".join(rf"\theta_{{{i}}}" for i in th))
                else:
                    factors.append("theta[" + ",".join(map(str, th)) + "]")
            for i, e in enumerate(ex, start=1):
                if e == 1:
                    factors.append(f"x_{{{i}}}" if latex else f"x{i}")
                elif e > 1:
                    factors.append(f"x_{{{i}}}^{{{e}}}" if latex else f"x{i}^{e}")
            cs = c.format(latex)
            if latex:
                out.append(" ".join([f"\\left({cs}\\right)"] + factors) if factors else cs)
            else:
                out.append(" * ".join([f"({cs})"] + factors) if factors else f"({cs})")
        return " + ".join(out)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"SuperPolynomial(N={self.N}, {len(self.terms)} terms)"

    def to_json(self):
        return {
            "N": self.N,
            "terms": [
                {"theta": list(th), "exp": list(ex), **c.to_json()}
                for (th, ex), c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, obj):
        p = cls(obj["N"])
        for t in obj["terms"]:
            p._add_term(tuple(t["theta"]), tuple(t["exp"]), AlphaRational.from_json(t))
        return p


def superpoly_mul(f, g):
    return f * g


def _act_on_key(sigma, th, ex):
    # K_sigma: x_i -> x_{sigma(i)}, theta_i -> theta_{sigma(i)}
    N = len(ex)
    new_ex = [0] * N
    for i, e in enumerate(ex):
        if e:
            new_ex[sigma[i] - 1] = e
    new_th, sign = sort_thetas([sigma[i - 1] for i in th])
    return new_th, tuple(new_ex), sign


def apply_K(sigma, f):
    """Apply the simultaneous variable permutation K_sigma.

    ``sigma`` is a tuple of images of 1..N (one-line notation).
    """
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, f.N + 1)):
        raise ValueError("sigma is not a permutation of 1..N")
    p = SuperPolynomial(f.N)
    for (th, ex), c in f.terms.items():
        nth, nex, sign = _act_on_key(sigma, th, ex)
        p._add_term(nth, nex, c if sign > 0 else -c)
    return p


def compose(sigma, tau):
    """(sigma tau)(i) = sigma(tau(i))."""
    return tuple(sigma[t - 1] for t in tau)


def symmetrize(f):
    """Direct sum of K_w f over all w in S_N."""
    p = SuperPolynomial(f.N)
    for w in permutations(range(1, f.N + 1)):
        for (th, ex), c in f.terms.items():
            nth, nex, sign = _act_on_key(w, th, ex)
            p._add_term(nth, nex, c if sign > 0 else -c)
    return p


def _orbit_canonical(th, ex):
    """Where a monomial's S_N orbit meets theta_1..theta_m x^Omega.

    Returns ``(fermionic, symmetric, weight)``: the superpartition read off
    the orbit and the signed number of permutations w with
    K_w(theta_th x^ex) = +-theta_1..theta_m x^Omega; weight 0 when the orbit
    sum vanishes (two thetas sharing an exponent).
    """
    m = len(th)
    f_exps = [ex[i - 1] for i in th]
    if len(set(f_exps)) != m:
        return None, None, 0
    # sort theta positions by decreasing exponent; sign of that reordering
    order = sorted(range(m), key=lambda k: -f_exps[k])
    sign = perm_sign(order)
    thset = set(th)
    rest = [ex[i] for i in range(len(ex)) if (i + 1) not in thset]
    stab = 1
    for mult in Counter(rest).values():
        stab *= factorial(mult)
    fermionic = tuple(f_exps[k] for k in order)
    symmetric = tuple(sorted(rest, reverse=True))
    return fermionic, symmetric, sign * stab


def symmetrize_canonical(f):
    """Coefficients of theta_1..theta_m x^Omega in symmetrize(f), keyed by Omega.

    Orbit-stabilizer shortcut: each term of ``f`` contributes to exactly one
    canonical monomial, with multiplicity the size of a stabilizer coset.
    Keys are ``(fermionic, symmetric)`` with the symmetric part zero-padded to
    ``N - m`` entries.
    """
    out = {}
    for (th, ex), c in f.terms.items():
        fer, sym, weight = _orbit_canonical(th, ex)
        if not weight:
            continue
        key = (fer, sym)
        v = c * weight
        prev = out.get(key)
        v = v if prev is None else prev + v
        if v.is_zero():
            out.pop(key, None)
        else:
            out[key] = v
    return out


def orbit_sum(N, fermionic, symmetric, coeff=1):
    """Sum over the distinct orbit elements of theta_1..theta_m x^(fermionic, symmetric).

    Equals (1 / |stabilizer|) * symmetrize(theta_1..theta_m x^Lambda), built
    without visiting all of S_N.
    """
    m = len(fermionic)
    sym = list(symmetric) + [0] * (N - m - len(symmetric))
    if len(sym) != N - m:
        raise ValueError("superpartition does not fit in N variables")
    c = _coeff(coeff)
    p = SuperPolynomial(N)
    positions = range(1, N + 1)
    for fer_pos in permutations(positions, m):
        rest_pos = [i for i in positions if i not in fer_pos]
        th, sign = sort_thetas(fer_pos)
        for arrangement in _distinct_arrangements(sym):
            ex = [0] * N
            for pos, e in zip(fer_pos, fermionic):
                ex[pos - 1] = e
            for pos, e in zip(rest_pos, arrangement):
                ex[pos - 1] = e
            p._add_term(th, tuple(ex), c if sign > 0 else -c)
    return p


def _distinct_arrangements(values):
    counts = Counter(values)
    keys = sorted(counts)
    n = len(values)
    out = []

    def rec(prefix):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                prefix.append(k)
                rec(prefix)
                prefix.pop()
                counts[k] += 1

    rec([])
    return out
