"""Configurations of letters 1..m inside the fermionic rows of eta-tilde.

A configuration is stored as a mapping cell -> letter.  Good configurations
are enumerated from their path description: letter i with count k_i sits in
columns 1..k_i at rows i >= i_1 >= i_2 >= ..., and the counts k_i + 1 form a
permutation of 1..m.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import factorial

from ..algebra.linalg import perm_sign
from ..algebra.multipoly import MultiPoly
from ..algebra.ratfunc import AlphaRational
from ..combinatorics import (
    Composition,
    arm_leg_circ,
    ell_nm,
    hook_d,
    tilde,
)
from ..nonsym import critical_weight, enumerate_admissible
from .triangular import (
    enumerate_V,
    substitution_rules,
    tableau_factors,
    tableau_sign,
)


def default_N(sp):
    """N = l_{n,m} + m, the length of Lambda_min (at least 1)."""
    return max(ell_nm(sp.degree, sp.m) + sp.m, 1)


def eta_tilde(sp, N=None):
    return tilde(sp, default_N(sp) if N is None else N)


# hook linearization


@dataclass
class HookLinearization:
    """d(i, j) = a_i + b_j on the fermionic rows of eta-tilde.

    ``a[i-1]`` and ``b[j-1]`` are AlphaRationals; ``v(k)`` counts the rows of
    Lambda^s of length at most k (positive rows only; zero rows would shift
    every a_i and b_j by opposite constants and cancel in each use).
    """

    sp: object
    N: int
    eta: Composition
    a: list = field(default_factory=list)
    b: list = field(default_factory=list)

    @classmethod
    def of(cls, sp, N=None):
        N = default_N(sp) if N is None else N
        eta = tilde(sp, N)
        m = sp.m
        lin = cls(sp, N, eta)
        sym = sp.symmetric.parts

        def v(k):
            return sum(1 for p in sym if p <= k)

        lin.v = v
        for i in range(1, m + 1):
            lin.a.append(AlphaRational.linear(eta[i], v(eta[i]) + i))
        top = max((eta[i] for i in range(1, m + 1)), default=0) + 1
        for j in range(1, top + 1):
            lp = eta.leg_upper((m, j)) if m else 0
            lin.b.append(AlphaRational.linear(1 - j, lp - m - v(j - 1) + 1))
        return lin

    def fermionic_cells(self):
        for i in range(1, self.sp.m + 1):
            for j in range(1, self.eta[i] + 1):
                yield (i, j)

    def check(self):
        """d(i,j) = a_i + b_j on every fermionic cell, and b_{eta_j+1} = 1 - a_j."""
        one = AlphaRational.from_int(1)
        for i, j in self.fermionic_cells():
            if hook_d(self.eta, (i, j)) != self.a[i - 1] + self.b[j - 1]:
                return False
        return all(self.b[self.eta[j]] == one - self.a[j - 1] for j in range(1, self.sp.m + 1))


# good configurations


@dataclass(frozen=True)
class GoodConfiguration:
    m: int
    rows: tuple[tuple[int, ...], ...]  # rows[i-1] = (i_1, ..., i_{k_i}) for letter i

    def counts(self):
        return tuple(len(r) for r in self.rows)

    def cells(self):
        """cell -> letter."""
        return {(r, c): i for i, path in enumerate(self.rows, start=1) for c, r in enumerate(path, start=1)}

    def sign(self):
        return config_sign(self.counts(), self.m)

    def critical_cells(self):
        return config_critical_cells(self.cells())

    def format(self):
        return " ".join(f"{i}:" + ",".join(map(str, path)) for i, path in enumerate(self.rows, start=1))


def config_sign(counts, m):
    """sgn([m - |P|_1, ..., m - |P|_m])."""
    return perm_sign([m - k for k in counts])


def config_critical_cells(cells):
    """0-critical cells: same letter on the left, or letter i at (i, 1)."""
    out = []
    for (r, c), letter in cells.items():
        if c == 1:
            if letter == r:
                out.append((r, c))
        elif cells.get((r, c - 1)) == letter:
            out.append((r, c))
    return sorted(out)


def good_configs(sp, N=None):
    """Good configurations of eta-tilde via the path characterization."""
    eta = eta_tilde(sp, N)
    m = sp.m
    lengths = [eta[i] for i in range(1, m + 1)]
    occupied = set()
    rows = [None] * m
    used_counts = set()

    def paths(letter, k):
        # weakly decreasing rows starting at <= letter, each cell inside eta
        out = []

        def rec(prefix, top):
            c = len(prefix) + 1
            if c > k:
                out.append(tuple(prefix))
                return
            for r in range(top, 0, -1):
                if lengths[r - 1] >= c and (r, c) not in occupied:
                    prefix.append(r)
                    rec(prefix, r)
                    prefix.pop()

        rec([], letter)
        return out

    def rec(letter):
        if letter > m:
            yield GoodConfiguration(m, tuple(rows))
            return
        for k in range(m):
            if k in used_counts:
                continue
            used_counts.add(k)
            for path in paths(letter, k):
                cells = [(r, c) for c, r in enumerate(path, start=1)]
                occupied.update(cells)
                rows[letter - 1] = path
                yield from rec(letter + 1)
                occupied.difference_update(cells)
            used_counts.discard(k)

    yield from rec(1)


def free_weight(cells, m):
    out = MultiPoly.one(m)
    for r, c in config_critical_cells(cells):
        out = out * MultiPoly.linear(m, r, c)
    return out


def identity1_rules(sp, N=None):
    """b_{eta_i + 1} -> 1 - a_i whenever eta_i < m - 1, as {j: i}."""
    eta = eta_tilde(sp, N)
    m = sp.m
    return {eta[i] + 1: i for i in range(1, m + 1) if eta[i] < m - 1}


def identity1_lhs(m):
    """prod_{j < i} (a_j - a_i - 1)."""
    out = MultiPoly.one(m)
    for i in range(1, m + 1):
        for j in range(1, i):
            out = out * (MultiPoly.linear(m, j, None, -1) - MultiPoly.a(m, i))
    return out


def identity1_sum(sp, N=None):
    m = max(sp.m, 1)
    acc = {}
    for P in good_configs(sp, N):
        w = free_weight(P.cells(), m) * P.sign()
        for e, c in w.terms.items():
            acc[e] = acc.get(e, 0) + c
    return MultiPoly(m, acc).substitute_b(identity1_rules(sp, N))


def identity1_check(sp, N=None):
    """Identity 1 for the fermionic part of ``sp``: (holds, {"lhs", "rhs"})."""
    m = max(sp.m, 1)
    lhs = identity1_lhs(m)
    rhs = identity1_sum(sp, N)
    return lhs == rhs, {"lhs": lhs, "rhs": rhs}


def gamma_of(sp, N=None):
    """gamma_j = 1 iff j - 1 is a part of the fermionic portion of eta-tilde."""
    eta = eta_tilde(sp, N)
    parts = {eta[i] for i in range(1, sp.m + 1)}
    return tuple(1 if j - 1 in parts else 0 for j in range(1, sp.m))


def config_to_tableau(P):
    """lambda^{(k_i + 1)} = (i, i_1, ..., i_{k_i})."""
    out = [None] * P.m
    for i, path in enumerate(P.rows, start=1):
        out[len(path)] = (i,) + tuple(path)
    return tuple(out)


def tableau_to_config(t):
    m = len(t)
    rows = [None] * m
    for lam in t:
        rows[lam[0] - 1] = tuple(lam[1:])
    return GoodConfiguration(m, tuple(rows))


def bijection_check(sp, N=None):
    """The map G -> V_gamma is a bijection matching signs and critical factors.

    Returns ``(holds, counterexample_or_None)``.
    """
    m = sp.m
    if m == 0:
        return True, None
    gamma = gamma_of(sp, N)
    if identity1_rules(sp, N) != substitution_rules(gamma):
        return False, ("substitution rules differ", identity1_rules(sp, N), substitution_rules(gamma))
    twist = (-1) ** (m * (m - 1) // 2)
    images = set()
    for P in good_configs(sp, N):
        t = config_to_tableau(P)
        if tableau_to_config(t) != P:
            return False, P
        if tableau_sign(t) != twist * P.sign():
            return False, P
        factors = sorted((r, c) for r, c in P.critical_cells())
        # cell (r, c) of P carries letter i and corresponds to lambda_{c+1}: factor a_r + b_c
        if factors != tableau_factors(t):
            return False, P
        if t in images:
            return False, P
        images.add(t)
    if images != set(enumerate_V(gamma)):
        return False, ("image mismatch", len(images))
    return True, None


# the reduction from contributing tableaux to good configurations


def _hooks(eta):
    return {s: hook_d(eta, s) for s in eta.cells()}


def config_weight(cells, hooks):
    out = AlphaRational.from_int(1)
    for s in config_critical_cells(cells):
        out = out * hooks[s]
    return out


def _contributing_evaluation(ev, m, ell):
    """(k_1..k_m, 1^ell, 0...) with {k_i} = {0..m-1}; zeros only appear when N > ell + m."""
    head, ones, rest = ev[:m], ev[m:m + ell], ev[m + ell:]
    return all(x == 1 for x in ones) and not any(rest) and sorted(head) == list(range(m))


def contributing_tableaux(sp, N=None):
    eta = eta_tilde(sp, N)
    ell = ell_nm(sp.degree, sp.m)
    for T in enumerate_admissible(eta):
        if _contributing_evaluation(T.evaluation(), sp.m, ell):
            yield T


def restriction(T, m):
    """T_(m): the cells holding letters 1..m, as a frozenset of (cell, letter)."""
    return frozenset((s, c) for s, c in T.entries().items() if c <= m)


def is_good_config(cells, m):
    """Every letter i occupies columns 1..|P|_i."""
    cols = {i: [] for i in range(1, m + 1)}
    for (r, c), letter in cells.items():
        cols[letter].append(c)
    return all(sorted(v) == list(range(1, len(v) + 1)) for v in cols.values())


def bad_involution(cells, m):
    """Swap the tail of letter a (right of column j) to letter b, per the reduction lemma."""
    cols = {i: set() for i in range(1, m + 1)}
    for (r, c), letter in cells.items():
        cols[letter].add(c)
    counts = {i: len(v) for i, v in cols.items()}
    width = max((c for (_, c) in cells), default=0)
    for j in range(1, width + 1):
        cands = [a for a in range(1, m + 1) if j not in cols[a] and any(c > j for c in cols[a])]
        if cands:
            a = min(cands, key=lambda x: counts[x])
            b = next(x for x in range(1, m + 1) if counts[x] == j - 1)
            out = dict(cells)
            for (r, c), letter in cells.items():
                if letter == a and c > j:
                    out[(r, c)] = b
            return out
    raise ValueError("configuration is good")


def verify_config_reduction(sp, N=None):
    """Checks (i)-(iv) of the reduction from tableaux to good configurations.

    Returns ``(holds, report)``, report keys ``S_P_size``, ``d_T_factorization``,
    ``sum_C_equals_sum_G``, ``bad_involution``, ``good_characterization``.
    """
    N = default_N(sp) if N is None else N
    m = sp.m
    eta = tilde(sp, N)
    hooks = _hooks(eta)
    ls = len(sp.symmetric)
    first_col = AlphaRational.from_int(1)
    for i in range(N - ls + 1, N + 1):
        first_col = first_col * hooks[(i, 1)]
    groups = {}
    fact_ok = True
    for T in contributing_tableaux(sp, N):
        key = restriction(T, m)
        groups.setdefault(key, 0)
        groups[key] += 1
        if critical_weight(T) != config_weight(dict(key), hooks) * first_col:
            fact_ok = False
    target = factorial(ell_nm(sp.degree, m) - ls)
    size_ok = all(n == target for n in groups.values())

    C = {key: dict(key) for key in groups}
    sum_C = AlphaRational.from_int(0)
    for cells in C.values():
        counts = [sum(1 for v in cells.values() if v == i) for i in range(1, m + 1)]
        sum_C = sum_C + config_weight(cells, hooks) * config_sign(counts, m)
    G = list(good_configs(sp, N))
    sum_G = AlphaRational.from_int(0)
    for P in G:
        sum_G = sum_G + config_weight(P.cells(), hooks) * P.sign()
    good_in_C = {key for key, cells in C.items() if is_good_config(cells, m)}
    G_keys = {frozenset(P.cells().items()) for P in G}

    inv_ok = True
    for key, cells in C.items():
        if key in good_in_C:
            continue
        other = bad_involution(cells, m)
        okey = frozenset(other.items())
        counts = [sum(1 for v in cells.values() if v == i) for i in range(1, m + 1)]
        ocounts = [sum(1 for v in other.values() if v == i) for i in range(1, m + 1)]
        if not (
            okey in C
            and okey not in good_in_C
            and frozenset(bad_involution(other, m).items()) == key
            and config_sign(ocounts, m) == -config_sign(counts, m)
            and config_weight(other, hooks) == config_weight(cells, hooks)
        ):
            inv_ok = False
            break
    report = {
        "S_P_size": size_ok,
        "d_T_factorization": fact_ok,
        "sum_C_equals_sum_G": sum_C == sum_G,
        "bad_involution": inv_ok,
        "good_characterization": good_in_C == G_keys,
    }
    return all(report.values()), report


# c_min from the good-configuration sum


def circ_product(sp):
    out = AlphaRational.from_int(1)
    for a, l in arm_leg_circ(sp).values():
        out = out * AlphaRational.linear(a, l + 1)
    return out


def c_min_via_configurations(sp, N=None):
    """c_min = (-1)^{m(m-1)/2} sum_G sgn(P) d_P / (prod d(i, eta_j+1) * prod over Lambda-circle)."""
    N = default_N(sp) if N is None else N
    m = sp.m
    eta = tilde(sp, N)
    hooks = {}

    def h(s):
        if s not in hooks:
            hooks[s] = hook_d(eta, s)
        return hooks[s]

    total = AlphaRational.from_int(0)
    for P in good_configs(sp, N):
        w = AlphaRational.from_int(P.sign())
        for s in P.critical_cells():
            w = w * h(s)
        total = total + w
    den = circ_product(sp)
    for i in range(1, m + 1):
        for j in range(1, i):
            den = den * h((i, eta[j] + 1))
    return total * ((-1) ** (m * (m - 1) // 2)) / den


def good_config_count(sp, N=None):
    return sum(1 for _ in good_configs(sp, N))


def count_by_sign(sp, N=None):
    return Counter(P.sign() for P in good_configs(sp, N))
