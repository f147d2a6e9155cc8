"""Triangular tableaux: the sets V_gamma, their weighted sums, the matrix M(gamma),
the Gessel-Viennot involution and the involution used for general gamma."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from ..algebra.linalg import det, perm_sign
from ..algebra.multipoly import MultiPoly


def parse_gamma(text):
    """A bit string such as ``"101"`` (empty for m = 1)."""
    text = text.strip()
    if any(ch not in "01" for ch in text):
        raise ValueError(f"gamma must be a 0/1 string, got {text!r}")
    return tuple(int(ch) for ch in text)


def gamma_str(gamma):
    return "".join(map(str, gamma))


def ones_before(gamma, j):
    """#{k <= j : gamma_k = 1}."""
    return sum(gamma[:j])


def all_gammas(m):
    for bits in range(2 ** (m - 1)):
        yield tuple((bits >> (m - 2 - k)) & 1 for k in range(m - 1))


def substitution_rules(gamma):
    """b_j -> 1 - a_r for every j with gamma_j = 1, r the number of ones up to j."""
    return {j: ones_before(gamma, j) for j in range(1, len(gamma) + 1) if gamma[j - 1]}


def is_compatible(lam, gamma, m):
    if any(not 1 <= p <= m for p in lam):
        return False
    if any(lam[k] < lam[k + 1] for k in range(len(lam) - 1)):
        return False
    return all(lam[j] > ones_before(gamma, j) for j in range(1, len(lam)))


@lru_cache(maxsize=None)
def compatible_partitions(length, first, gamma, m):
    """Partitions of the given length and first part, parts <= m, compatible with gamma."""
    out = []

    def rec(prefix):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        j = len(prefix)  # next part is lambda_{j+1}
        lo = ones_before(gamma, j) + 1
        for p in range(prefix[-1], lo - 1, -1):
            prefix.append(p)
            rec(prefix)
            prefix.pop()

    if 1 <= first <= m:
        rec([first])
    return tuple(out)


def critical_entries(lam):
    """Positions j >= 2 with lambda_j = lambda_{j-1}."""
    return [j for j in range(2, len(lam) + 1) if lam[j - 1] == lam[j - 2]]


def weight_factors(lam):
    """Critical factors (a index, b index) of a single partition."""
    return [(lam[j - 1], j - 1) for j in critical_entries(lam)]


def weight_poly(factors, m):
    out = MultiPoly.one(m)
    for a, b in factors:
        out = out * MultiPoly.linear(m, a, b)
    return out


def partition_weight(lam, m):
    return weight_poly(weight_factors(lam), m)


def tableau_sign(t):
    return perm_sign([lam[0] for lam in t])


def tableau_factors(t):
    return sorted(f for lam in t for f in weight_factors(lam))


def tableau_weight(t, m, rules=None):
    w = weight_poly(tableau_factors(t), m) * tableau_sign(t)
    if rules:
        w = w.substitute_b(rules)
    return w


def is_nonintersecting(t):
    m = len(t)
    for j in range(1, m + 1):
        col = [t[i - 1][j - 1] for i in range(j, m + 1)]
        if len(col) != len(set(col)):
            return False
    return True


def enumerate_V(gamma):
    """Non-intersecting triangular tableaux compatible with gamma."""
    gamma = tuple(gamma)
    m = len(gamma) + 1
    rows = [[lam for first in range(1, m + 1) for lam in compatible_partitions(i, first, gamma, m)]
            for i in range(1, m + 1)]
    chosen = []
    columns = [set() for _ in range(m)]

    def rec(i):
        if i == m:
            yield tuple(chosen)
            return
        for lam in rows[i]:
            if any(lam[j] in columns[j] for j in range(i + 1)):
                continue
            for j in range(i + 1):
                columns[j].add(lam[j])
            chosen.append(lam)
            yield from rec(i + 1)
            chosen.pop()
            for j in range(i + 1):
                columns[j].discard(lam[j])

    yield from rec(0)


def enumerate_triangular(gamma):
    """All triangular tableaux compatible with gamma, intersecting or not."""
    gamma = tuple(gamma)
    m = len(gamma) + 1
    chosen = []
    firsts = set()

    def rec(i):
        if i == m:
            yield tuple(chosen)
            return
        for first in range(1, m + 1):
            if first in firsts:
                continue
            firsts.add(first)
            for lam in compatible_partitions(i + 1, first, gamma, m):
                chosen.append(lam)
                yield from rec(i + 1)
                chosen.pop()
            firsts.discard(first)

    yield from rec(0)


def sigma_free(gamma):
    """Sigma(gamma) with a, b left free."""
    m = len(gamma) + 1
    acc = Counter()
    for t in enumerate_V(gamma):
        acc[tuple(tableau_factors(t))] += tableau_sign(t)
    return expand_weights(acc, m)


def sigma_gamma(gamma):
    """Sigma(gamma) with b_j := 1 - a_r applied wherever gamma_j = 1."""
    gamma = tuple(gamma)
    return sigma_free(gamma).substitute_b(substitution_rules(gamma))


def sigma_pi(gamma):
    """Weighted sum over all (possibly intersecting) triangular tableaux, free a, b."""
    m = len(gamma) + 1
    acc = Counter()
    for t in enumerate_triangular(gamma):
        acc[tuple(tableau_factors(t))] += tableau_sign(t)
    return expand_weights(acc, m)


def expand_weights(acc, m):
    """Sum of c * prod(a_x + b_y) over a Counter of sorted factor tuples.

    Products of shared prefixes are cached and the sum is accumulated in
    place, which keeps m = 5 sweeps (tens of thousands of tableaux) fast.
    """
    cache = {(): MultiPoly.one(m)}

    def prod_of(factors):
        got = cache.get(factors)
        if got is None:
            a, b = factors[-1]
            got = prod_of(factors[:-1]) * MultiPoly.linear(m, a, b)
            cache[factors] = got
        return got

    out = {}
    for factors, c in acc.items():
        if not c:
            continue
        for e, v in prod_of(factors).terms.items():
            out[e] = out.get(e, 0) + c * v
    return MultiPoly(m, out)


def vandermonde_shift(m):
    """prod_{1 <= j < i <= m} (a_i + 1 - a_j)."""
    out = MultiPoly.one(m)
    for i in range(1, m + 1):
        for j in range(1, i):
            out = out * (MultiPoly.a(m, i) + 1 - MultiPoly.a(m, j))
    return out


def P_entry(j, i, gamma):
    m = len(gamma) + 1
    out = MultiPoly.zero(m)
    for lam in compatible_partitions(i, j, tuple(gamma), m):
        out = out + partition_weight(lam, m)
    return out


def P_matrix(gamma):
    """M(gamma) with entry (j, i) the weighted count of length-i partitions with first part j."""
    gamma = tuple(gamma)
    m = len(gamma) + 1
    return [[P_entry(j, i, gamma) for i in range(1, m + 1)] for j in range(1, m + 1)]


def det_check(gamma):
    """Sigma(gamma) = Sigma_pi(gamma) = det M(gamma), all with free indeterminates."""
    gamma = tuple(gamma)
    m = len(gamma) + 1
    d = det(P_matrix(gamma), one=MultiPoly.one(m))
    s = sigma_free(gamma)
    sp = sigma_pi(gamma)
    return s == d and sp == d, {"sigma": s, "sigma_pi": sp, "det": d}


# Gessel-Viennot involution on intersecting tableaux


def first_repeat(t):
    """(j_R, i_R, k_R, x_R) for an intersecting tableau, None if non-intersecting."""
    m = len(t)
    for j in range(1, m + 1):
        col = {}
        for i in range(j, m + 1):
            col.setdefault(t[i - 1][j - 1], []).append(i)
        repeated = [rows for rows in col.values() if len(rows) > 1]
        if repeated:
            rows = min(repeated, key=lambda r: r[0])
            x = t[rows[0] - 1][j - 1]
            return j, rows[0], rows[1], x
    return None


def lgv_involution(t):
    """Swap rows i_R and k_R in all columns left of j_R."""
    found = first_repeat(t)
    if found is None:
        raise ValueError("tableau is non-intersecting")
    j, i, k, _ = found
    rows = [list(lam) for lam in t]
    for c in range(j - 1):
        rows[i - 1][c], rows[k - 1][c] = rows[k - 1][c], rows[i - 1][c]
    return tuple(tuple(r) for r in rows)


def lgv_involution_check(gamma):
    """Exhaustive check that the swap is a fixed-point-free, weight-negating involution.

    Returns ``(holds, counterexample_or_None, count)``.
    """
    gamma = tuple(gamma)
    m = len(gamma) + 1
    count = 0
    for t in enumerate_triangular(gamma):
        if is_nonintersecting(t):
            continue
        count += 1
        u = lgv_involution(t)
        ok = (
            u != t
            and lgv_involution(u) == t
            and not is_nonintersecting(u)
            and all(is_compatible(lam, gamma, m) for lam in u)
            and tableau_sign(u) == -tableau_sign(t)
            and tableau_factors(u) == tableau_factors(t)
        )
        if not ok:
            return False, t, count
    return True, None, count


# the involution for the general-gamma induction


def gamma_prime(gamma):
    """gamma with its last 1 cleared."""
    gamma = list(gamma)
    if 1 not in gamma:
        raise ValueError("gamma has no 1-bit")
    last = max(k for k, g in enumerate(gamma) if g)
    gamma[last] = 0
    return tuple(gamma)


def last_one(gamma):
    return max(k for k, g in enumerate(gamma, start=1) if g)


def is_compatible_tableau(t, gamma):
    m = len(t)
    return all(is_compatible(lam, gamma, m) for lam in t)


def enumerate_V_prime(gamma):
    """Non-intersecting tableaux compatible with gamma' but not with gamma."""
    gamma = tuple(gamma)
    for t in enumerate_V(gamma_prime(gamma)):
        if not is_compatible_tableau(t, gamma):
            yield t


def iota(t, gamma):
    """Exchange the length-ell prefixes of rows ell and r.

    ell + 1 is the first position beyond the last 1 of gamma where some
    partition has a part equal to the number of ones k, and r is the row
    carrying that part.
    """
    gamma = tuple(gamma)
    m = len(gamma) + 1
    if not (is_nonintersecting(t) and is_compatible_tableau(t, gamma_prime(gamma))) or is_compatible_tableau(t, gamma):
        raise ValueError("tableau is not in V'_gamma")
    k = sum(gamma)
    ik = last_one(gamma)
    hits = [(j, i) for i in range(1, m + 1) for j in range(ik + 1, i + 1) if t[i - 1][j - 1] == k]
    jmin = min(j for j, _ in hits)
    rs = [i for j, i in hits if j == jmin]
    if len(rs) != 1:
        raise AssertionError(f"row r is not unique: {rs}")
    r = rs[0]
    ell = jmin - 1
    rows = list(t)
    lam_l, lam_r = t[ell - 1], t[r - 1]
    rows[ell - 1] = tuple(lam_r[:ell])
    rows[r - 1] = tuple(lam_l[:ell]) + tuple(lam_r[ell:])
    return tuple(rows)


def substituted_factors(t, rules):
    """Weight of ``t`` after the substitutions, as (sign, sorted factor keys).

    A factor a_x + b_j stays ``("b", x, j)`` unless j is substituted, in which
    case it becomes a_x + 1 - a_r, keyed ``("a", x, r)``, and disappears when
    x = r.  Distinct keys are non-associate irreducible linear forms, so two
    weights are equal exactly when signs and key multisets agree.
    """
    keys = []
    for x, j in tableau_factors(t):
        r = rules.get(j)
        if r is None:
            keys.append(("b", x, j))
        elif r != x:
            keys.append(("a", x, r))
    return tableau_sign(t), tuple(sorted(keys))


def _expand_keys(acc, m):
    out = MultiPoly.zero(m)
    for keys, c in acc.items():
        if not c:
            continue
        term = MultiPoly.const(m, c)
        for kind, x, y in keys:
            if kind == "b":
                term = term * MultiPoly.linear(m, x, y)
            else:
                term = term * (MultiPoly.linear(m, x, None, 1) - MultiPoly.a(m, y))
        out = out + term
    return out


def iota_check(gamma):
    """Exhaustive check of the involution on V'_gamma.

    Verifies membership, involution, no fixed points, w(iota(c)) = -w(c)
    under the gamma substitutions, and that the weights over V'_gamma sum to
    zero.  Returns ``(holds, counterexample_or_None, size)``.
    """
    gamma = tuple(gamma)
    m = len(gamma) + 1
    rules = substitution_rules(gamma)
    members = set(enumerate_V_prime(gamma))
    acc = Counter()
    for t in members:
        u = iota(t, gamma)
        st, kt = substituted_factors(t, rules)
        su, ku = substituted_factors(u, rules)
        ok = u in members and u != t and iota(u, gamma) == t and su == -st and ku == kt
        if not ok:
            return False, t, len(members)
        acc[kt] += st
    if any(acc.values()) and not _expand_keys(acc, m).is_zero():
        return False, None, len(members)
    return True, None, len(members)


def identity2_check(gamma):
    gamma = tuple(gamma)
    m = len(gamma) + 1
    got = sigma_gamma(gamma)
    want = vandermonde_shift(m)
    return got == want, {"sigma": got, "product": want}
