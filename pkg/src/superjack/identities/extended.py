"""Extended partitions and the bijective double count behind the P^[k] factor relation.

An extended partition of level k+1 is a partition of ``P_set(j, i, k+1)``
with an arrow between parts u and u+1 where
lambda_u > lambda_{u+1} = lambda_u - 1 >= j - k - 1.  Weights are handled
as ``(sign, sorted factor tuple)`` with factor ``(x, y)`` meaning a_x + b_y;
these linear forms are pairwise non-associate irreducibles, so two weights
agree exactly when signs and factor multisets agree.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ..algebra.multipoly import MultiPoly
from .recurrences import RING_M, P_k, P_set, in_P_set
from .triangular import expand_weights, weight_factors

LEFT = "L"
RIGHT = "R"


@dataclass(frozen=True)
class ExtendedPartition:
    base: tuple[int, ...]
    u: int
    direction: str

    def part(self, v):
        """1-based part access."""
        return self.base[v - 1]

    def format(self):
        arrow = "<-" if self.direction == LEFT else "->"
        left = ",".join(map(str, self.base[: self.u]))
        right = ",".join(map(str, self.base[self.u:]))
        return f"({left} {arrow} {right})"

    def __str__(self):
        return self.format()


def partition_weight_key(lam, sign=1):
    return sign, tuple(sorted(weight_factors(lam)))


def weight_key(e):
    """Weight of an extension: w(lambda) times a_{lambda_u}+b_u (left) or -(a_{lambda_{u+1}}+b_u) (right)."""
    sign, factor = extension_multiplier(e)
    return sign, tuple(sorted(list(weight_factors(e.base)) + [factor]))


def extension_multiplier(e):
    """(sign, (x, u)): the extension's weight is w(lambda) * sign * (a_x + b_u)."""
    if e.direction == LEFT:
        return 1, (e.part(e.u), e.u)
    return -1, (e.part(e.u + 1), e.u)


def arrow_positions(lam, j, k):
    """Positions u admitted at level k+1: lambda_u > lambda_{u+1} = lambda_u - 1 >= j-k-1."""
    return [
        u
        for u in range(1, len(lam))
        if lam[u - 1] > lam[u] and lam[u] == lam[u - 1] - 1 and lam[u] >= j - k - 1
    ]


def extended_partitions(j, i, k):
    """Every extension of every partition in P_set(j, i, k+1)."""
    for lam in P_set(j, i, k + 1):
        for u in arrow_positions(lam, j, k):
            yield ExtendedPartition(lam, u, RIGHT)
            yield ExtendedPartition(lam, u, LEFT)


def is_extension(e, j, i, k):
    lam = e.base
    return (
        len(lam) == i
        and all(lam[t] >= lam[t + 1] >= 1 for t in range(len(lam) - 1))
        and in_P_set(lam, j, k + 1)
        and e.u in arrow_positions(lam, j, k)
        and e.direction in (LEFT, RIGHT)
    )


def _bad_witnesses(e, j, k):
    lam = e.base
    i = len(lam)
    if e.direction == LEFT:
        return [v for v in range(e.u + 1, i) if lam[v - 1] == lam[v] and lam[v - 1] >= j - k - 1]
    return [v for v in range(2, e.u + 1) if lam[v - 2] == lam[v - 1]]


def is_bad(e, j, k):
    return bool(_bad_witnesses(e, j, k))


def is_good_explicit(e, j, k):
    """The explicit description of good extensions (exactly one part of each listed size)."""
    counts = Counter(e.base)
    if e.direction == LEFT:
        sizes = range(j - k - 1, e.part(e.u + 1) + 1)
    else:
        sizes = range(e.part(e.u), j + 1)
    return all(counts[s] == 1 for s in sizes)


def psi(e, j, k):
    """Sign-reversing involution on bad extensions."""
    wit = _bad_witnesses(e, j, k)
    if not wit:
        raise ValueError(f"{e} is not a bad extension")
    lam = list(e.base)
    if e.direction == LEFT:
        v = min(wit)
        for t in range(e.u, v):
            lam[t] += 1
        return ExtendedPartition(tuple(lam), v, RIGHT)
    v = max(wit)
    for t in range(v - 1, e.u):
        lam[t] -= 1
    return ExtendedPartition(tuple(lam), v - 1, LEFT)


def theta_L(e, j, k):
    """Good left extension -> partition: raise parts u+1..v where lambda_v = j-k-1."""
    if e.direction != LEFT or is_bad(e, j, k):
        raise ValueError(f"{e} is not a good left extension")
    lam = list(e.base)
    v = lam.index(j - k - 1) + 1
    for t in range(e.u, v):
        lam[t] += 1
    return tuple(lam)


def theta_R(e, j, k):
    """Good right extension -> partition: lower parts 1..u."""
    if e.direction != RIGHT or is_bad(e, j, k):
        raise ValueError(f"{e} is not a good right extension")
    lam = list(e.base)
    for t in range(e.u):
        lam[t] -= 1
    return tuple(lam)


def theta_L_target(j, i, k):
    """Partitions in P_set(j,i,k) with a repeated part > j-k-1 and no part j-k-1."""
    out = []
    for lam in P_set(j, i, k):
        c = Counter(lam)
        if c[j - k - 1] == 0 and any(p > j - k - 1 and n >= 2 for p, n in c.items()):
            out.append(lam)
    return out


def theta_R_target(j, i, k):
    """Partitions in P_set(j-1,i,k) with a repeated part of size in [j-k-1, j-1]."""
    out = []
    for lam in P_set(j - 1, i, k):
        c = Counter(lam)
        if any(j - k - 1 <= p <= j - 1 and n >= 2 for p, n in c.items()):
            out.append(lam)
    return out


def L_set(j, i, k):
    """Partitions in P_set(j,i,k) with exactly one part of each size j..j-k and none of size j-k-1."""
    out = []
    for lam in P_set(j, i, k):
        c = Counter(lam)
        if c[j - k - 1] == 0 and all(c[s] == 1 for s in range(j - k, j + 1)):
            out.append(lam)
    return out


def R_set(j1, i, k):
    """Partitions in P_set(j1,i,k) with exactly one part of each size j1..j1-k."""
    out = []
    for lam in P_set(j1, i, k):
        c = Counter(lam)
        if all(c[s] == 1 for s in range(j1 - k, j1 + 1)):
            out.append(lam)
    return out


def lr_bijection(lam, count):
    """Raise the first ``count`` parts by one (R^[k]_{j-1,i} -> L^[k]_{j,i} needs count = k+1)."""
    return tuple(p + 1 for p in lam[:count]) + tuple(lam[count:])


def _sum(keys, m=RING_M):
    acc = Counter()
    for sign, factors in keys:
        acc[factors] += sign
    return expand_weights(acc, m)


def double_count_check(j, i, k):
    """Exhaustive check of every step of the double count for EP^[k+1]_{j,i}.

    Returns ``(holds, report)``; ``report`` names each sub-check with a
    boolean, plus set sizes.
    """
    m = RING_M
    exts = list(extended_partitions(j, i, k))
    ext_set = set(exts)
    report = {"extensions": len(exts)}
    a = lambda x: MultiPoly.a(m, x)  # noqa: E731
    diff = a(j) - a(j - k - 1)

    # left side, grouped by base partition
    per_base = True
    by_base = {}
    for e in exts:
        by_base.setdefault(e.base, []).append(e)
    for lam in P_set(j, i, k + 1):
        group = by_base.get(lam, [])
        if len(group) != 2 * (k + 1) or _sum([weight_key(e) for e in group]) != _sum([partition_weight_key(lam)]) * diff:
            per_base = False
            break
    report["per_base_sum"] = per_base
    total = _sum([weight_key(e) for e in exts])
    report["lhs"] = total == diff * P_k(j, i, k + 1)

    # Psi on bad extensions
    bad = [e for e in exts if is_bad(e, j, k)]
    good = [e for e in exts if not is_bad(e, j, k)]
    ok = True
    for e in bad:
        f = psi(e, j, k)
        sf, ff = weight_key(f)
        se, fe = weight_key(e)
        if not (f in ext_set and is_bad(f, j, k) and psi(f, j, k) == e and f != e and sf == -se and ff == fe):
            ok = False
            break
    report["psi_involution"] = ok
    report["good_description"] = all(is_good_explicit(e, j, k) == (not is_bad(e, j, k)) for e in exts)
    report["good_sum_equals_total"] = _sum([weight_key(e) for e in good]) == total

    # Theta_L and Theta_R
    good_left = [e for e in good if e.direction == LEFT]
    good_right = [e for e in good if e.direction == RIGHT]
    imgs_L = [theta_L(e, j, k) for e in good_left]
    imgs_R = [theta_R(e, j, k) for e in good_right]
    report["theta_L_bijection"] = len(set(imgs_L)) == len(imgs_L) and set(imgs_L) == set(theta_L_target(j, i, k))
    report["theta_R_bijection"] = len(set(imgs_R)) == len(imgs_R) and set(imgs_R) == set(theta_R_target(j, i, k))
    report["theta_L_weight"] = all(partition_weight_key(lam) == weight_key(e) for lam, e in zip(imgs_L, good_left))
    report["theta_R_weight"] = all(
        partition_weight_key(lam, -1) == weight_key(e) for lam, e in zip(imgs_R, good_right)
    )
    Lw = _sum([partition_weight_key(lam) for lam in L_set(j, i, k)])
    Rw = _sum([partition_weight_key(lam) for lam in R_set(j - 1, i, k)])
    report["left_image_sum"] = _sum([weight_key(e) for e in good_left]) == P_k(j, i, k) - P_k(j, i, k + 1) - Lw
    report["right_image_sum"] = _sum([weight_key(e) for e in good_right]) == -(P_k(j - 1, i, k) - Rw)

    # R^[k]_{j-1,i} = L^[k]_{j,i} through raising the first k+1 parts
    Rs = R_set(j - 1, i, k)
    raised = [lr_bijection(lam, k + 1) for lam in Rs]
    report["lr_bijection"] = sorted(raised) == sorted(L_set(j, i, k)) and all(
        partition_weight_key(lam) == partition_weight_key(mu) for lam, mu in zip(Rs, raised)
    )
    report["lr_weight_sums"] = Lw == Rw
    rhs = (P_k(j, i, k) - P_k(j, i, k + 1)) - P_k(j - 1, i, k)
    report["relation"] = total == rhs
    holds = all(v for key, v in report.items() if key != "extensions")
    return holds, report


def double_count_suite(max_k=3, max_index=7):
    """double_count_check over k <= max_k, k < i <= max_index, k+1 < j <= max_index."""
    failures = []
    count = 0
    for k in range(max_k + 1):
        for i in range(k + 1, max_index + 1):
            for j in range(k + 2, max_index + 1):
                ok, report = double_count_check(j, i, k)
                count += 1
                if not ok:
                    failures.append(((j, i, k), {key: v for key, v in report.items() if v is False}))
    return not failures, failures, count
