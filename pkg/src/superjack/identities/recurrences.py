"""The refined sums P^[k]_{j,i}, their recurrences, and the row reduction of M(gamma).

All polynomials here live in one fixed ring (``RING_M`` a's and
``RING_M - 1`` b's) so that the b-shift b_l <- b_{l+1} never leaves it.
"""

from __future__ import annotations

from functools import lru_cache

from ..algebra.linalg import det
from ..algebra.multipoly import MultiPoly
from .triangular import P_matrix, partition_weight, vandermonde_shift

RING_M = 8
MAX_INDEX = RING_M - 1


def _parts_from(length, first, lowest=1):
    """Weakly decreasing tuples of the given length starting at ``first``."""
    out = []

    def rec(prefix):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for p in range(prefix[-1], lowest - 1, -1):
            prefix.append(p)
            rec(prefix)
            prefix.pop()

    if length >= 1 and first >= lowest:
        rec([first])
    return out


def in_P_set(lam, j, k):
    """lam has first part j and at least one part j - l for each l = 1..k."""
    parts = set(lam)
    return lam[0] == j and all(j - l in parts for l in range(1, k + 1))


@lru_cache(maxsize=None)
def P_set(j, i, k):
    """Partitions of length i, first part j, containing j-1, ..., j-k."""
    if j < 1 or i < 1:
        return ()
    return tuple(lam for lam in _parts_from(i, j) if in_P_set(lam, j, k))


@lru_cache(maxsize=None)
def P_k(j, i, k, m=RING_M):
    """P^[k]_{j,i}: the weighted sum of P_set(j, i, k)."""
    if j > m or i > m:
        raise ValueError(f"P^[{k}]_{{{j},{i}}} needs a ring with more than m={m} letters")
    out = {}
    for lam in P_set(j, i, k):
        for e, c in partition_weight(lam, m).terms.items():
            out[e] = out.get(e, 0) + c
    return MultiPoly(m, out)


def shifted(p):
    """b_l <- b_{l+1} for every l."""
    return p.shift_b()


def _ab(j, m=RING_M):
    return MultiPoly.linear(m, j, 1)


def recurrence_rhs(j, i, k):
    """Right side of the recurrence for P^[k]_{j,i} (i >= 2, j > k)."""
    if k == 0:
        rhs = _ab(j) * shifted(P_k(j, i - 1, 0))
        if j > 1:
            rhs = rhs + shifted(P_k(j - 1, i - 1, 0))
            rhs = rhs + P_k(j - 1, i, 0) - _ab(j - 1) * shifted(P_k(j - 1, i - 1, 0))
        return rhs
    rhs = _ab(j) * shifted(P_k(j, i - 1, k))
    if j > 1:
        rhs = rhs + shifted(P_k(j - 1, i - 1, k - 1))
    return rhs


def recurrence_check(max_k=3, max_index=MAX_INDEX):
    """Both recurrences plus the boundary values, over the stated index box.

    Returns ``(holds, failures)`` where failures lists ``(j, i, k, what)``.
    """
    failures = []
    one = MultiPoly.one(RING_M)
    for k in range(max_k + 1):
        for i in range(1, max_index + 1):
            for j in range(1, max_index + 1):
                p = P_k(j, i, k)
                if j <= k or i <= k:
                    if not p.is_zero():
                        failures.append((j, i, k, "vanishing"))
                    continue
                if i == 1:
                    if k == 0 and p != one:
                        failures.append((j, i, k, "P_j1 = 1"))
                    continue
                if p != recurrence_rhs(j, i, k):
                    failures.append((j, i, k, "recurrence"))
    return not failures, failures


def D_k(j, i, k):
    """D^[k]_{j,i} = P^[k]_{j,i} - P^[k]_{j-1,i}."""
    return P_k(j, i, k) - P_k(j - 1, i, k)


def interp_factor(j, k, m=RING_M):
    """a_j + 1 - a_{j-k-1}."""
    return MultiPoly.linear(m, j, None, 1) - MultiPoly.a(m, j - k - 1)


def interp_check(max_k=3, max_index=MAX_INDEX):
    """D^[k]_{j,i} = (a_j + 1 - a_{j-k-1}) P^[k+1]_{j,i} for i > k, j > k+1."""
    failures = []
    for k in range(max_k + 1):
        for i in range(k + 1, max_index + 1):
            for j in range(k + 2, max_index + 1):
                if D_k(j, i, k) != interp_factor(j, k) * P_k(j, i, k + 1):
                    failures.append((j, i, k))
    return not failures, failures


def staircase_check(max_index=MAX_INDEX):
    """P^[i-1]_{i,i} = 1 (the staircase) and P^[j-1]_{j,i} = 0 for j > i."""
    one = MultiPoly.one(RING_M)
    for i in range(1, max_index + 1):
        if P_set(i, i, i - 1) != (tuple(range(i, 0, -1)),) or P_k(i, i, i - 1) != one:
            return False
        for j in range(i + 1, max_index + 1):
            if not P_k(j, i, j - 1).is_zero():
                return False
    return True


def _row_reduce(M, m, strict=True):
    """Staged sweeps L_j <- L_j - L_{j-1}, dividing row j by a_j + 1 - a_{j-k-1}.

    Returns ``(factors, final_matrix, log)``; with ``strict`` a failed
    division raises ArithmeticError, otherwise it is logged and the row is
    left undivided.
    """
    A = [list(row) for row in M]
    factors = []
    log = []
    for k in range(m - 1):
        for j in range(m, k + 1, -1):
            A[j - 1] = [x - y for x, y in zip(A[j - 1], A[j - 2])]
        for j in range(m, k + 1, -1):
            f = interp_factor(j, k, m)
            try:
                A[j - 1] = [x.exact_div(f) for x in A[j - 1]]
                factors.append(f)
                log.append((k, j, True))
            except ArithmeticError:
                if strict:
                    raise ArithmeticError(f"stage {k}: a_{j}+1-a_{j - k - 1} does not divide row {j}")
                log.append((k, j, False))
    return factors, A, log


def row_reduce_determinant(m):
    """det M(gamma^0) by the staged factor extraction.

    Returns ``(value, report)``; ``value`` is the product of the extracted
    factors times the determinant of the final matrix, which must be unit
    upper triangular with rows equal to P^[j-1]_{j,i}.
    """
    gamma = (0,) * (m - 1)
    M = P_matrix(gamma)
    factors, A, _ = _row_reduce(M, m)
    one = MultiPoly.one(m)
    unit_upper = all(
        (A[r][c] == one) if r == c else (A[r][c].is_zero() if r > c else True)
        for r in range(m)
        for c in range(m)
    )
    rows_match = all(A[j - 1][i - 1] == P_k(j, i, j - 1, m) for j in range(1, m + 1) for i in range(1, m + 1))
    value = one
    for f in factors:
        value = value * f
    final_det = det(A, one=one)
    value = value * final_det
    generic = det(M, one=one)
    report = {
        "factors": factors,
        "unit_upper_triangular": unit_upper,
        "rows_are_P_staircase": rows_match,
        "equals_generic_det": value == generic,
        "equals_product": value == vandermonde_shift(m),
    }
    return value, report


def general_row_reduction(gamma):
    """Run the gamma^0 row operations on M(gamma) for any gamma (experiment only).

    No correctness claim is attached: the log records which stage divisions
    happen to be exact.
    """
    gamma = tuple(gamma)
    m = len(gamma) + 1
    _, A, log = _row_reduce(P_matrix(gamma), m, strict=False)
    return {"gamma": gamma, "log": log, "final": A}
