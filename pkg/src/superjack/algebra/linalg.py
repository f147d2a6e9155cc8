"""Exact determinants and linear solves."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

from .multipoly import MultiPoly


def perm_sign(p):
    """Sign of a permutation given as a sequence of distinct comparable items."""
    p = list(p)
    sign = 1
    seen = [False] * len(p)
    order = {v: i for i, v in enumerate(sorted(p))}
    q = [order[v] for v in p]
    for i in range(len(q)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = q[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _square(M):
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("determinant of a non-square matrix")
    return n


def _exact_div(x, y):
    if isinstance(x, MultiPoly):
        return x.exact_div(y)
    if isinstance(x, int) and isinstance(y, int):
        q, r = divmod(x, y)
        if r:
            raise ArithmeticError("Bareiss step is not exact")
        return q
    return x / y


def _is_zero(x):
    if isinstance(x, MultiPoly):
        return x.is_zero()
    return x == 0


def det(M, one=None):
    """Exact determinant.

    Polynomial matrices go through :func:`det_minors`: multivariate exact
    division makes Bareiss slow for MultiPoly entries, while the division-free
    minor expansion only needs 2^n products per row.  Integer (or field)
    matrices use Bareiss.
    """
    n = _square(M)
    if n and any(isinstance(x, MultiPoly) for row in M for x in row):
        return det_minors(M, one)
    return det_bareiss(M, one)


def det_minors(M, one=None):
    """Laplace expansion along rows with every column-subset minor memoized."""
    n = _square(M)
    unit = 1 if one is None else one
    # minors[cols] = det of rows n-len(cols).. x the columns in cols
    minors = {(): unit}
    for size in range(1, n + 1):
        row = n - size
        nxt = {}
        for cols in combinations(range(n), size):
            total = None
            for pos, c in enumerate(cols):
                entry = M[row][c]
                if _is_zero(entry):
                    continue
                sub = minors[cols[:pos] + cols[pos + 1:]]
                if _is_zero(sub):
                    continue
                term = entry * sub
                if pos % 2:
                    term = -term
                total = term if total is None else total + term
            nxt[cols] = unit * 0 if total is None else total
        minors = nxt
    return minors[tuple(range(n))]


def det_bareiss(M, one=None):
    """Fraction-free (Bareiss) determinant; entries stay in the ring throughout."""
    n = _square(M)
    if n == 0:
        return 1 if one is None else one
    A = [list(row) for row in M]
    sign = 1
    prev = 1 if one is None else one
    for k in range(n - 1):
        if _is_zero(A[k][k]):
            for r in range(k + 1, n):
                if not _is_zero(A[r][k]):
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return A[k][k] * 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = _exact_div(A[i][j] * A[k][k] - A[i][k] * A[k][j], prev)
        prev = A[k][k]
    d = A[n - 1][n - 1]
    return d if sign == 1 else -d


def det_leibniz(M, one=None):
    """Determinant as the signed sum over all permutations (the textbook oracle)."""
    n = _square(M)
    total = None
    for sigma in permutations(range(n)):
        term = 1 if one is None else one
        for i in range(n):
            term = term * M[sigma[i]][i]
        if perm_sign(sigma) < 0:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return 1 if one is None else one
    return total


def solve_rational(A, rhs_columns):
    """Solve A X = B over Q by Gauss-Jordan elimination.

    ``A`` is an n x n matrix of rationals; ``rhs_columns`` is a list of
    right-hand sides whose entries support ``+``, ``-`` and multiplication by
    Fraction (e.g. Fraction or AlphaRational).  Raises ValueError when A is
    singular.
    """
    n = _square(A)
    A = [[Fraction(x) for x in row] for row in A]
    B = [list(col) for col in rhs_columns]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            for b in B:
                b[col], b[piv] = b[piv], b[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for b in B:
            b[col] = b[col] * inv
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
                for b in B:
                    b[r] = b[r] - b[col] * f
    return B
