"""0-admissible tableaux and the combinatorial formula for non-symmetric Jack polynomials."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .algebra.ratfunc import ONE, AlphaRational, padd, pmul
from .algebra.superpoly import SuperPolynomial
from .combinatorics import Composition, hook_d, hook_d_coeffs


@dataclass(frozen=True)
class AdmissibleTableau:
    shape: Composition
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, cell):
        i, j = cell
        return self.rows[i - 1][j - 1]

    def entries(self):
        return {(i, j): c for i, row in enumerate(self.rows, start=1) for j, c in enumerate(row, start=1)}

    def evaluation(self):
        ev = [0] * self.shape.N
        for row in self.rows:
            for c in row:
                ev[c - 1] += 1
        return tuple(ev)

    def critical_cells(self):
        """Cells whose left neighbour (column 0 holding i in row i) has the same letter."""
        out = []
        for i, row in enumerate(self.rows, start=1):
            left = i
            for j, c in enumerate(row, start=1):
                if c == left:
                    out.append((i, j))
                left = c
        return out

    def format(self):
        return "/".join(",".join(map(str, row)) if row else "." for row in self.rows)

    def __str__(self):
        return self.format()


def _as_composition(eta):
    return eta if isinstance(eta, Composition) else Composition(tuple(eta))


def _column_order(eta):
    width = max(eta.parts, default=0)
    return [(i, j) for j in range(1, width + 1) for i in range(1, eta.N + 1) if eta.parts[i - 1] >= j]


def _fill(eta, first_column=None):
    """Backtracking over cells in column-major order; yields filled grids (lists of lists)."""
    N = eta.N
    cells = _column_order(eta)
    grid = [[0] * length for length in eta.parts]
    used_in_col = {}
    start = 0
    if first_column is not None:
        col1 = [(i, 1) for i in range(1, N + 1) if eta.parts[i - 1] >= 1]
        if len(first_column) != len(col1):
            raise ValueError("first-column filling has the wrong length")
        seen = set()
        for (i, _), c in zip(col1, first_column):
            if c in seen or not i <= c <= N:
                return
            seen.add(c)
            grid[i - 1][0] = c
        used_in_col[1] = seen
        start = len(col1)

    def rec(k):
        if k == len(cells):
            yield grid
            return
        i, j = cells[k]
        used = used_in_col.setdefault(j, set())
        # letters sitting in column j-1 at rows above i are forbidden (column 0 holds row index)
        if j == 1:
            banned = set(range(1, i))
        else:
            banned = {grid[r - 1][j - 2] for r in range(1, i) if eta.parts[r - 1] >= j - 1}
        for c in range(1, N + 1):
            if c in used or c in banned:
                continue
            grid[i - 1][j - 1] = c
            used.add(c)
            yield from rec(k + 1)
            used.discard(c)
        grid[i - 1][j - 1] = 0

    yield from rec(start)


def enumerate_admissible(eta, first_column=None):
    """Stream every 0-admissible tableau of shape ``eta`` exactly once.

    With ``first_column`` the stream is restricted to tableaux whose column 1
    (read top to bottom over non-empty rows) is that tuple of letters.
    """
    eta = _as_composition(eta)
    for grid in _fill(eta, first_column):
        yield AdmissibleTableau(eta, tuple(tuple(row) for row in grid))


def first_column_fillings(eta):
    """Admissible fillings of column 1, the unit of work for parallel enumeration."""
    eta = _as_composition(eta)
    rows = [i for i in range(1, eta.N + 1) if eta.parts[i - 1] >= 1]
    out = []

    def rec(k, chosen):
        if k == len(rows):
            out.append(tuple(chosen))
            return
        for c in range(rows[k], eta.N + 1):
            if c not in chosen:
                chosen.append(c)
                rec(k + 1, chosen)
                chosen.pop()

    rec(0, [])
    return out


def is_admissible(T):
    """Check conditions (1)-(3) directly on the tableau."""
    eta = T.shape
    N = eta.N
    ent = T.entries()
    if set(ent) != set(eta.cells()):
        return False
    if any(not 1 <= c <= N for c in ent.values()):
        return False
    cols = {}
    for (i, j), c in ent.items():
        cols.setdefault(j, []).append(c)
    if any(len(v) != len(set(v)) for v in cols.values()):
        return False
    for (i, j), c in ent.items():
        for (k, l), d in ent.items():
            if l == j + 1 and k > i and d == c:
                return False
    return all(c >= i for (i, j), c in ent.items() if j == 1)


def is_admissible_T0(T):
    """Check (1) and (2) on the tableau with column 0 holding letter i in row i."""
    eta = T.shape
    ent = dict(T.entries())
    if any(not 1 <= c <= eta.N for c in ent.values()):
        return False
    for i in range(1, eta.N + 1):
        ent[(i, 0)] = i
    cols = {}
    for (i, j), c in ent.items():
        cols.setdefault(j, []).append(c)
    if any(len(v) != len(set(v)) for v in cols.values()):
        return False
    for (i, j), c in ent.items():
        for (k, l), d in ent.items():
            if l == j + 1 and k > i and d == c:
                return False
    return True


def critical_weight(T):
    """d_T^0: product of alpha-hooklengths over 0-critical cells."""
    out = AlphaRational.from_int(1)
    for s in T.critical_cells():
        out = out * hook_d(T.shape, s)
    return out


def hook_product(eta):
    """Product of d_eta(s) over all cells, as an integer polynomial tuple."""
    eta = _as_composition(eta)
    out = ONE
    for s in eta.cells():
        a, c = hook_d_coeffs(eta, s)
        out = pmul(out, (c, a))
    return out


def _numerator_chunk(args):
    parts, first_column = args
    eta = Composition(parts)
    dpoly = {s: tuple(reversed(hook_d_coeffs(eta, s))) for s in eta.cells()}
    acc = {}
    for T in enumerate_admissible(eta, first_column):
        w = ONE
        for s in T.critical_cells():
            w = pmul(w, dpoly[s])
        ev = T.evaluation()
        acc[ev] = padd(acc.get(ev, ()), w)
    return acc


def E_numerator(eta, jobs=1):
    """Sum of d_T^0 x^ev(T) keyed by evaluation, with integer polynomial values."""
    eta = _as_composition(eta)
    if jobs <= 1 or eta.size == 0:
        return {k: v for k, v in _numerator_chunk((eta.parts, None)).items() if v}
    work = [(eta.parts, fc) for fc in first_column_fillings(eta)]
    acc = {}
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_numerator_chunk, work):
            for ev, w in part.items():
                acc[ev] = padd(acc.get(ev, ()), w)
    return {k: v for k, v in acc.items() if v}


def E(eta, jobs=1):
    """E_eta(x; alpha) from the tableau formula, as a purely bosonic SuperPolynomial."""
    eta = _as_composition(eta)
    den = hook_product(eta)
    p = SuperPolynomial(eta.N)
    for ev, num in E_numerator(eta, jobs).items():
        p.terms[((), ev)] = AlphaRational(num, den)
    return p
