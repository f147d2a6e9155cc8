"""Partitions, compositions, superpartitions and their diagrams.

Cells are 1-based ``(row, column)`` pairs with rows numbered downward.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import factorial, prod

from .algebra.ratfunc import AlphaRational


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    @property
    def size(self):
        return sum(self.parts)

    def multiplicities(self):
        return Counter(self.parts)

    def conjugate(self):
        if not self.parts:
            return Partition()
        return Partition(tuple(sum(1 for p in self.parts if p >= c) for c in range(1, self.parts[0] + 1)))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if len(parts) < 1:
            raise ValueError("a composition needs at least one part")
        if any(p < 0 for p in parts):
            raise ValueError(f"composition entries must be non-negative: {parts}")

    @property
    def N(self):
        return len(self.parts)

    @property
    def size(self):
        return sum(self.parts)

    def __getitem__(self, i):
        """1-based row length."""
        return self.parts[i - 1]

    def cells(self):
        for i, length in enumerate(self.parts, start=1):
            for j in range(1, length + 1):
                yield (i, j)

    def __contains__(self, cell):
        i, j = cell
        return 1 <= i <= self.N and 1 <= j <= self.parts[i - 1]

    def arm(self, cell):
        i, j = cell
        return self.parts[i - 1] - j

    def leg_upper(self, cell):
        """Rows above with j <= eta_k + 1 <= eta_i."""
        i, j = cell
        ei = self.parts[i - 1]
        return sum(1 for k in range(i - 1) if j <= self.parts[k] + 1 <= ei)

    def leg_lower(self, cell):
        """Rows below with j <= eta_k <= eta_i."""
        i, j = cell
        ei = self.parts[i - 1]
        return sum(1 for k in range(i, self.N) if j <= self.parts[k] <= ei)

    def leg(self, cell):
        return self.leg_upper(cell) + self.leg_lower(cell)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def hook_d(eta, cell):
    """alpha*(arm+1) + leg + 1 as an AlphaRational (a linear polynomial)."""
    if cell not in eta:
        raise ValueError(f"cell {cell} is outside the diagram of {eta}")
    return AlphaRational.linear(eta.arm(cell) + 1, eta.leg(cell) + 1)


def hook_d_coeffs(eta, cell):
    """The pair (alpha coefficient, constant term) of the alpha-hooklength."""
    if cell not in eta:
        raise ValueError(f"cell {cell} is outside the diagram of {eta}")
    return eta.arm(cell) + 1, eta.leg(cell) + 1


_SP_RE = re.compile(r"^\(\s*([0-9,\s]*)\s*;\s*([0-9,\s]*)\s*\)$")


@dataclass(frozen=True)
class Superpartition:
    fermionic: tuple[int, ...]
    symmetric: Partition

    def __post_init__(self):
        fer = tuple(self.fermionic)
        object.__setattr__(self, "fermionic", fer)
        sym = self.symmetric
        if not isinstance(sym, Partition):
            sym = Partition(tuple(p for p in sym if p))
            object.__setattr__(self, "symmetric", sym)
        if any(x < 0 for x in fer):
            raise ValueError("fermionic entries must be non-negative")
        if any(fer[i] <= fer[i + 1] for i in range(len(fer) - 1)):
            raise ValueError(f"fermionic part must be strictly decreasing: {fer}")

    @classmethod
    def parse(cls, text):
        """Read ``"(a1,a2,...;s1,s2,...)"``; zeros in the symmetric part are dropped."""
        mt = _SP_RE.match(text.strip())
        if not mt:
            raise ValueError(f"not a superpartition: {text!r}")
        fer = tuple(int(x) for x in mt.group(1).split(",") if x.strip())
        sym = tuple(int(x) for x in mt.group(2).split(",") if x.strip())
        if any(sym[i] < sym[i + 1] for i in range(len(sym) - 1)):
            raise ValueError(f"symmetric part must be weakly decreasing: {text!r}")
        return cls(fer, Partition(tuple(x for x in sym if x)))

    @classmethod
    def of(cls, fermionic, symmetric=()):
        return cls(tuple(fermionic), Partition(tuple(x for x in symmetric if x)))

    def __str__(self):
        return "(" + ",".join(map(str, self.fermionic)) + ";" + ",".join(map(str, self.symmetric.parts)) + ")"

    @property
    def m(self):
        return len(self.fermionic)

    @property
    def degree(self):
        return sum(self.fermionic) + self.symmetric.size

    @property
    def length(self):
        return self.m + len(self.symmetric)

    def sector(self):
        return self.degree, self.m

    def padded_symmetric(self, N):
        """Lambda^s with zeros appended to N - m entries."""
        if N < self.length:
            raise ValueError(f"N={N} is smaller than the length {self.length} of {self}")
        return self.symmetric.parts + (0,) * (N - self.m - len(self.symmetric))

    def exponent(self, N):
        """x^Lambda as an exponent vector of length N."""
        return self.fermionic + self.padded_symmetric(N)

    def key(self):
        return (self.fermionic, self.symmetric.parts)

    @cached_property
    def diagram(self):
        return diagram(self)


@dataclass(frozen=True)
class CircledDiagram:
    rows: tuple[tuple[int, bool], ...]

    @property
    def circled_rows(self):
        return [i for i, (_, c) in enumerate(self.rows, start=1) if c]

    @property
    def circled_columns(self):
        return {length + 1 for length, c in self.rows if c}

    def lengths(self):
        return [length for length, _ in self.rows]

    def augmented_lengths(self):
        return [length + (1 if c else 0) for length, c in self.rows]

    def cells(self):
        for i, (length, _) in enumerate(self.rows, start=1):
            for j in range(1, length + 1):
                yield (i, j)

    def arm(self, cell):
        """Cells strictly right of ``cell``, counting the row's circle."""
        i, j = cell
        length, circ = self.rows[i - 1]
        return length - j + (1 if circ else 0)

    def leg(self, cell):
        """Cells strictly below ``cell``, not counting a circle."""
        i, j = cell
        return sum(1 for length, _ in self.rows[i:] if length >= j)

    def render(self):
        lines = []
        for length, circ in self.rows:
            lines.append("#" * length + ("O" if circ else "") or ".")
        return "\n".join(lines)


def star(sp):
    """Lambda*: all parts merged and sorted, zeros dropped."""
    return Partition(tuple(sorted((x for x in sp.fermionic + sp.symmetric.parts if x), reverse=True)))


def star_entries(sp):
    """All entries of Lambda^a and Lambda^s sorted decreasingly, the fermionic zero kept."""
    return tuple(sorted(sp.fermionic + sp.symmetric.parts, reverse=True))


def format_star(sp):
    return "(" + ",".join(map(str, star_entries(sp))) + ")"


def diagram(sp):
    """D[Lambda]: rows of Lambda* sorted by length, circled rows topmost among ties."""
    rows = [(x, True) for x in sp.fermionic] + [(x, False) for x in sp.symmetric.parts]
    rows.sort(key=lambda r: (-r[0], not r[1]))
    return CircledDiagram(tuple(rows))


def conjugate(sp):
    """Transpose of D[Lambda] with circles treated as cells."""
    d = diagram(sp)
    aug = d.augmented_lengths()
    width = max(aug, default=0)
    fer, sym = [], []
    for c in range(1, width + 1):
        cells = sum(1 for length, _ in d.rows if length >= c)
        circled = any(circ and length == c - 1 for length, circ in d.rows)
        if circled:
            fer.append(cells)
        elif cells:
            sym.append(cells)
    return Superpartition(tuple(fer), Partition(tuple(sym)))


def ell_nm(n, m):
    return n - m * (m - 1) // 2


def lambda_min(n, m):
    if m < 0:
        raise ValueError("m must be non-negative")
    ell = ell_nm(n, m)
    if ell < 0:
        raise ValueError(f"no superpartition of degree {n} with fermionic degree {m}")
    return Superpartition(tuple(range(m - 1, -1, -1)), Partition((1,) * ell))


def tilde(sp, N):
    """The composition (Lambda_m..Lambda_1, Lambda_N..Lambda_{m+1})."""
    sym = sp.padded_symmetric(N)
    return Composition(tuple(reversed(sp.fermionic)) + tuple(reversed(sym)))


def arm_leg_circ(sp):
    """(arm, leg) for every cell of Lambda-circle, the cells avoiding circled row x circled column."""
    d = diagram(sp)
    crow = set(d.circled_rows)
    ccol = d.circled_columns
    return {
        (i, j): (d.arm((i, j)), d.leg((i, j)))
        for (i, j) in d.cells()
        if not (i in crow and j in ccol)
    }


def circ_factors(sp):
    """alpha*a + l + 1 over Lambda-circle, as (alpha coefficient, constant) pairs in cell order."""
    return [(a, l + 1) for _, (a, l) in sorted(arm_leg_circ(sp).items())]


def f_lambda_s(sp, N):
    return prod(factorial(k) for k in Counter(sp.padded_symmetric(N)).values())


def z_lambda(sp):
    """z_Lambda(alpha) = alpha^length * prod_i i^{m_i} m_i! over Lambda^s."""
    const = 1
    for part, mult in sp.symmetric.multiplicities().items():
        const *= part**mult * factorial(mult)
    return AlphaRational.poly((0,) * sp.length + (const,))


def partitions(n, max_part=None):
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def strict_partitions_with_zero(n, m, max_part=None):
    """Strictly decreasing length-m sequences of non-negative integers summing to n."""
    if max_part is None:
        max_part = n
    if m == 0:
        if n == 0:
            yield ()
        return
    for first in range(min(n, max_part), m - 2, -1):
        for rest in strict_partitions_with_zero(n - first, m - 1, first - 1):
            yield (first,) + rest


def superpartitions(n, m):
    """All superpartitions of degree n and fermionic degree m, in decreasing key order."""
    out = []
    for k in range(n, -1, -1):
        for fer in strict_partitions_with_zero(k, m):
            for sym in partitions(n - k):
                out.append(Superpartition(fer, Partition(sym)))
    out.sort(key=Superpartition.key, reverse=True)
    return out


def all_superpartitions(max_degree):
    out = []
    for n in range(max_degree + 1):
        m = 0
        while m * (m - 1) // 2 <= n:
            out.extend(superpartitions(n, m))
            m += 1
    return out


def compositions(total, parts):
    """Weak compositions of ``total`` into ``parts`` entries."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest
