"""Jack polynomials in superspace, their minimal coefficient, and the scalar product."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .algebra.linalg import solve_rational
from .algebra.ratfunc import ALPHA, AlphaRational, R_ZERO, pmul
from .algebra.superpoly import (
    SuperPolynomial,
    apply_K,
    orbit_sum,
    symmetrize,
    symmetrize_canonical,
)
from .combinatorics import (
    Partition,
    Superpartition,
    circ_factors,
    conjugate,
    ell_nm,
    f_lambda_s,
    hook_d_coeffs,
    lambda_min,
    superpartitions,
    tilde,
    z_lambda,
)
from .nonsym import E_numerator, hook_product


def default_N(sp):
    """ell_{n,m} + m, the length of Lambda_min in the sector of ``sp`` (at least 1)."""
    return max(ell_nm(sp.degree, sp.m) + sp.m, 1)


def monomial_basis(sp, N, direct=False):
    """m_Lambda in N variables.

    ``direct`` evaluates the defining sum over S_N divided by f_{Lambda^s};
    otherwise the distinct orbit elements are listed.
    """
    if N < sp.length:
        raise ValueError(f"N={N} is smaller than the length of {sp}")
    if direct:
        seed = SuperPolynomial.monomial(N, range(1, sp.m + 1), sp.exponent(N))
        total = symmetrize(seed)
        return total.scale(AlphaRational.from_fraction(Fraction(1, f_lambda_s(sp, N))))
    return orbit_sum(N, sp.fermionic, sp.padded_symmetric(N))


def _key_to_sp(key):
    fer, sym = key
    return Superpartition(fer, Partition(tuple(x for x in sym if x)))


def extract_coeff(f, thetas, exps):
    return f.coefficient(thetas, exps)


def m_expansion(f):
    """Expand a symmetric SuperPolynomial in the monomial basis.

    Repeatedly takes the greatest superpartition occurring among the
    remaining terms, reads its canonical coefficient and subtracts that
    multiple of m_Lambda.  Raises ValueError if ``f`` is not symmetric.
    """
    N = f.N
    rest = f.copy()
    out = {}
    while not rest.is_zero():
        best = None
        for th, ex in rest.terms:
            fer = sorted((ex[i - 1] for i in th), reverse=True)
            if len(set(fer)) != len(fer):
                raise ValueError("polynomial is not symmetric (repeated fermionic exponent)")
            thset = set(th)
            sym = sorted((ex[i] for i in range(N) if i + 1 not in thset), reverse=True)
            key = (tuple(fer), tuple(sym))
            if best is None or key > best:
                best = key
        sp = _key_to_sp(best)
        c = rest.coefficient(range(1, sp.m + 1), sp.exponent(N))
        if c.is_zero():
            raise ValueError(f"polynomial is not symmetric (no canonical term for {sp})")
        out[sp] = c
        rest = rest - orbit_sum(N, sp.fermionic, sp.padded_symmetric(N), c)
    return out


def from_m_expansion(coeffs, N):
    p = SuperPolynomial(N)
    for sp, c in coeffs.items():
        p = p + orbit_sum(N, sp.fermionic, sp.padded_symmetric(N), c)
    return p


@dataclass
class JackExpansion:
    index: Superpartition
    N: int
    m_basis: dict
    _poly: SuperPolynomial | None = field(default=None, repr=False)

    @property
    def poly(self):
        if self._poly is None:
            self._poly = from_m_expansion(self.m_basis, self.N)
        return self._poly

    def coefficient(self, sp):
        return self.m_basis.get(sp, R_ZERO)

    def sorted_items(self):
        return sorted(self.m_basis.items(), key=lambda kv: kv[0].key(), reverse=True)

    def to_json(self):
        return {
            "index": str(self.index),
            "N": self.N,
            "m_basis": [
                {"superpartition": str(sp), "coeff_num": list(c.num), "coeff_den": list(c.den)}
                for sp, c in self.sorted_items()
            ],
        }

    @classmethod
    def from_json(cls, obj):
        coeffs = {
            Superpartition.parse(t["superpartition"]): AlphaRational(tuple(t["coeff_num"]), tuple(t["coeff_den"]))
            for t in obj["m_basis"]
        }
        return cls(Superpartition.parse(obj["index"]), obj["N"], coeffs)


def _seed(sp, N, jobs=1):
    """theta_1..theta_m E_{tilde Lambda} with integer-polynomial numerators, and its denominator."""
    eta = tilde(sp, N)
    num = E_numerator(eta, jobs)
    th = tuple(range(1, sp.m + 1))
    seed = SuperPolynomial(N)
    for ev, w in num.items():
        seed.terms[(th, ev)] = AlphaRational.poly(w)
    return seed, hook_product(eta)


def _prefactor(sp, N, den):
    sign = -1 if (sp.m * (sp.m - 1) // 2) % 2 else 1
    return AlphaRational((sign,), pmul(den, (f_lambda_s(sp, N),)))


def jack_super(sp, N=None, jobs=1, direct=False):
    """J_Lambda by signed symmetrization of theta_1..theta_m E_{tilde Lambda}.

    The default reads the symmetrized sum at canonical monomials through the
    orbit-stabilizer count; ``direct=True`` sums K_w over all of S_N and then
    expands the resulting polynomial.
    """
    if N is None:
        N = default_N(sp)
    if N < sp.length:
        raise ValueError(f"N={N} is smaller than the length of {sp}")
    seed, den = _seed(sp, N, jobs)
    pref = _prefactor(sp, N, den)
    if direct:
        poly = symmetrize(seed).scale(pref)
        return JackExpansion(sp, N, m_expansion(poly), poly)
    coeffs = {}
    for key, c in symmetrize_canonical(seed).items():
        v = c * pref
        if not v.is_zero():
            coeffs[_key_to_sp(key)] = v
    return JackExpansion(sp, N, coeffs)


def c_min_via_expansion(sp, jobs=1, direct=False):
    """Coefficient of m~_{Lambda_min} = ell_{n,m}! m_{Lambda_min} in J_Lambda at N = ell_{n,m} + m."""
    n, m = sp.sector()
    J = jack_super(sp, default_N(sp), jobs=jobs, direct=direct)
    return J.coefficient(lambda_min(n, m)) / factorial(ell_nm(n, m))


def c_min_closed(sp):
    """1 / prod over Lambda-circle of (alpha*a + l + 1)."""
    den = (1,)
    for a, c in circ_factors(sp):
        den = pmul(den, (c, a))
    return AlphaRational((1,), den)


def c_min_factors(sp):
    """The linear factors (alpha coefficient, constant) of 1 / c_min, non-constant ones only."""
    return [(a, c) for a, c in circ_factors(sp) if a]


def verify_lemma2(sp):
    """Check the hooklength factorization relating d over tilde Lambda to Lambda-circle.

    Returns ``(holds, details)``.
    """
    n, m = sp.sector()
    N = default_N(sp)
    eta = tilde(sp, N)

    def d(cell):
        a, c = hook_d_coeffs(eta, cell)
        return (c, a)

    lhs = hook_product(eta)
    for part, mult in sp.symmetric.multiplicities().items():
        lhs = pmul(lhs, (factorial(mult),))
    circ = (1,)
    for a, c in circ_factors(sp):
        circ = pmul(circ, (c, a))
    rhs = (1,)
    for i in range(N - len(sp.symmetric) + 1, N + 1):
        rhs = pmul(rhs, d((i, 1)))
    for i in range(1, m + 1):
        for j in range(1, i):
            rhs = pmul(rhs, d((i, eta[j] + 1)))
    lhs_r = AlphaRational(lhs, circ)
    rhs_r = AlphaRational(rhs)
    return lhs_r == rhs_r, {"lhs": lhs_r, "rhs": rhs_r}


def verify_equacmin2(sp, with_expansion=None):
    """c_min from the good-configuration sum against the closed product (and the expansion).

    ``with_expansion`` defaults to True for |Lambda| <= 5, where full
    symmetrization is cheap.  Returns ``(holds, details)``.
    """
    from .identities.configurations import c_min_via_configurations

    if with_expansion is None:
        with_expansion = sp.degree <= 5
    conf = c_min_via_configurations(sp)
    closed = c_min_closed(sp)
    details = {"configurations": conf, "closed": closed}
    ok = conf == closed
    if with_expansion:
        details["expansion"] = c_min_via_expansion(sp)
        ok = ok and details["expansion"] == conf
    return ok, details


def p_tilde(k, N):
    """Sum_i theta_i x_i^k."""
    return orbit_sum(N, (k,), ())


def p_power(r, N):
    """Sum_i x_i^r."""
    return orbit_sum(N, (), (r,))


def power_sum(sp, N):
    """p_Lambda as an ordered product in the superalgebra."""
    out = SuperPolynomial.constant(N, 1)
    for k in sp.fermionic:
        out = out * p_tilde(k, N)
    for r in sp.symmetric.parts:
        out = out * p_power(r, N)
    return out


def powersum_basis(n, m, N):
    if N < ell_nm(n, m) + m:
        raise ValueError("N too small for the sector")
    return {sp: power_sum(sp, N) for sp in superpartitions(n, m)}


class SectorBasis:
    """Monomial-to-power-sum change of basis for one (n, m) sector."""

    def __init__(self, n, m, N=None):
        self.n, self.m = n, m
        self.N = max(ell_nm(n, m) + m, 1) if N is None else N
        self.sps = superpartitions(n, m)
        self.index = {sp: k for k, sp in enumerate(self.sps)}
        # column k: m-coordinates of p_{sps[k]}
        cols = []
        for sp in self.sps:
            canon = symmetrize_canonical_of_symmetric(power_sum(sp, self.N))
            cols.append([canon.get(t, R_ZERO) for t in self.sps])
        self.matrix = [[_to_fraction(cols[c][r]) for c in range(len(self.sps))] for r in range(len(self.sps))]

    def p_coordinates(self, m_coeffs):
        """Solve for p-basis coordinates of a vector given in m-basis coordinates."""
        for sp in m_coeffs:
            if sp not in self.index:
                raise ValueError(f"{sp} is outside sector ({self.n},{self.m})")
        rhs = [m_coeffs.get(sp, R_ZERO) for sp in self.sps]
        (sol,) = solve_rational(self.matrix, [rhs])
        return dict(zip(self.sps, sol))

    def pairing(self, f_m, g_m):
        fp = self.p_coordinates(f_m)
        gp = self.p_coordinates(g_m)
        sign = -1 if (self.m * (self.m - 1) // 2) % 2 else 1
        total = R_ZERO
        for sp in self.sps:
            if fp[sp].is_zero() or gp[sp].is_zero():
                continue
            total = total + fp[sp] * gp[sp] * z_lambda(sp) * sign
        return total


def _to_fraction(c):
    if not c.is_polynomial() or len(c.num) > 1:
        raise ValueError("power sums should have rational m-coordinates")
    return Fraction(c.num[0] if c.num else 0, c.den[0])


def symmetrize_canonical_of_symmetric(f):
    """m-basis coordinates of a symmetric polynomial read at canonical monomials."""
    out = {}
    for (th, ex), c in f.terms.items():
        m = len(th)
        if th != tuple(range(1, m + 1)):
            continue
        fer, sym = ex[:m], ex[m:]
        if any(fer[i] <= fer[i + 1] for i in range(m - 1)):
            continue
        if any(sym[i] < sym[i + 1] for i in range(len(sym) - 1)):
            continue
        out[_key_to_sp((fer, sym))] = c
    return out


_BASES = {}


def sector_basis(n, m):
    if (n, m) not in _BASES:
        _BASES[(n, m)] = SectorBasis(n, m)
    return _BASES[(n, m)]


def scalar_product(f, g):
    """<<f|g>>_alpha through p-basis expansion; f and g homogeneous of one sector."""
    fm = m_expansion(f)
    gm = m_expansion(g)
    sectors = {sp.sector() for sp in list(fm) + list(gm)}
    if not sectors:
        return R_ZERO
    if len(sectors) != 1:
        raise ValueError(f"arguments are not in a single sector: {sorted(sectors)}")
    n, m = sectors.pop()
    N = max(f.N, g.N)
    if N < ell_nm(n, m) + m:
        raise ValueError("too few variables for the power sums to span the sector")
    return SectorBasis(n, m, N).pairing(fm, gm)


def norm_rhs(sp, signed=False):
    """alpha^{m + ell_{n,m}} c_min(Lambda)(alpha) / c_min(Lambda')(1/alpha).

    With ``signed`` the value is multiplied by (-1)^{m(m-1)/2}, the sign that
    the scalar product carries on power sums with m fermionic factors.
    """
    n, m = sp.sector()
    value = ALPHA ** (m + ell_nm(n, m)) * c_min_closed(sp) / c_min_closed(conjugate(sp)).at_reciprocal()
    if signed and (m * (m - 1) // 2) % 2:
        value = -value
    return value


def verify_norm(sp, N=None, signed=False):
    """Compare <<J_Lambda|J_Omega>> against the closed norm over the whole sector.

    Returns ``(holds, mismatches)`` where each mismatch is
    ``(Lambda, Omega, computed, expected)``.
    """
    n, m = sp.sector()
    basis = sector_basis(n, m) if N is None else SectorBasis(n, m, N)
    mine = jack_super(sp, basis.N).m_basis
    bad = []
    for other in basis.sps:
        theirs = mine if other == sp else jack_super(other, basis.N).m_basis
        got = basis.pairing(mine, theirs)
        want = norm_rhs(sp, signed) if other == sp else R_ZERO
        if got != want:
            bad.append((sp, other, got, want))
    return not bad, bad


def verify_sector_norms(n, m, signed=False):
    """Gram matrix of the J's in one sector against the closed norm; returns mismatches."""
    basis = sector_basis(n, m)
    J = {sp: jack_super(sp, basis.N).m_basis for sp in basis.sps}
    bad = []
    for i, a in enumerate(basis.sps):
        for b in basis.sps[i:]:
            got = basis.pairing(J[a], J[b])
            want = norm_rhs(a, signed) if a == b else R_ZERO
            if got != want:
                bad.append((a, b, got, want))
    return bad


def is_symmetric(f):
    """Invariance under the adjacent transpositions, which generate S_N."""
    N = f.N
    for i in range(1, N):
        s = list(range(1, N + 1))
        s[i - 1], s[i] = s[i], s[i - 1]
        if apply_K(tuple(s), f) != f:
            return False
    return True


__all__ = [
    "JackExpansion",
    "SectorBasis",
    "c_min_closed",
    "c_min_via_expansion",
    "default_N",
    "extract_coeff",
    "from_m_expansion",
    "is_symmetric",
    "jack_super",
    "m_expansion",
    "monomial_basis",
    "norm_rhs",
    "power_sum",
    "powersum_basis",
    "scalar_product",
    "verify_equacmin2",
    "verify_lemma2",
    "verify_norm",
    "verify_sector_norms",
]
