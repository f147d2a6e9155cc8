import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superjack.algebra import ALPHA, AlphaRational, SuperPolynomial
from superjack.combinatorics import Superpartition, all_superpartitions, conjugate, superpartitions
from superjack.jack import (
    JackExpansion,
    SectorBasis,
    c_min_closed,
    c_min_factors,
    c_min_via_expansion,
    default_N,
    extract_coeff,
    is_symmetric,
    jack_super,
    m_expansion,
    monomial_basis,
    norm_rhs,
    power_sum,
    scalar_product,
    sector_basis,
    verify_equacmin2,
    verify_lemma2,
    verify_norm,
    verify_sector_norms,
)

SP = Superpartition.parse
R = AlphaRational


def coeffs(text, N=None):
    return {str(k): v for k, v in jack_super(SP(text), N).m_basis.items()}


# monomial basis and power sums


def test_monomial_basis_examples():
    t1, t2 = SuperPolynomial.theta(2, 1), SuperPolynomial.theta(2, 2)
    assert monomial_basis(SP("(0;)"), 2) == t1 + t2
    assert monomial_basis(SP("(;1)"), 2) == SuperPolynomial.x(2, 1) + SuperPolynomial.x(2, 2)


def test_monomial_basis_direct_matches_orbit_listing():
    for sp in all_superpartitions(4):
        N = max(sp.length, 1)
        assert monomial_basis(sp, N) == monomial_basis(sp, N, direct=True)


def test_monomial_normalization():
    for sp in all_superpartitions(4):
        N = max(sp.length, 1)
        assert extract_coeff(monomial_basis(sp, N), tuple(range(1, sp.m + 1)), sp.exponent(N)) == 1


def test_power_sum_p11():
    N = 3
    lhs = power_sum(SP("(1;1)"), N)
    theta_x = sum((SuperPolynomial.theta(N, i) * SuperPolynomial.x(N, i) for i in range(2, N + 1)),
                  SuperPolynomial.theta(N, 1) * SuperPolynomial.x(N, 1))
    xs = sum((SuperPolynomial.x(N, i) for i in range(2, N + 1)), SuperPolynomial.x(N, 1))
    assert lhs == theta_x * xs


def test_scalar_product_on_power_sums():
    assert scalar_product(power_sum(SP("(0;)"), 1), power_sum(SP("(0;)"), 1)) == ALPHA
    assert scalar_product(power_sum(SP("(;1)"), 1), power_sum(SP("(;1)"), 1)) == ALPHA


def test_scalar_product_power_sums_orthogonal():
    basis = SectorBasis(3, 1)
    for a in basis.sps:
        for b in basis.sps:
            fa = m_expansion(power_sum(a, basis.N))
            fb = m_expansion(power_sum(b, basis.N))
            got = basis.pairing(fa, fb)
            assert got.is_zero() == (a != b)


def test_m_expansion_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        m_expansion(SuperPolynomial.x(2, 1))


# Jack polynomials


def test_bosonic_sector_reproduces_classical_jack():
    assert coeffs("(;2)") == {"(;2)": R.from_int(1), "(;1,1)": R((2,), (1, 1))}
    assert coeffs("(;3)") == {
        "(;3)": R.from_int(1),
        "(;2,1)": R((3,), (1, 2)),
        "(;1,1,1)": R((6,), (1, 3, 2)),
    }
    assert coeffs("(;1,1)") == {"(;1,1)": R.from_int(1)}


def test_fermionic_examples_frozen():
    assert coeffs("(0;)", 2) == {"(0;)": R.from_int(1)}
    assert coeffs("(1;)") == {"(1;)": R.from_int(1), "(0;1)": R((1,), (1, 1))}
    assert coeffs("(1;1)") == {"(1;1)": R.from_int(1), "(0;1,1)": R((2,), (2, 1))}
    assert coeffs("(2;)") == {
        "(2;)": R.from_int(1),
        "(1;1)": R((2,), (1, 2)),
        "(0;2)": R((1,), (1, 2)),
        "(0;1,1)": R((2,), (1, 3, 2)),
    }
    assert coeffs("(2,0;)") == {"(2,0;)": R.from_int(1), "(1,0;1)": R((1,), (1, 1))}


def test_jack_zero_superpartition_is_sum_of_thetas():
    J = jack_super(SP("(0;)"), 2)
    assert J.poly == SuperPolynomial.theta(2, 1) + SuperPolynomial.theta(2, 2)


def test_jack_is_symmetric_and_monic():
    for sp in all_superpartitions(3):
        J = jack_super(sp)
        assert is_symmetric(J.poly)
        assert J.coefficient(sp) == 1


def test_direct_symmetrization_matches_orbit_counting():
    for sp in all_superpartitions(3):
        assert jack_super(sp, direct=True).m_basis == jack_super(sp).m_basis


def test_jack_is_stable_in_N():
    for sp in all_superpartitions(3):
        N = default_N(sp)
        assert jack_super(sp, N + 1).m_basis == jack_super(sp, N).m_basis


def test_jack_rejects_small_N():
    with pytest.raises(ValueError):
        jack_super(SP("(1;1,1)"), 2)


def test_json_round_trip():
    J = jack_super(SP("(2;)"))
    text = json.dumps(J.to_json(), sort_keys=True)
    back = JackExpansion.from_json(json.loads(text))
    assert back.index == J.index and back.N == J.N and back.m_basis == J.m_basis
    assert json.loads(text)["m_basis"][0] == {"superpartition": "(2;)", "coeff_num": [1], "coeff_den": [1]}


def test_parallel_matches_serial():
    sp = SP("(2,0;1)")
    assert jack_super(sp, jobs=2).m_basis == jack_super(sp, jobs=1).m_basis


# minimal coefficient


def test_c_min_examples():
    assert c_min_via_expansion(SP("(0;)")) == 1
    assert c_min_via_expansion(SP("(1;1)")) == R((1,), (2, 1))
    assert c_min_via_expansion(SP("(;2)")) == R((1,), (1, 1))
    assert c_min_closed(SP("(0;)")) == 1
    assert c_min_closed(SP("(1;1)")) == R((1,), (2, 1))


def test_c_min_worked_example():
    sp = SP("(3,1,0;4,2,1)")
    want = R((1,), (90, 279, 335, 195, 55, 6))
    assert c_min_closed(sp) == want
    assert c_min_factors(sp) == [(3, 5), (2, 3), (1, 2), (1, 1), (1, 3)]


@pytest.mark.parametrize("sp", all_superpartitions(4), ids=str)
def test_c_min_expansion_matches_closed(sp):
    assert c_min_via_expansion(sp) == c_min_closed(sp)


def test_lemma2_examples_and_sweep():
    assert verify_lemma2(SP("(0;)"))[0]
    assert verify_lemma2(SP("(1;1)"))[0]
    assert all(verify_lemma2(sp)[0] for sp in all_superpartitions(5))


def test_equacmin2_examples():
    for text in ["(0;)", "(1,0;)", "(2,1;1)"]:
        ok, details = verify_equacmin2(SP(text))
        assert ok, details
    ok, details = verify_equacmin2(SP("(3,1,0;4,2,1)"), with_expansion=False)
    assert ok and details["configurations"] == R((1,), (90, 279, 335, 195, 55, 6))


# norm


def test_norm_of_zero_superpartition():
    basis = sector_basis(0, 1)
    J = jack_super(SP("(0;)"), basis.N).m_basis
    assert basis.pairing(J, J) == ALPHA
    assert norm_rhs(SP("(0;)")) == ALPHA
    assert verify_norm(SP("(0;)"))[0]
    assert verify_norm(SP("(;1)"))[0]


def test_norm_rhs_signed_differs_exactly_when_sign_is_negative():
    for sp in all_superpartitions(4):
        flip = (sp.m * (sp.m - 1) // 2) % 2 == 1
        assert norm_rhs(sp, signed=True) == (-1 if flip else 1) * norm_rhs(sp)


def test_literal_norm_formula_fails_on_two_fermions():
    # <<J|J>> carries the factor (-1)^{m(m-1)/2} of the power-sum pairing
    ok, bad = verify_norm(SP("(1,0;)"))
    assert not ok
    (sp, other, got, want) = bad[0]
    assert got == -want
    assert verify_norm(SP("(1,0;)"), signed=True)[0]


@pytest.mark.parametrize("n,m", [(n, m) for n in range(4) for m in range(4) if m * (m - 1) // 2 <= n])
def test_signed_norm_and_orthogonality(n, m):
    assert verify_sector_norms(n, m, signed=True) == []


def test_conjugate_c_min_at_reciprocal_is_well_defined():
    for sp in all_superpartitions(4):
        assert not c_min_closed(conjugate(sp)).at_reciprocal().is_zero()


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(all_superpartitions(4)))
def test_m_expansion_inverts_from_m_expansion(sp):
    J = jack_super(sp)
    assert m_expansion(J.poly) == J.m_basis


def test_sector_listing_matches_basis():
    assert sector_basis(3, 1).sps == superpartitions(3, 1)
