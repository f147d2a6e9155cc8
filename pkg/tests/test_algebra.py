from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superjack.algebra import ALPHA, AlphaRational, MultiPoly, SuperPolynomial, apply_K, symmetrize, symmetrize_canonical
from superjack.algebra.linalg import det, det_bareiss, det_leibniz, det_minors, perm_sign, solve_rational
from superjack.algebra.ratfunc import pformat, pgcd
from superjack.algebra.superpoly import compose

# rational functions of alpha


def test_canonical_form_cancels_common_factor():
    r = AlphaRational((1, 1), (2, 2))
    assert (r.num, r.den) == ((1,), (2,))
    assert str(r) == "1 / 2"


def test_canonical_form_makes_denominator_leading_positive():
    r = AlphaRational((0, -2), (4, -2))
    assert (r.num, r.den) == ((0, 1), (-2, 1))
    assert r.format() == "alpha / (alpha - 2)"


def test_zero_is_zero_over_one():
    z = AlphaRational((0, 0), (3, 1))
    assert z.is_zero() and z.den == (1,)


def test_zero_denominator_raises():
    with pytest.raises(ZeroDivisionError):
        AlphaRational((1,), (0,))


def test_latex_rendering():
    r = AlphaRational((1,), (5, 3))
    assert r.format(latex=True) == r"\frac{1}{3 \alpha + 5}"


def test_at_reciprocal():
    # (alpha + 2) / (3 alpha + 1) at 1/alpha is (2 alpha + 1) / (alpha + 3)
    r = AlphaRational((2, 1), (1, 3))
    assert r.at_reciprocal() == AlphaRational((1, 2), (3, 1))


def test_pgcd_finds_linear_factor():
    # (alpha+1)(alpha+2) and (alpha+1)(alpha+3)
    g = pgcd((2, 3, 1), (3, 4, 1))
    assert AlphaRational(g) == AlphaRational((1, 1)) or AlphaRational(g) == AlphaRational((-1, -1))


def test_pformat_text():
    assert pformat((5, 3)) == "3*alpha + 5"
    assert pformat((0, 0, 1)) == "alpha^2"


small = st.integers(min_value=-4, max_value=4)
polys = st.lists(small, min_size=1, max_size=3).map(tuple)


@st.composite
def rationals(draw):
    num = draw(polys)
    den = draw(polys.filter(lambda p: any(p)))
    return AlphaRational(num, den)


@settings(max_examples=60, deadline=None)
@given(rationals(), rationals(), rationals())
def test_field_associativity_and_distributivity(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@settings(max_examples=60, deadline=None)
@given(rationals())
def test_json_round_trip(x):
    assert AlphaRational.from_json(x.to_json()) == x


@settings(max_examples=60, deadline=None)
@given(rationals())
def test_inverse(x):
    if not x.is_zero():
        assert x * x.inverse() == 1


@settings(max_examples=40, deadline=None)
@given(rationals(), st.integers(min_value=1, max_value=5))
def test_evaluation_is_a_homomorphism(x, k):
    y = x * x + ALPHA
    try:
        assert y.evaluate(k) == x.evaluate(k) ** 2 + k
    except ZeroDivisionError:
        pass


def test_from_fraction():
    assert AlphaRational.from_fraction(Fraction(3, 6)) == AlphaRational((1,), (2,))


# multivariate polynomials


def test_multipoly_format_and_json():
    p = MultiPoly.a(3, 1) + MultiPoly.b(3, 2)
    assert str(p) == "a_1 + b_2"
    assert MultiPoly.from_json(p.to_json()) == p
    assert (p * p).format(latex=True) == "a_{1}^{2} + 2 a_{1} b_{2} + b_{2}^{2}"


def test_multipoly_exact_division():
    m = 3
    f = MultiPoly.linear(m, 2, None, 1) - MultiPoly.a(m, 1)
    g = f * (MultiPoly.a(m, 3) + MultiPoly.b(m, 1))
    assert g.exact_div(f) == MultiPoly.a(m, 3) + MultiPoly.b(m, 1)
    with pytest.raises(ArithmeticError):
        (g + MultiPoly.one(m)).exact_div(f)


def test_substitute_b():
    m = 3
    p = MultiPoly.a(m, 2) + MultiPoly.b(m, 1)
    q = p.substitute_b({1: 1})  # b_1 <- 1 - a_1
    assert q == MultiPoly.a(m, 2) - MultiPoly.a(m, 1) + MultiPoly.const(m, 1)


def test_shift_b():
    m = 4
    p = MultiPoly.b(m, 1) * MultiPoly.b(m, 2)
    assert p.shift_b() == MultiPoly.b(m, 2) * MultiPoly.b(m, 3)


@st.composite
def multipolys(draw, m=2):
    terms = draw(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 1), small), max_size=4))
    p = MultiPoly.zero(m)
    for e1, e2, e3, c in terms:
        p = p + MultiPoly.const(m, c) * MultiPoly.a(m, 1) ** e1 * MultiPoly.a(m, 2) ** e2 * MultiPoly.b(m, 1) ** e3
    return p


@settings(max_examples=50, deadline=None)
@given(multipolys(), multipolys(), multipolys())
def test_multipoly_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == MultiPoly.zero(2)


# superpolynomials


def test_theta_squares_to_zero():
    f = SuperPolynomial.theta(2, 1) * SuperPolynomial.x(2, 2)
    assert (f * f).is_zero()


def test_theta_anticommute():
    t1, t2 = SuperPolynomial.theta(2, 1), SuperPolynomial.theta(2, 2)
    assert t1 * t2 == -(t2 * t1)


def test_superpoly_json_round_trip():
    f = SuperPolynomial.theta(3, 2) * SuperPolynomial.x(3, 1, 2) + SuperPolynomial.x(3, 3).scale(ALPHA)
    assert SuperPolynomial.from_json(f.to_json()) == f


def test_K_action_on_theta_product_gives_sign():
    f = SuperPolynomial.theta(2, 1) * SuperPolynomial.theta(2, 2)
    assert apply_K((2, 1), f) == -f


def test_symmetrize_of_theta1_x2():
    f = SuperPolynomial.theta(2, 1) * SuperPolynomial.x(2, 2)
    g = symmetrize(f)
    expected = SuperPolynomial.theta(2, 1) * SuperPolynomial.x(2, 2) + SuperPolynomial.theta(2, 2) * SuperPolynomial.x(2, 1)
    assert g == expected


def _random_superpoly(seed_terms, N=3):
    f = SuperPolynomial(N)
    for th, ex, c in seed_terms:
        f = f + SuperPolynomial.monomial(N, th, ex, c)
    return f


superpoly_terms = st.lists(
    st.tuples(
        st.sampled_from([(), (1,), (2,), (1, 2), (1, 3)]),
        st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
        st.integers(-3, 3).filter(bool),
    ),
    max_size=3,
)


@settings(max_examples=40, deadline=None)
@given(superpoly_terms, st.permutations([1, 2, 3]), st.permutations([1, 2, 3]))
def test_K_is_a_group_action(terms, sigma, tau):
    f = _random_superpoly(terms)
    sigma, tau = tuple(sigma), tuple(tau)
    assert apply_K(sigma, apply_K(tau, f)) == apply_K(compose(sigma, tau), f)


@settings(max_examples=30, deadline=None)
@given(superpoly_terms, superpoly_terms, st.permutations([1, 2, 3]))
def test_K_is_multiplicative(t1, t2, sigma):
    f, g = _random_superpoly(t1), _random_superpoly(t2)
    sigma = tuple(sigma)
    assert apply_K(sigma, f * g) == apply_K(sigma, f) * apply_K(sigma, g)


@settings(max_examples=30, deadline=None)
@given(superpoly_terms)
def test_orbit_symmetrization_matches_direct_sum(terms):
    f = _random_superpoly(terms)
    direct = symmetrize(f)
    canon = symmetrize_canonical(f)
    for (fer, sym), c in canon.items():
        assert direct.coefficient(tuple(range(1, len(fer) + 1)), fer + sym) == c


# linear algebra


def test_perm_sign():
    assert perm_sign((0, 1, 2)) == 1
    assert perm_sign((1, 0, 2)) == -1
    assert perm_sign((1, 2, 0)) == 1


def test_det_integer():
    assert det([[1, 2], [3, 4]]) == -2
    assert det_bareiss([[2, 0, 1], [1, 3, 2], [1, 1, 1]]) == det_leibniz([[2, 0, 1], [1, 3, 2], [1, 1, 1]])


def test_det_polynomial_vandermonde():
    m = 3
    a = [MultiPoly.a(m, i) for i in range(1, m + 1)]
    one = MultiPoly.one(m)
    M = [[one, one, one], a, [x * x for x in a]]
    want = (a[1] - a[0]) * (a[2] - a[0]) * (a[2] - a[1])
    assert det_minors(M, one) == want
    assert det_leibniz(M, one) == want
    assert det(M, one) == want


int_matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)
)


@settings(max_examples=60, deadline=None)
@given(int_matrices)
def test_determinant_algorithms_agree(M):
    d = det_leibniz(M)
    assert det_bareiss(M) == d
    assert det_minors(M) == d


def test_solve_rational():
    A = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
    rhs = [AlphaRational.from_int(3), ALPHA]
    (x,) = solve_rational(A, [rhs])
    assert 2 * x[0] + x[1] == 3
    assert x[0] + 3 * x[1] == ALPHA


def test_solve_rational_singular():
    A = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    with pytest.raises((ValueError, ZeroDivisionError, ArithmeticError)):
        solve_rational(A, [[AlphaRational.from_int(1), AlphaRational.from_int(1)]])


def test_permutations_sanity():
    assert sum(perm_sign(p) for p in permutations(range(4))) == 0
