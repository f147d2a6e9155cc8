from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superjack.algebra import AlphaRational, SuperPolynomial
from superjack.combinatorics import Composition
from superjack.nonsym import (
    AdmissibleTableau,
    E,
    critical_weight,
    enumerate_admissible,
    first_column_fillings,
    is_admissible,
    is_admissible_T0,
)

R = AlphaRational


def tableaux(parts):
    return [T.format() for T in enumerate_admissible(Composition(parts))]


def test_tableaux_of_10():
    assert tableaux((1, 0)) == ["1/.", "2/."]


def test_tableaux_of_01():
    assert tableaux((0, 1)) == ["./2"]


def test_tableaux_of_zero_composition():
    assert tableaux((0, 0, 0)) == ["././."]


def test_tableaux_of_021_frozen():
    assert tableaux((0, 2, 1)) == ["./2,1/3", "./2,2/3", "./2,3/3"]


def test_critical_weights():
    eta = Composition((1, 0))
    assert critical_weight(AdmissibleTableau(eta, ((1,), ()))) == R.linear(1, 1)
    assert critical_weight(AdmissibleTableau(eta, ((2,), ()))) == R.from_int(1)
    eta = Composition((0, 1))
    assert critical_weight(AdmissibleTableau(eta, ((), (2,)))) == R.linear(1, 2)


def test_E_examples():
    assert E((0, 0)) == SuperPolynomial.constant(2, 1)
    x1, x2 = SuperPolynomial.x(2, 1), SuperPolynomial.x(2, 2)
    assert E((1, 0)) == x1 + x2.scale(R((1,), (1, 1)))
    assert E((0, 1)) == x2


def test_E_20_frozen():
    x1, x2 = SuperPolynomial.x(2, 1), SuperPolynomial.x(2, 2)
    want = x1 * x1 + (x1 * x2).scale(R((2,), (1, 2))) + (x2 * x2).scale(R((1,), (1, 2)))
    assert E((2, 0)) == want


def test_E_text_rendering():
    assert E((1, 0)).format() == "(1 / (alpha + 1)) * x2 + (1) * x1"


def _brute_force_admissible(parts):
    eta = Composition(parts)
    cells = list(eta.cells())
    found = []
    for values in product(range(1, eta.N + 1), repeat=len(cells)):
        rows = [[] for _ in parts]
        for (i, j), v in sorted(zip(cells, values)):
            rows[i - 1].append(v)
        T = AdmissibleTableau(eta, tuple(tuple(r) for r in rows))
        if is_admissible(T):
            found.append(T)
    return found


@pytest.mark.parametrize("parts", [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2, 1), (1, 0, 2), (2, 1, 0), (1, 1, 1), (0, 0, 3)])
def test_enumeration_matches_brute_force(parts):
    got = list(enumerate_admissible(Composition(parts)))
    assert len(got) == len(set(got))
    assert set(got) == set(_brute_force_admissible(parts))


@pytest.mark.parametrize("parts", [(2, 0, 1), (1, 2, 0), (0, 1, 1, 1)])
def test_column_zero_characterization(parts):
    for T in enumerate_admissible(Composition(parts)):
        assert is_admissible_T0(T)


def test_parallel_matches_serial():
    eta = (1, 0, 2, 1)
    assert E(eta, jobs=2) == E(eta, jobs=1)
    fills = first_column_fillings(Composition(eta))
    assert len(fills) == len(set(fills))


small_compositions = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.integers(0, 3), min_size=n, max_size=n).filter(lambda p: sum(p) <= 5)
)


@settings(max_examples=25, deadline=None)
@given(small_compositions)
def test_leading_coefficient_is_one(parts):
    p = E(tuple(parts))
    assert p.coefficient((), tuple(parts)) == 1


@settings(max_examples=25, deadline=None)
@given(small_compositions)
def test_E_is_homogeneous_of_degree_size(parts):
    p = E(tuple(parts))
    assert all(sum(ex) == sum(parts) and th == () for th, ex in p.terms)
