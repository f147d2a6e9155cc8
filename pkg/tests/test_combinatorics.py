import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superjack.algebra import AlphaRational
from superjack.combinatorics import (
    Composition,
    Partition,
    Superpartition,
    all_superpartitions,
    arm_leg_circ,
    circ_factors,
    compositions,
    conjugate,
    ell_nm,
    f_lambda_s,
    format_star,
    hook_d,
    lambda_min,
    star,
    superpartitions,
    tilde,
    z_lambda,
)

SP = Superpartition.parse


def test_parse_and_print_round_trip():
    for text in ["(3,1,0;5,3,2)", "(0;)", "(;2,1)", "(;)", "(2,0;2)"]:
        assert str(SP(text)) == text


def test_parse_drops_symmetric_zeros():
    assert SP("(1;2,0,0)") == SP("(1;2)")


@pytest.mark.parametrize("bad", ["(1,1;)", "(0,1;)", "(1;1,2)", "(1;", "1;2", "(-1;)", "(a;)"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        SP(bad)


def test_sector_and_length():
    sp = SP("(3,1,0;5,3,2)")
    assert sp.sector() == (14, 3)
    assert sp.length == 6


def test_star():
    assert format_star(SP("(3,1,0;5,3,2)")) == "(5,3,3,2,1,0)"
    assert star(SP("(3,1,0;5,3,2)")) == Partition((5, 3, 3, 2, 1))
    assert star(SP("(0;)")) == Partition(())
    assert star(SP("(2,0;2)")) == Partition((2, 2))


def test_diagram_rows():
    assert SP("(3,1,0;5,3,2)").diagram.rows == ((5, False), (3, True), (3, False), (2, False), (1, True), (0, True))
    assert SP("(0;)").diagram.rows == ((0, True),)
    assert SP("(1;1)").diagram.rows == ((1, True), (1, False))


def test_diagram_render():
    assert SP("(3,1,0;5,3,2)").diagram.render() == "#####\n###O\n###\n##\n#O\nO"


def test_conjugate_examples():
    assert conjugate(SP("(3,1,0;5,3,2)")) == SP("(5,4,1;3,1)")
    assert conjugate(SP("(0;)")) == SP("(0;)")


def test_conjugate_is_an_involution():
    for sp in all_superpartitions(6):
        assert conjugate(conjugate(sp)) == sp
        assert conjugate(sp).sector() == sp.sector()


def test_lambda_min():
    assert lambda_min(11, 3) == SP("(2,1,0;1,1,1,1,1,1,1,1)")
    assert lambda_min(0, 1) == SP("(0;)")
    assert lambda_min(2, 2) == SP("(1,0;1)")
    assert ell_nm(11, 3) == 8
    with pytest.raises(ValueError):
        lambda_min(0, 2)


def test_tilde():
    assert tilde(SP("(3,1,0;5,3,3)"), 8).parts == (0, 1, 3, 0, 0, 3, 3, 5)
    assert tilde(SP("(0;)"), 1).parts == (0,)
    assert tilde(SP("(1;1)"), 3).parts == (1, 0, 1)
    with pytest.raises(ValueError):
        tilde(SP("(1;1,1)"), 2)


def test_hook_d():
    assert hook_d(Composition((1,)), (1, 1)) == AlphaRational.linear(1, 1)
    assert hook_d(Composition((0, 1, 3, 0, 0, 6, 2, 5)), (6, 1)) == AlphaRational.linear(6, 8)
    assert hook_d(Composition((1, 0)), (1, 1)) == AlphaRational.linear(1, 1)
    assert hook_d(Composition((0, 1)), (2, 1)) == AlphaRational.linear(1, 2)


def test_circ_factors_worked_example():
    got = sorted(circ_factors(SP("(3,1,0;4,2,1)")))
    want = sorted([(3, 5), (2, 3), (1, 2), (0, 1), (1, 1), (1, 3), (0, 1), (0, 1)])
    assert got == want


def test_circ_empty_cases():
    assert arm_leg_circ(SP("(0;)")) == {}
    assert arm_leg_circ(SP("(1,0;)")) == {}


def test_f_lambda_s():
    assert f_lambda_s(SP("(0;)"), 3) == 2
    assert f_lambda_s(SP("(;2,1)"), 2) == 1
    assert f_lambda_s(SP("(1;1)"), 3) == 1


def test_z_lambda():
    assert z_lambda(SP("(0;)")) == AlphaRational.poly((0, 1))
    assert z_lambda(SP("(;2)")) == AlphaRational.poly((0, 2))
    assert z_lambda(SP("(1,0;1)")) == AlphaRational.poly((0, 0, 0, 1))
    assert z_lambda(SP("(1,0;1,1)")) == AlphaRational.poly((0, 0, 0, 0, 2))


def test_superpartition_counts():
    # m = 1 column: 1, 2, 4, 7, 12, 19
    assert [len(superpartitions(n, 1)) for n in range(6)] == [1, 2, 4, 7, 12, 19]
    assert [len(superpartitions(n, 0)) for n in range(6)] == [1, 1, 2, 3, 5, 7]
    assert [len(superpartitions(n, 2)) for n in range(6)] == [0, 1, 2, 5, 9, 17]


def test_superpartitions_are_distinct_and_in_sector():
    for n in range(6):
        for m in range(4):
            sps = superpartitions(n, m)
            assert len(set(sps)) == len(sps)
            assert all(sp.sector() == (n, m) for sp in sps)


def test_compositions():
    assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert list(compositions(0, 0)) == [()]


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=1, max_size=5))
def test_composition_cells_count_size(parts):
    eta = Composition(tuple(parts))
    assert len(list(eta.cells())) == eta.size == sum(parts)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(all_superpartitions(6)))
def test_conjugation_swaps_arm_and_leg(sp):
    # circle cells are part of both diagrams, so |Lambda-circle| is conjugation-invariant
    assert len(arm_leg_circ(sp)) == len(arm_leg_circ(conjugate(sp)))
