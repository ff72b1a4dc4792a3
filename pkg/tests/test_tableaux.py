from math import comb

import pytest

from filtquiv.errors import PreconditionError
from filtquiv.filtrep import RepConfig, build_general_rep, is_invariant
from filtquiv.polyring import Polynomial, coord
from filtquiv.quiver import FramedQuiver, make_family
from filtquiv.tableaux import (
    Bitableau,
    BitableauRow,
    Partition,
    Tableau,
    block_standard_terms,
    enumerate_row_generators,
    eval_bideterminant,
    grosshans_basis_check,
    is_block_standard,
    lemma48_check,
    seq_leq,
    standard_tableaux,
    tableau_class,
)


def x(i, j):
    return Polynomial.var(coord("a0", i, j))


def a(i, j):
    return Polynomial.var(coord("a1", i, j))


def test_partition():
    assert Partition((5, 3, 3, 1)).size == 12
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Tableau(((1,), (1, 2)))


def test_tableau_class_examples():
    J = Tableau(((1, 2, 4), (2, 4), (1, 4)))
    I = Tableau(((1, 2, 4), (2, 4), (2, 5)))
    assert tableau_class(J) == (True, False)
    assert tableau_class(I) == (True, True)
    assert tableau_class(Tableau(((1, 2, 3),))) == (True, True)
    assert tableau_class(Tableau(((2, 1),))) == (False, False)


def test_seq_leq_examples():
    assert seq_leq([0], [1, 0])
    assert not seq_leq([1, 0], [0])
    assert seq_leq([1, 0], [2, 0])
    assert not seq_leq([2, 0], [1, 0])
    assert seq_leq([2, 1, 0], [1, 2, 0])
    assert seq_leq([1, 1, 0], [1, 1, 0])


def test_row_text_round_trip():
    r = BitableauRow((1, 2), (1, 3), (1, 0))
    assert str(r) == "(1 2 | 1 3)@[1,0]"
    assert BitableauRow.parse(str(r)) == r
    bt = Bitableau((BitableauRow((2,), (1,)), r))
    assert Bitableau.from_text(bt.to_text()) == bt
    with pytest.raises(ValueError):
        BitableauRow((1,), (1,), (1,))
    with pytest.raises(ValueError):
        BitableauRow((1, 2), (1,))


MIXED_FIXTURE = Bitableau.from_text("(2 | 1)@[0]\n(2 | 2)@[0]\n(1 2 | 1 2)@[1,0]\n(2 | 1)@[1,0]")


def _example_rep():
    # framed A1: a0 : 1' -> 1, a1 : 1 -> 2, with n = m = 2
    fq = FramedQuiver(make_family("EquiorientedA", 1))
    return fq, build_general_rep(RepConfig(fq, 2, 2))


def test_mixed_label_fixture_value():
    fq, rep = _example_rep()
    expected = (
        x(2, 1) ** 2 * x(2, 2) * a(1, 1) * a(2, 2) ** 2 * (x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1))
    )
    assert eval_bideterminant(MIXED_FIXTURE, rep) == expected
    assert is_block_standard(MIXED_FIXTURE)


def test_empty_bitableau_is_one():
    _, rep = _example_rep()
    assert eval_bideterminant(Bitableau(), rep) == Polynomial.one


def test_block_standard_rejections():
    wrong_order = Bitableau((BitableauRow((1,), (1,), (1, 0)), BitableauRow((2,), (1,), (0,))))
    assert not is_block_standard(wrong_order)
    bad_block = Bitableau((BitableauRow((2,), (2,)), BitableauRow((2,), (1,))))
    assert not is_block_standard(bad_block)
    ragged = Bitableau((BitableauRow((2,), (1,)), BitableauRow((1, 2), (1, 2))))
    assert not is_block_standard(ragged)


def test_eval_rejects_bad_label():
    _, rep = _example_rep()
    with pytest.raises(ValueError):
        eval_bideterminant(Bitableau((BitableauRow((1,), (1,), (5, 0)),)), rep)


def test_row_generators_point_quiver():
    fq = FramedQuiver(make_family("Jordan", 0))
    rep = build_general_rep(RepConfig(fq, 2, 2))
    rows = enumerate_row_generators(fq, rep, 2, 2)
    assert [str(r) for r in rows] == ["(1 2 | 1 2)@[0]", "(2 | 1)@[0]", "(2 | 2)@[0]"]


def test_row_generators_respect_m():
    fq = FramedQuiver(make_family("EquiorientedA", 1))
    rep = build_general_rep(RepConfig(fq, 3, 1))
    rows = enumerate_row_generators(fq, rep, 3, 1)
    assert all(r.j == (3,) for r in rows)
    assert [r.label for r in rows] == [(0,), (1, 0)]


def test_row_generators_precondition():
    fq = FramedQuiver(make_family("Jordan", 2))
    rep = build_general_rep(RepConfig(fq, 2, 1))
    with pytest.raises(PreconditionError):
        enumerate_row_generators(fq, rep, 2, 1)


def test_generators_are_invariant():
    fq = FramedQuiver(make_family("EquiorientedA", 1))
    rep = build_general_rep(RepConfig(fq, 2, 2))
    for t in block_standard_terms(fq, rep, 2):
        assert is_invariant(rep, t.poly)


def test_block_standard_terms_are_block_standard_and_bounded():
    fq = FramedQuiver(make_family("Jordan", 0))
    rep = build_general_rep(RepConfig(fq, 2, 2))
    terms = block_standard_terms(fq, rep, 3)
    assert all(is_block_standard(t.bitableau) for t in terms)
    assert all(t.poly.degree() <= 3 for t in terms)
    assert len({t.key for t in terms}) == len(terms)


@pytest.mark.parametrize("n, m, p", [(2, 2, 1), (2, 1, 2), (3, 3, 1), (3, 2, 2)])
def test_suffix_minor_character(n, m, p):
    assert lemma48_check(n, m, p)
    assert lemma48_check(n, m, p, unipotent=True)


def test_suffix_minor_character_rejects():
    with pytest.raises(ValueError):
        lemma48_check(2, 1, 1)
    with pytest.raises(ValueError):
        lemma48_check(2, 2, 3)


def test_standard_tableaux_counts():
    # single row of length k with entries <= b: C(b, k); 2x1 column shape: b(b+1)/2
    assert len(standard_tableaux((2,), 4)) == comb(4, 2)
    assert len(standard_tableaux((1, 1), 3)) == 6
    for T in standard_tableaux((2, 1), 3):
        assert tableau_class(T)[1]


@pytest.mark.parametrize("n, m, d", [(1, 1, 3), (2, 2, 2), (2, 1, 3)])
def test_standard_basis_small(n, m, d):
    r = grosshans_basis_check(n, m, d)
    assert r.passed
    assert r.expected == comb(n * m + d, d)


def test_swapped_blocks_not_block_standard():
    rows = MIXED_FIXTURE.rows
    assert not is_block_standard(Bitableau(rows[2:] + rows[:2]))


def test_single_row_value():
    _, rep = _example_rep()
    assert eval_bideterminant(Bitableau.from_text("(2 | 1)@[0]"), rep) == x(2, 1)


def test_row_generators_framed_a1():
    fq, rep = _example_rep()
    rows = enumerate_row_generators(fq, rep, 2, 2)
    assert [str(r) for r in rows] == [
        "(1 2 | 1 2)@[0]",
        "(2 | 1)@[0]",
        "(2 | 2)@[0]",
        "(1 2 | 1 2)@[1,0]",
        "(2 | 1)@[1,0]",
        "(2 | 2)@[1,0]",
    ]


def test_block_standard_small_degrees():
    fq = FramedQuiver(make_family("Jordan", 0))
    rep = build_general_rep(RepConfig(fq, 2, 2))
    assert [t.poly for t in block_standard_terms(fq, rep, 0)] == [Polynomial.one]
    assert {t.poly for t in block_standard_terms(fq, rep, 1)} == {Polynomial.one, x(2, 1), x(2, 2)}


def test_block_standard_framed_a1_m1():
    fq = FramedQuiver(make_family("EquiorientedA", 1))
    rep = build_general_rep(RepConfig(fq, 2, 1))
    polys = {t.poly for t in block_standard_terms(fq, rep, 2)}
    assert a(1, 1) * x(2, 1) in polys
    assert a(2, 2) * x(2, 1) in polys
