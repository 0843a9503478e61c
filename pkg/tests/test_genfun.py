from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from youngbooks import combinat as cb
from youngbooks import formulas as fm
from youngbooks import genfun as gf
from youngbooks import shapes as sh
from youngbooks.genfun import MultiPoly

NV = 3


def polys():
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    exps = st.tuples(*[st.integers(0, 3)] * NV)
    return st.dictionaries(exps, coeff, max_size=5).map(lambda d: MultiPoly(NV, d))


# -- polynomial arithmetic -----------------------------------------------------------

@given(polys(), polys())
def test_addition_commutes(p, q):
    assert p + q == q + p


@given(polys(), polys(), polys())
def test_multiplication_distributes(p, q, w):
    assert p * (q + w) == p * q + p * w
    assert (p * q) * w == p * (q * w)


@given(polys())
def test_subtraction_cancels(p):
    assert (p - p).terms == {}
    assert p - 0 == p


@given(polys(), st.integers(0, 3))
def test_power_matches_repeated_product(p, k):
    expected = MultiPoly.constant(NV, 1)
    for _ in range(k):
        expected = expected * p
    assert p ** k == expected


@given(polys())
def test_json_round_trip(p):
    assert MultiPoly.from_json(p.to_json(), NV) == p


def test_text_form():
    t0, t1 = MultiPoly.variable(2, 0, offset=1), MultiPoly.variable(2, 1, offset=1)
    p = (t0 + t1) ** 2 / 2
    assert p.to_text() == "1/2 * t1^2 + 1 * t1^1 t2^1 + 1/2 * t2^2"
    assert p.is_homogeneous()
    assert p.coefficient((1, 1)) == 1


def test_bad_exponent_length():
    with pytest.raises(ValueError):
        MultiPoly(2, {(1,): 1})


def test_embed():
    p = MultiPoly.variable(1, 0)
    assert p.embed(3, 2).coefficient((0, 0, 1)) == 1


# -- book generating functions -------------------------------------------------------

def test_sb_two_is_t1():
    assert gf.sb_genfun(2, 1) == MultiPoly.variable(1, 0, offset=1)
    assert gf.yb_genfun(2, 1) == MultiPoly.variable(1, 0, offset=1)


def test_sb_three():
    p = gf.sb_genfun(3, 1)
    assert p == MultiPoly(2, {(2, 1): 1, (1, 2): 1}, offset=1)
    assert gf.exp_moment(p) == 4 == fm.sb_count(3, 1)
    assert gf.gap_count(p, (2, 1)) == 2


def test_yb_three():
    p = gf.yb_genfun(3, 1)
    assert p == MultiPoly(2, {(2, 1): Fraction(1, 2), (1, 2): Fraction(1, 2)}, offset=1)
    assert gf.exp_moment(p) == 2 == fm.yb_count(3, 1)
    assert gf.gap_count(p, (2, 1)) == 1


@pytest.mark.parametrize("n,m", [(n, m) for n in range(1, 5) for m in range(1, 4)])
def test_moments_recover_totals(n, m):
    assert gf.exp_moment(gf.sb_genfun(n, m)) == fm.sb_count(n, m)
    assert gf.exp_moment(gf.yb_genfun(n, m)) == fm.yb_count(n, m)


@pytest.mark.parametrize("n,m", [(2, 1), (2, 3), (3, 1), (3, 2), (4, 1)])
def test_staircase_genfun_against_enumeration(n, m):
    book = sh.staircase_book(n, m)
    for kind, poly in (("selberg", gf.sb_genfun(n, m)), ("young", gf.yb_genfun(n, m))):
        dist = cb.enumerate_gap_distribution(book, kind)
        assert sum(dist.values()) == gf.exp_moment(poly)
        for gaps, count in dist.items():
            assert gaps[0] == gaps[-1] == 0
            assert gf.gap_count(poly, gaps[1:-1]) == count


def test_nrs_one_b_cell():
    assert gf.sb_genfun_nrs(1, (1,), (0,)) == MultiPoly.variable(2, 0)


@pytest.mark.parametrize("n,rvec,svec", [(2, (1,), (1,)), (1, (1, 1), (0, 1)), (2, (1, 0), (0, 1)), (2, (0,), (2,))])
def test_nrs_genfun_against_enumeration(n, rvec, svec):
    book = sh.nrs_book(n, rvec, svec)
    dist = cb.enumerate_gap_distribution(book, "selberg")
    poly = gf.sb_genfun_nrs(n, rvec, svec)
    assert {g for g, c in dist.items()} == {g for g in poly.terms}
    for gaps, count in dist.items():
        assert gf.gap_count(poly, gaps) == count
    ydist = cb.enumerate_gap_distribution(book, "young")
    ypoly = gf.yb_genfun_nrs(n, rvec, svec)
    for gaps, count in ydist.items():
        assert gf.gap_count(ypoly, gaps) == count


@pytest.mark.parametrize("n,rvec,svec", [(2, (1,), (1,)), (1, (1, 1), (0, 1)), (2, (1, 0), (0, 1))])
def test_minus_genfun_against_enumeration(n, rvec, svec):
    book = sh.nrs_book(n, rvec, svec, minus=True)
    dist = cb.enumerate_gap_distribution(book, "selberg")
    poly = gf.sb_genfun_nrs(n, rvec, svec, corner=False)
    assert poly == gf.minus_genfun(n, sum(rvec), sum(svec), len(rvec))
    for gaps, count in dist.items():
        assert gf.gap_count(poly, gaps) == count


@given(st.integers(1, 3), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_minus_moment_is_permutation_count(n, r, s, m):
    assert gf.exp_moment(gf.minus_genfun(n, r, s, m)) == fm.sp_count(n, r, s, m)
    total = (r + s + 1) * n + m * comb(n, 2)
    assert gf.exp_moment(gf.minus_genfun(n, r, s, m)) == (
        Fraction(factorial(total), factorial(n)) * fm.selberg_combinatorial(n, r, s, m)
    )


def test_gap_count_must_be_integral():
    p = MultiPoly(1, {(1,): Fraction(1, 3)})
    with pytest.raises(fm.IntegralityError):
        gf.gap_count(p, (1,))
    assert gf.gap_count(p, (1,), integral=False) == Fraction(1, 3)
