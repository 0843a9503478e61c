from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import assume, given, strategies as st

from youngbooks import combinat as cb
from youngbooks import formulas as fm
from youngbooks import shapes as sh

partitions = st.lists(st.integers(1, 5), min_size=1, max_size=4).map(lambda xs: tuple(sorted(xs, reverse=True)))
strict_partitions = st.sets(st.integers(1, 5), min_size=1, max_size=4).map(lambda xs: tuple(sorted(xs, reverse=True)))


# -- small helpers ------------------------------------------------------------------

@pytest.mark.parametrize("n,expected", [(-1, 1), (0, 1), (1, 1), (2, 2), (5, 15), (6, 48), (9, 945)])
def test_double_factorial(n, expected):
    assert fm.double_factorial(n) == expected


@pytest.mark.parametrize("k,expected", [(0, 1), (1, 1), (2, 1), (3, 2), (4, 12), (5, 288)])
def test_superfactorial(k, expected):
    assert fm.F(k) == expected


def test_integrality_is_checked():
    assert fm.as_integer(Fraction(6, 3)) == 2
    with pytest.raises(fm.IntegralityError):
        fm.as_integer(Fraction(1, 2))


# -- closed-form counts against the frozen small values --------------------------

@pytest.mark.parametrize("params,expected", [((1, 1, 1, 0), 1), ((2, 0, 0, 2), 2), ((2, 0, 0, 1), 1)])
def test_sp_count_small(params, expected):
    assert fm.sp_count(*params) == expected


@pytest.mark.parametrize("n,m,sb,yb", [
    (2, 1, 1, 1), (3, 1, 4, 2), (2, 2, 2, 2), (3, 2, 168, 42), (3, 3, 25920, 3240),
    (4, 1, 144, 12), (4, 2, 3459456, 24024), (5, 1, 82368, 286),
])
def test_book_counts(n, m, sb, yb):
    assert fm.sb_count(n, m) == sb
    assert fm.yb_count(n, m) == yb
    assert fm.sb_count(n, m) == fm.F(n) ** m * fm.yb_count(n, m)


def test_yb_one_page_is_shifted_syt():
    for n in range(1, 7):
        assert fm.yb_count(n, 1) == fm.hook_count_shifted(tuple(range(n, 0, -1)))


def test_yb_two_pages_is_square_syt():
    for n in range(1, 6):
        assert fm.yb_count(n, 2) == fm.hook_count_straight((n,) * n)


@pytest.mark.parametrize("n,rvec,svec,expected", [
    (1, (0, 0), (0, 0), 1), (2, (0,), (0,), 1), (1, (0, 1), (0, 0), 1),
])
def test_yb_count_nrs_small(n, rvec, svec, expected):
    assert fm.yb_count_nrs(n, rvec, svec) == expected


@given(st.integers(1, 3), st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=3))
def test_yb_count_nrs_against_dp(n, rs):
    rvec = tuple(x for x, _ in rs)
    svec = tuple(y for _, y in rs)
    book = sh.nrs_book(n, rvec, svec)
    assume(book.total_cells <= 20)
    assert fm.yb_count_nrs(n, rvec, svec) == cb.count_book(book, "young")


@pytest.mark.parametrize("n,r,s,expected", [(1, 1, 1, 2), (2, 0, 0, 1)])
def test_truncated_staircase_small(n, r, s, expected):
    assert fm.syt_truncated_staircase(n, r, s) == expected


@given(st.integers(1, 3), st.integers(0, 3), st.integers(0, 3))
def test_truncated_staircase_against_dp(n, r, s):
    lam = [n + s] * (r + n)
    shape = sh.make_truncated(lam, list(range(n - 1, 0, -1)))
    assert fm.syt_truncated_staircase(n, r, s) == cb.count_linear_extensions(sh.page_order(shape))


@pytest.mark.parametrize("args,expected", [((1, 0, 1, 0, 0), 1), ((2, 0, 0, 0, 0), 2)])
def test_skew_double_small(args, expected):
    assert fm.syt_skew_double(*args) == expected


@given(st.integers(1, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_skew_double_against_determinant(n, r1, r2, s1, s2):
    lam, mu = sh.skew_double_partitions(n, r1, r2, s1, s2)
    det = fm.skew_count_determinant(lam, mu)
    assert fm.syt_skew_double(n, r1, r2, s1, s2) == det
    # the printed closed form carries an extra 2 per diagonal cell
    assert fm.syt_skew_double_printed(n, r1, r2, s1, s2) == 2**n * det


@pytest.mark.parametrize("k,n,rvec,svec", [(2, 1, (0,), (0,)), (2, 2, (0,), (0,)), (2, 1, (1, 0), (0, 1)), (3, 1, (1,), (1,)), (2, 2, (1,), (0,))])
def test_ars_count_against_dp(k, n, rvec, svec):
    book = sh.ars_book((k,) * n, rvec, svec)
    assert fm.yb_count_ars_kn(k, n, rvec, svec) == cb.count_book(book, "young")


def test_single_merged_diagonal():
    assert fm.yb_count_ars_kn(2, 1, (0,), (0,)) == 1


@pytest.mark.parametrize("k,n,r,s", [(1, 1, 1, 1), (2, 1, 0, 0), (2, 2, 0, 0), (2, 1, 1, 1), (2, 2, 1, 0), (3, 1, 1, 1)])
def test_truncated_panova_against_dp(k, n, r, s):
    target = sh.truncated_target(k, n, r, s)
    assert fm.syt_truncated_panova(k, n, r, s) == cb.count_linear_extensions(sh.page_order(target))


def test_truncated_panova_reduces():
    assert fm.syt_truncated_panova(1, 1, 1, 1) == 2
    assert fm.syt_truncated_panova(2, 1, 0, 0) == 1


@pytest.mark.parametrize("n,rvec,svec", [(2, (1,), (0,)), (2, (1,), (1,)), (1, (1, 1), (1, 0)), (2, (0, 1), (1, 0))])
def test_full_and_minus_selberg_counts(n, rvec, svec):
    full = sh.nrs_book(n, rvec, svec)
    minus = sh.nrs_book(n, rvec, svec, minus=True)
    assert fm.sb_full_count(n, rvec, svec) == cb.count_book(full, "selberg")
    assert fm.sb_minus_count(n, rvec, svec) == cb.count_book(minus, "selberg")
    assert fm.sb_full_count(n, rvec, svec) == fm.sb_yb_factor(n, rvec, svec) * cb.count_book(full, "young")


def test_sb_yb_factor_reduces_to_superfactorial():
    for n in range(1, 6):
        assert fm.sb_yb_factor(n, (0,), (0,)) == fm.F(n)
    assert fm.sb_count(3, 1) // fm.yb_count(3, 1) == 2


# -- tableau oracles -------------------------------------------------------------

@pytest.mark.parametrize("lam,expected", [((2, 2), 2), ((3, 2), 5), ((3, 2, 1), 16)])
def test_hook_straight(lam, expected):
    assert fm.hook_count_straight(lam) == expected


def test_hook_shifted_staircase():
    assert fm.hook_count_shifted((3, 2, 1)) == 2


@given(partitions)
def test_hook_straight_against_dp(lam):
    assert fm.hook_count_straight(lam) == cb.count_linear_extensions(sh.page_order(sh.make_skew(lam, ())))


@given(strict_partitions)
def test_hook_shifted_against_dp(lam):
    page = sh.make_shifted(lam)
    assert fm.hook_count_shifted(lam) == cb.count_linear_extensions(sh.page_order(page))


@given(partitions, st.data())
def test_skew_determinant_against_dp(lam, data):
    mu = tuple(data.draw(st.integers(0, part)) for part in lam)
    mu = tuple(sorted(mu, reverse=True))
    mu = tuple(min(a, b) for a, b in zip(mu, lam))
    assume(all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1)))
    assume(sum(lam) > sum(mu))
    page = sh.make_skew(lam, mu)
    assert fm.skew_count_determinant(lam, mu) == cb.count_linear_extensions(sh.page_order(page))


def test_big_skew_has_prime_factor():
    value = fm.skew_count_determinant((7, 7, 7, 7, 7, 5, 5), (4, 4))
    assert value == 17673559152791658480
    assert value % 9173 == 0


def test_exact_determinant():
    assert fm.exact_determinant([[2, 1], [1, 1]]) == 1
    assert fm.exact_determinant([[0, 1], [1, 0]]) == -1
    assert fm.exact_determinant([[1, 2], [2, 4]]) == 0


# -- Gamma and the Selberg integral ---------------------------------------------

def test_gamma_values():
    assert fm.gamma_exact(5).as_fraction() == 24
    half = fm.gamma_exact(Fraction(1, 2))
    assert half.coeff == 1 and half.k == 1
    assert str(fm.gamma_exact(Fraction(5, 2))) == "3/4*pi^(1/2)"
    with pytest.raises(fm.UnsupportedGammaArgument):
        fm.gamma_exact(Fraction(1, 3))
    with pytest.raises(fm.UnsupportedGammaArgument):
        fm.gamma_exact(0)


def test_selberg_two_by_half():
    value = fm.selberg_exact(fm.SelbergParams(2, 1, 1, Fraction(1, 2)))
    assert value.is_rational() and value.as_fraction() == Fraction(1, 3)
    assert value.as_fraction() == Fraction(factorial(2) * fm.sp_count(2, 0, 0, 1), factorial(3))
    assert fm.selberg_combinatorial(2, 0, 0, 1) == Fraction(1, 3)


@given(st.integers(0, 5), st.integers(0, 5), st.integers(0, 3))
def test_selberg_one_variable_is_beta(r, s, m):
    expected = Fraction(factorial(r) * factorial(s), factorial(r + s + 1))
    assert fm.selberg_combinatorial(1, r, s, m) == expected
    assert fm.selberg_exact(fm.SelbergParams(1, r + 1, s + 1, Fraction(m, 2))).as_fraction() == expected


@given(st.integers(1, 3), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_selberg_against_box_integral(n, r, s, m):
    assume(n < 3 or m <= 1)
    exact = fm.selberg_exact(fm.SelbergParams(n, r + 1, s + 1, Fraction(m, 2)))
    assert exact.as_fraction() == fm.selberg_box_integral(n, r, s, m)


def test_selberg_params_validation():
    with pytest.raises(ValueError):
        fm.SelbergParams(2, 0, 1, 1)
    with pytest.raises(ValueError):
        fm.SelbergParams(2, 1, 1, -1)
    with pytest.raises(fm.UnsupportedGammaArgument):
        fm.SelbergParams(2, Fraction(1, 3), 1, 1)


def test_half_integer_selberg_can_carry_pi():
    value = fm.selberg_exact(fm.SelbergParams(1, Fraction(1, 2), 1, 0))
    assert value.as_fraction() == 2
    value = fm.selberg_exact(fm.SelbergParams(1, Fraction(1, 2), Fraction(1, 2), 0))
    assert value.k == 2 and value.coeff == 1


# -- polynomial integrals --------------------------------------------------------

def test_box_integral_of_distance():
    assert fm.box_integral_exact([0, 0], [0, 0], {(0, 1): 1}) == Fraction(1, 3)


@given(st.integers(0, 6), st.integers(0, 6))
def test_box_integral_beta(p, q):
    assert fm.box_integral_exact([p], [q], {}) == Fraction(factorial(p) * factorial(q), factorial(p + q + 1))


def test_box_integral_ordered_half_for_symmetric_integrand():
    full = fm.box_integral_exact([1, 1], [0, 0], {(0, 1): 2})
    ordered = fm.box_integral_exact([1, 1], [0, 0], {(0, 1): 2}, ordered=True)
    assert full == 2 * ordered


def test_merged_diagonal_count_matches_ordered_integral():
    a = (1, 2)
    for r in (0, 1):
        for s in (0, 1):
            book = sh.ars_book(a, (r,), (s,), minus=True)
            count = cb.count_book(book, "selberg")
            assert Fraction(count, factorial(book.total_cells)) == fm.ars_box_integral(a, r, s, 1, ordered=True)


def test_merged_diagonal_symmetric_corner():
    a = (1, 2)
    book = sh.ars_book(a, (1,), (1,), minus=True)
    count = cb.count_book(book, "selberg")
    assert Fraction(2 * count, factorial(book.total_cells)) == fm.ars_box_integral(a, 1, 1, 1)


# -- consistency between the families ---------------------------------------------

@given(st.integers(1, 4), st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=3))
def test_merged_formula_at_k_one_is_staircase_formula(n, rs):
    rvec = tuple(x for x, _ in rs)
    svec = tuple(y for _, y in rs)
    assert fm.yb_count_ars_kn(1, n, rvec, svec) == fm.yb_count_nrs(n, rvec, svec)


@given(st.integers(1, 5), st.integers(0, 4), st.integers(0, 4))
def test_one_page_families_agree(n, r, s):
    assert fm.yb_count_nrs(n, (r,), (s,)) == fm.syt_truncated_staircase(n, r, s)
    assert fm.syt_truncated_panova(1, n, r, s) == fm.syt_truncated_staircase(n, r, s)


@given(st.integers(1, 5), st.integers(1, 4))
def test_zero_corner_permutations_are_staircase_books(n, m):
    assert fm.sp_count(n, 0, 0, m) == fm.sb_count(n, m)
