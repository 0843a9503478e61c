from math import comb

import pytest
from hypothesis import given, strategies as st

from youngbooks import combinat as cb
from youngbooks import shapes as sh


# -- partitions and compositions ---------------------------------------------------

def test_partition_rejects_increasing_parts():
    with pytest.raises(sh.ShapeError):
        sh.Partition((1, 2))


def test_partition_of_drops_zeros():
    lam = sh.Partition.of([3, 1, 0, 0])
    assert tuple(lam) == (3, 1)
    assert lam.size == 4
    assert lam.is_strict()


@given(st.integers(0, 6), st.integers(1, 4))
def test_compositions_are_complete_and_distinct(total, length):
    comps = list(sh.compositions(total, length))
    assert len(comps) == len(set(comps)) == comb(total + length - 1, length - 1)
    assert all(sum(c) == total and len(c) == length for c in comps)


# -- page constructors -------------------------------------------------------------

def test_shifted_staircase_three():
    page = sh.make_shifted_staircase(3)
    squares = set(page.square_owner)
    assert squares == {(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)}
    assert page.n == 3 and page.size == 6


def test_shifted_staircase_four_has_ten_cells():
    page = sh.make_shifted_staircase(4)
    assert page.size == 10 and page.n == 4


@given(st.integers(1, 5), st.integers(0, 4), st.integers(0, 4))
def test_nrs_cell_counts(n, r, s):
    full = sh.make_nrs_staircase(n, r, s)
    minus = sh.make_nrs_staircase(n, r, s, minus=True)
    assert full.size == (r + n) * (n + s) - comb(n, 2)
    assert minus.size == full.size - r * s
    assert full.n == minus.n == n


@given(st.lists(st.integers(1, 3), min_size=1, max_size=3), st.integers(0, 3), st.integers(0, 3))
def test_ars_cell_counts(a, r, s):
    full = sh.make_ars_staircase(a, r, s)
    total_a = sum(a)
    pairs = sum(a[i] * a[j] for i in range(len(a)) for j in range(i + 1, len(a)))
    assert full.size == len(a) + total_a * (r + s) + pairs + r * s
    assert sh.make_ars_staircase(a, r, s, minus=True).size == full.size - r * s
    assert full.span_sizes == tuple(a)


def test_ars_example_two_diagonals():
    page = sh.make_ars_staircase((1, 2), 1, 2)
    assert page.n == 2
    assert [d.size for d in page.diagonals] == [1, 2]
    assert [len(list(d.squares())) for d in page.diagonals] == [1, 4]


def test_truncated_example():
    page = sh.make_truncated((6, 5, 5, 4), (3, 1))
    assert page.size == 20 - 4
    # cells come off the southwest corner: three from the last row, one above it
    assert sorted(c for c in page.square_owner if c[0] == 4) == [(4, 4)]
    assert (3, 1) not in page.square_owner and (3, 2) in page.square_owner


def test_skew_example():
    page = sh.make_skew((6, 5, 5, 4), (3, 1))
    assert page.size == 16
    assert (1, 3) not in page.square_owner and (1, 4) in page.square_owner


@given(st.integers(1, 4), st.integers(0, 3), st.integers(0, 3))
def test_truncated_staircase_rectangle_size(n, r, s):
    lam = [n + s] * (r + n)
    page = sh.make_truncated(lam, list(range(n - 1, 0, -1)))
    assert page.size == (r + s + 1) * n + comb(n, 2) + r * s


# -- books -------------------------------------------------------------------------

def test_two_staircases_make_a_square():
    for n in range(1, 6):
        assert sh.staircase_book(n, 2).total_cells == n * n


def test_big_book_cell_count():
    book = sh.parse_book("book:[shifted:6,2,1;shifted:5,4,1;shifted:5,2,1;shifted:4,2,1]")
    assert book.total_cells == 25
    assert book.n == 3 and book.m == 4


def test_pages_must_share_diagonals():
    with pytest.raises(sh.ShapeError):
        sh.BookShape([sh.make_shifted_staircase(2), sh.make_shifted_staircase(3)])


@given(st.integers(1, 3), st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=3))
def test_nrs_book_matches_expected_cells(n, rs):
    rvec = tuple(x for x, _ in rs)
    svec = tuple(y for _, y in rs)
    book = sh.nrs_book(n, rvec, svec)
    assert book.total_cells == sh.expected_total_cells((1,) * n, rvec, svec)
    minus = sh.nrs_book(n, rvec, svec, minus=True)
    assert minus.total_cells == sh.expected_minus_cells((1,) * n, rvec, svec)


# -- order constraints -------------------------------------------------------------

def test_two_staircase_orders_are_chains():
    book = sh.staircase_book(2, 1)
    for kind in ("young", "selberg"):
        oc = sh.order_constraints(book, kind)
        assert oc.is_chain()
        assert len(oc.pairs) == 3 or len(oc.closure()) == 3


def test_selberg_order_refuses_general_shifted_pages():
    book = sh.parse_book("shifted:4,2,1")
    with pytest.raises(sh.ShapeError):
        sh.order_constraints(book, "selberg")


def test_young_order_on_single_row_is_chain():
    oc = sh.page_order(sh.make_skew((4,), ()))
    assert oc.is_chain()


def test_cycle_is_reported():
    oc = sh.OrderConstraints(2, frozenset({(0, 1), (1, 0)}), "young")
    with pytest.raises(sh.ConstraintError):
        oc.check_acyclic()


@given(st.integers(1, 4), st.integers(1, 3))
def test_young_order_refines_selberg_count(n, m):
    book = sh.staircase_book(n, m)
    if book.total_cells > 12:
        return
    sb = cb.count_book(book, "selberg")
    yb = cb.count_book(book, "young")
    assert yb <= sb


# -- correspondences ---------------------------------------------------------------

def test_square_correspondence_is_standard():
    book = sh.staircase_book(3, 2)
    seen = set()
    for filling in cb.enumerate_fillings(book, "young"):
        tab = sh.to_square_tableau(filling)
        as_dict = {(i + 1, j + 1): v for i, row in enumerate(tab) for j, v in enumerate(row)}
        assert sh.is_standard_tableau(as_dict)
        assert sh.from_square_tableau(tab, book) == filling.labels
        seen.add(tuple(map(tuple, tab)))
    # every SYT of the 3x3 square appears exactly once
    assert len(seen) == 42


def test_two_by_two_square():
    book = sh.staircase_book(2, 2)
    tabs = {tuple(map(tuple, sh.to_square_tableau(f))) for f in cb.enumerate_fillings(book, "young")}
    assert tabs == {((1, 2), (3, 4)), ((1, 3), (2, 4))}


@pytest.mark.parametrize("n,r1,r2,s1,s2", [(2, 0, 0, 0, 0), (1, 0, 1, 0, 0), (2, 1, 0, 0, 1), (2, 1, 1, 1, 0), (1, 1, 1, 1, 1)])
def test_skew_correspondence_preserves_count(n, r1, r2, s1, s2):
    book = sh.nrs_book(n, (r1, r2), (s1, s2))
    lam, mu = sh.skew_double_partitions(n, r1, r2, s1, s2)
    target = sh.make_skew(lam, mu)
    images = set()
    for filling in cb.enumerate_fillings(book, "young"):
        tab = sh.to_skew_tableau(filling)
        assert set(tab) == set(target.square_owner)
        assert sh.is_standard_tableau(tab)
        assert sh.from_skew_tableau(tab, book) == filling.labels
        images.add(tuple(sorted(tab.items())))
    assert len(images) == cb.count_linear_extensions(sh.page_order(target))


@pytest.mark.parametrize("k,n,r,s", [(2, 1, 0, 0), (2, 2, 0, 0), (2, 1, 1, 1), (1, 2, 1, 1), (3, 1, 1, 0)])
def test_truncated_correspondence_preserves_count(k, n, r, s):
    book = sh.ars_book((k,) * n, (r,), (s,))
    target = sh.truncated_target(k, n, r, s)
    images = set()
    for filling in cb.enumerate_fillings(book, "young"):
        tab = sh.to_truncated_tableau(filling)
        assert set(tab) == {sq for sq in target.square_owner}
        assert sh.is_standard_tableau(tab)
        assert sh.from_truncated_tableau(tab, book) == filling.labels
        images.add(tuple(sorted(tab.items())))
    assert len(images) == cb.count_linear_extensions(sh.page_order(target))


def test_single_merged_diagonal_target_is_one_cell():
    target = sh.truncated_target(2, 1, 0, 0)
    assert target.size == 1
    assert cb.count_linear_extensions(sh.page_order(target)) == 1


# -- shape strings -----------------------------------------------------------------

@pytest.mark.parametrize("text,size", [
    ("shifted:3,2,1", 6),
    ("skew:6,5,5,4/3,1", 16),
    ("trunc:6,5,5,4\\3,1", 16),
    ("nrs:n=2,r=1,s=1", 8),
    ("nrs:n=2,r=1,s=1,minus", 7),
    ("ars:a=1,2;r=1;s=2", 2 + 3 * 3 + 2 + 2),
])
def test_parse_page(text, size):
    assert sh.parse_page(text).size == size


def test_parse_book_with_semicolon_pages():
    book = sh.parse_book("book:[ars:a=1,2;r=1;s=0;ars:a=1,2;r=0;s=1]")
    assert book.m == 2 and book.rvec == (1, 0) and book.svec == (0, 1)


@pytest.mark.parametrize("text", ["shifted:1,2", "bogus:3", "nrs:r=1", "skew:2/3"])
def test_parse_errors(text):
    with pytest.raises(sh.ShapeError):
        sh.parse_page(text)
