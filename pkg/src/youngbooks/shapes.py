"""Diagrams, books, and the order relations on their cells.

Coordinates are 1-based ``(row, column)`` in English convention.  A page keeps
its non-diagonal unit cells in ``cells`` and its diagonal cells separately in
``diagonals``; a diagonal may be a merged ``a_i x a_i`` block, in which case it
occupies several rows and columns but counts as a single cell.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from graphlib import CycleError, TopologicalSorter
from itertools import accumulate
from typing import Iterable, Iterator, Sequence


class ShapeError(ValueError):
    pass


class ConstraintError(ValueError):
    pass


Cell = tuple[int, int]


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ShapeError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ShapeError(f"partition must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> Partition:
        """Build a partition, dropping zero parts."""
        return cls(tuple(p for p in parts if p != 0))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def is_strict(self) -> bool:
        return all(self.parts[i] > self.parts[i + 1] for i in range(len(self.parts) - 1))


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ShapeError(f"composition parts must be nonnegative: {parts}")
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> int:
        return sum(self.parts)


def compositions(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """All weak compositions of ``total`` into ``length`` parts, lexicographically."""
    if length == 0:
        if total == 0:
            yield ()
        return
    if length == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, length - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class Diagonal:
    index: int
    row_span: tuple[int, int]
    col_span: tuple[int, int]

    @property
    def size(self) -> int:
        return self.row_span[1] - self.row_span[0] + 1

    @property
    def anchor(self) -> Cell:
        return (self.row_span[0], self.col_span[0])

    def squares(self) -> Iterator[Cell]:
        for row in range(self.row_span[0], self.row_span[1] + 1):
            for col in range(self.col_span[0], self.col_span[1] + 1):
                yield (row, col)


PAGE_KINDS = (
    "shifted-staircase",
    "shifted",
    "nrs",
    "nrs-minus",
    "ars",
    "ars-minus",
    "skew",
    "truncated",
)


@dataclass(frozen=True)
class PageShape:
    kind: str
    cells: frozenset
    diagonals: tuple[Diagonal, ...] = ()
    r: int = 0
    s: int = 0
    a: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in PAGE_KINDS:
            raise ShapeError(f"unknown page kind {self.kind!r}")

    @property
    def n(self) -> int:
        return len(self.diagonals)

    @property
    def size(self) -> int:
        """Number of cells, each merged diagonal counted once."""
        return len(self.cells) + len(self.diagonals)

    @property
    def is_minus(self) -> bool:
        return self.kind.endswith("-minus") or self.kind == "shifted-staircase"

    @property
    def corner_size(self) -> int:
        """Cells of the northeast ``r x s`` rectangle still present on this page."""
        if self.kind in ("nrs", "ars"):
            return self.r * self.s
        return 0

    @property
    def span_sizes(self) -> tuple[int, ...]:
        return tuple(d.size for d in self.diagonals)

    @cached_property
    def row_diagonal(self) -> dict[int, int]:
        """Row index -> 1-based index of the diagonal cell containing that row."""
        out = {}
        for d in self.diagonals:
            for row in range(d.row_span[0], d.row_span[1] + 1):
                out[row] = d.index
        return out

    @cached_property
    def col_diagonal(self) -> dict[int, int]:
        out = {}
        for d in self.diagonals:
            for col in range(d.col_span[0], d.col_span[1] + 1):
                out[col] = d.index
        return out

    @cached_property
    def square_owner(self) -> dict[Cell, object]:
        """Every unit square -> either the cell itself or ``("diag", i)``."""
        owner = {c: c for c in self.cells}
        for d in self.diagonals:
            for sq in d.squares():
                owner[sq] = ("diag", d.index)
        return owner

    def sorted_items(self) -> list[tuple[Cell, object]]:
        """Cells and diagonals in (row, column) order, diagonals at their anchor."""
        items = [(c, c) for c in self.cells]
        items += [(d.anchor, ("diag", d.index)) for d in self.diagonals]
        items.sort(key=lambda t: t[0])
        return items


def _staircase_diagonals(n: int, row_offset: int = 0) -> tuple[Diagonal, ...]:
    return tuple(
        Diagonal(i, (row_offset + i, row_offset + i), (i, i)) for i in range(1, n + 1)
    )


def make_shifted_staircase(n: int) -> PageShape:
    if n < 1:
        raise ShapeError("shifted staircase needs n >= 1")
    cells = frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
    return PageShape("shifted-staircase", cells, _staircase_diagonals(n))


def make_shifted(lam) -> PageShape:
    """Shifted diagram of a strict partition; row ``i`` starts at column ``i``."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if len(lam) == 0:
        raise ShapeError("empty shifted shape")
    if not lam.is_strict():
        raise ShapeError(f"shifted shape needs a strict partition, got {lam.parts}")
    k = len(lam)
    if lam.parts == tuple(range(k, 0, -1)):
        return make_shifted_staircase(k)
    cells = frozenset(
        (i, j) for i in range(1, k + 1) for j in range(i + 1, i + lam[i - 1])
    )
    return PageShape("shifted", cells, _staircase_diagonals(k))


def make_nrs_staircase(n: int, r: int, s: int, minus: bool = False) -> PageShape:
    if n < 1:
        raise ShapeError("(n,r,s)-staircase needs n >= 1")
    if r < 0 or s < 0:
        raise ShapeError("r and s must be nonnegative")
    cells = set()
    for row in range(1, r + n + 1):
        for col in range(1, n + s + 1):
            if row > r + col:
                continue
            if col <= n and row == r + col:
                continue
            if minus and row <= r and col > n:
                continue
            cells.add((row, col))
    kind = "nrs-minus" if minus else "nrs"
    return PageShape(kind, frozenset(cells), _staircase_diagonals(n, r), r=r, s=s, a=(1,) * n)


def make_ars_staircase(a: Sequence[int], r: int, s: int, minus: bool = False) -> PageShape:
    a = tuple(int(x) for x in a)
    if not a:
        raise ShapeError("(a,r,s)-staircase needs at least one diagonal")
    if any(x < 1 for x in a):
        raise ShapeError(f"diagonal sizes must be positive: {a}")
    if r < 0 or s < 0:
        raise ShapeError("r and s must be nonnegative")
    ends = list(accumulate(a))
    starts = [e - x for e, x in zip(ends, a)]
    total = ends[-1]
    diagonals = tuple(
        Diagonal(i + 1, (r + starts[i] + 1, r + ends[i]), (starts[i] + 1, ends[i]))
        for i in range(len(a))
    )
    cells = set()
    for row in range(1, r + 1):
        for col in range(1, total + s + 1):
            if minus and col > total:
                continue
            cells.add((row, col))
    for i in range(len(a)):
        for row in range(r + starts[i] + 1, r + ends[i] + 1):
            for col in range(ends[i] + 1, total + s + 1):
                cells.add((row, col))
    kind = "ars-minus" if minus else "ars"
    return PageShape(kind, frozenset(cells), diagonals, r=r, s=s, a=a)


def _young_cells(lam: Partition) -> set[Cell]:
    return {(i + 1, j + 1) for i, part in enumerate(lam) for j in range(part)}


def make_truncated(lam, mu) -> PageShape:
    """Young diagram of ``lam`` with ``mu_i`` cells cut from the left of the
    ``i``-th row counted from the bottom."""
    lam = lam if isinstance(lam, Partition) else Partition.of(lam)
    mu = mu if isinstance(mu, Partition) else Partition.of(mu)
    k = len(lam)
    if len(mu) > k:
        raise ShapeError(f"{mu.parts} has more parts than {lam.parts}")
    cells = _young_cells(lam)
    for i, cut in enumerate(mu, start=1):
        row = k + 1 - i
        if cut > lam[row - 1]:
            raise ShapeError(f"cannot cut {cut} cells from row {row} of {lam.parts}")
        for col in range(1, cut + 1):
            cells.discard((row, col))
    return PageShape("truncated", frozenset(cells))


def make_skew(lam, mu) -> PageShape:
    lam = lam if isinstance(lam, Partition) else Partition.of(lam)
    mu = mu if isinstance(mu, Partition) else Partition.of(mu)
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        raise ShapeError(f"{mu.parts} is not contained in {lam.parts}")
    return PageShape("skew", frozenset(_young_cells(lam) - _young_cells(mu)))


class BookShape:
    """Pages glued along their diagonal cells.

    Cell ids run over pages in order and over each page in (row, column) order;
    the ``i``-th diagonal gets its id the first time it is met (on page 1).
    ``nodes[id]`` is ``("diag", i)`` or ``("cell", page_index, (row, col))``.
    """

    def __init__(self, pages: Sequence[PageShape]):
        self.pages = tuple(pages)
        if not self.pages:
            raise ShapeError("a book needs at least one page")
        n = self.pages[0].n
        spans = self.pages[0].span_sizes
        for page in self.pages[1:]:
            if page.n != n:
                raise ShapeError(f"pages disagree on diagonal count: {n} vs {page.n}")
            if page.span_sizes != spans:
                raise ShapeError("pages disagree on diagonal sizes")
        self.n = n
        nodes = []
        diag_id = {}
        cell_id = {}
        for p, page in enumerate(self.pages):
            for _, item in page.sorted_items():
                if isinstance(item, tuple) and item[0] == "diag":
                    if item[1] not in diag_id:
                        diag_id[item[1]] = len(nodes)
                        nodes.append(item)
                else:
                    cell_id[(p, item)] = len(nodes)
                    nodes.append(("cell", p, item))
        self.nodes = tuple(nodes)
        self.diag_id = diag_id
        self.cell_id = cell_id

    def __repr__(self):
        kinds = ",".join(p.kind for p in self.pages)
        return f"BookShape(m={self.m}, n={self.n}, N={self.total_cells}, pages=[{kinds}])"

    @property
    def m(self) -> int:
        return len(self.pages)

    @property
    def total_cells(self) -> int:
        return len(self.nodes)

    @property
    def minus_cells(self) -> int:
        return self.total_cells - sum(p.corner_size for p in self.pages)

    def node_of(self, page_index: int, owner) -> int:
        if isinstance(owner, tuple) and owner and owner[0] == "diag":
            return self.diag_id[owner[1]]
        return self.cell_id[(page_index, owner)]

    def diagonal_ids(self) -> list[int]:
        return [self.diag_id[i] for i in range(1, self.n + 1)]

    @property
    def rvec(self) -> tuple[int, ...]:
        return tuple(p.r for p in self.pages)

    @property
    def svec(self) -> tuple[int, ...]:
        return tuple(p.s for p in self.pages)


def assemble_book(pages: Sequence[PageShape]) -> BookShape:
    return BookShape(pages)


def expected_total_cells(a: Sequence[int], rvec: Sequence[int], svec: Sequence[int]) -> int:
    """Closed-form cell count of a full (a, r, s) book."""
    n = len(a)
    atot = sum(a)
    m = len(rvec)
    pairs = sum(a[i] * a[j] for i in range(n) for j in range(i + 1, n))
    return n + atot * (sum(rvec) + sum(svec)) + m * pairs + sum(x * y for x, y in zip(rvec, svec))


def expected_minus_cells(a, rvec, svec) -> int:
    return expected_total_cells(a, rvec, svec) - sum(x * y for x, y in zip(rvec, svec))


def nrs_book(n: int, rvec: Sequence[int], svec: Sequence[int], minus: bool = False) -> BookShape:
    if len(rvec) != len(svec):
        raise ShapeError("r and s compositions must have the same length")
    return BookShape([make_nrs_staircase(n, r, s, minus) for r, s in zip(rvec, svec)])


def ars_book(a: Sequence[int], rvec: Sequence[int], svec: Sequence[int], minus: bool = False) -> BookShape:
    if len(rvec) != len(svec):
        raise ShapeError("r and s compositions must have the same length")
    return BookShape([make_ars_staircase(a, r, s, minus) for r, s in zip(rvec, svec)])


def staircase_book(n: int, m: int) -> BookShape:
    return BookShape([make_shifted_staircase(n)] * m)


def single_page_book(page: PageShape) -> BookShape:
    return BookShape([page])


@dataclass(frozen=True)
class OrderConstraints:
    size: int
    pairs: tuple[tuple[int, int], ...]
    kind: str = "young"

    def predecessors(self) -> list[set[int]]:
        preds = [set() for _ in range(self.size)]
        for u, v in self.pairs:
            preds[v].add(u)
        return preds

    def check_acyclic(self) -> None:
        ts = TopologicalSorter({v: p for v, p in enumerate(self.predecessors())})
        try:
            ts.prepare()
        except CycleError as exc:
            raise ConstraintError(f"constraints contain a cycle: {exc.args[1]}") from None

    def closure(self) -> frozenset[tuple[int, int]]:
        """All strict relations u < v implied by the pairs."""
        preds = self.predecessors()
        below = [None] * self.size

        def down(v):
            if below[v] is None:
                acc = set()
                for u in preds[v]:
                    acc.add(u)
                    acc |= down(u)
                below[v] = acc
            return below[v]

        self.check_acyclic()
        return frozenset((u, v) for v in range(self.size) for u in down(v))

    def is_chain(self) -> bool:
        return len(self.closure()) == self.size * (self.size - 1) // 2


def young_pairs(book: BookShape) -> set[tuple[int, int]]:
    pairs = set()
    for p, page in enumerate(book.pages):
        owner = page.square_owner
        for (row, col), own in owner.items():
            u = book.node_of(p, own)
            for nb in ((row, col + 1), (row + 1, col)):
                if nb in owner:
                    v = book.node_of(p, owner[nb])
                    if u != v:
                        pairs.add((u, v))
    return pairs


def selberg_pairs(book: BookShape) -> set[tuple[int, int]]:
    if book.n == 0:
        raise ShapeError("Selberg order needs diagonal cells")
    for page in book.pages:
        if page.kind in ("shifted", "skew", "truncated"):
            raise ShapeError(f"Selberg order is not defined on {page.kind} pages")
    pairs = set()
    for p, page in enumerate(book.pages):
        for cell in page.cells:
            v = book.node_of(p, cell)
            row_d = page.row_diagonal.get(cell[0])
            col_d = page.col_diagonal.get(cell[1])
            if row_d is not None:
                pairs.add((book.diag_id[row_d], v))
            if col_d is not None:
                pairs.add((v, book.diag_id[col_d]))
    diags = book.diagonal_ids()
    pairs.update(zip(diags, diags[1:]))
    return pairs


def order_constraints(book: BookShape, kind: str = "young") -> OrderConstraints:
    if kind == "young":
        pairs = young_pairs(book)
    elif kind == "selberg":
        pairs = selberg_pairs(book)
    else:
        raise ValueError(f"unknown constraint kind {kind!r}")
    oc = OrderConstraints(book.total_cells, tuple(sorted(pairs)), kind)
    oc.check_acyclic()
    return oc


def page_order(page: PageShape) -> OrderConstraints:
    """Young order of a lone page, e.g. a skew or truncated diagram."""
    return order_constraints(BookShape([page]), "young")


# -- correspondences with ordinary standard tableaux -------------------------

def is_standard_tableau(tab: dict[Cell, int]) -> bool:
    if sorted(tab.values()) != list(range(1, len(tab) + 1)):
        return False
    for (row, col), v in tab.items():
        right = tab.get((row, col + 1))
        below = tab.get((row + 1, col))
        if right is not None and right < v:
            return False
        if below is not None and below < v:
            return False
    return True


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ShapeError(msg)


def _page_labels(filling, p: int) -> dict[Cell, int]:
    """Labels of one page keyed by unit square (a merged diagonal fills its block)."""
    book = filling.book
    page = book.pages[p]
    return {sq: filling.labels[book.node_of(p, own)] for sq, own in page.square_owner.items()}


def to_square_tableau(filling) -> list[list[int]]:
    book = filling.book
    _require(book.m == 2, "square correspondence needs a 2-page book")
    _require(all(pg.kind == "shifted-staircase" for pg in book.pages),
             "square correspondence needs shifted staircase pages")
    n = book.n
    first, second = _page_labels(filling, 0), _page_labels(filling, 1)
    return [
        [first[(i, j)] if i <= j else second[(j, i)] for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]


def from_square_tableau(tableau: Sequence[Sequence[int]], book: BookShape) -> tuple[int, ...]:
    n = book.n
    _require(len(tableau) == n and all(len(row) == n for row in tableau), "tableau is not n x n")
    labels = [0] * book.total_cells
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i <= j:
                labels[book.node_of(0, book.pages[0].square_owner[(i, j)])] = tableau[i - 1][j - 1]
            else:
                labels[book.node_of(1, book.pages[1].square_owner[(j, i)])] = tableau[i - 1][j - 1]
    return tuple(labels)


def skew_double_partitions(n: int, r1: int, r2: int, s1: int, s2: int):
    """The outer and inner partitions of the skew shape built from two staircases."""
    lam = [r2 + n + s1] * (r1 + n) + [r2 + n] * s2
    mu = [r2] * r1
    return Partition.of(lam), Partition.of(mu)


def _skew_position(p: int, cell: Cell, r1: int, r2: int) -> Cell:
    row, col = cell
    if p == 0:
        return (row, r2 + col)
    return (r1 + col, row)


def to_skew_tableau(filling) -> dict[Cell, int]:
    book = filling.book
    _require(book.m == 2, "skew correspondence needs a 2-page book")
    _require(all(pg.kind in ("nrs", "shifted-staircase") for pg in book.pages),
             "skew correspondence needs full (n,r,s)-staircase pages")
    r1, r2 = book.rvec
    out = {}
    for p in (0, 1):
        for sq, label in _page_labels(filling, p).items():
            out[_skew_position(p, sq, r1, r2)] = label
    return out


def from_skew_tableau(tab: dict[Cell, int], book: BookShape) -> tuple[int, ...]:
    r1, r2 = book.rvec
    labels = [0] * book.total_cells
    for p in (0, 1):
        for sq, own in book.pages[p].square_owner.items():
            labels[book.node_of(p, own)] = tab[_skew_position(p, sq, r1, r2)]
    return tuple(labels)


def truncated_target(k: int, n: int, r: int, s: int) -> PageShape:
    """The truncated shape that single-page ((k^n), r, s) Young books fill."""
    lam = [k * n + s] * (r + k * n)
    mu = []
    for i in range(n, 0, -1):
        mu += [k * i] * (k - 1) + [k * i - 1]
    return make_truncated(Partition.of(lam), Partition.of(mu))


def _constant_block(book: BookShape) -> int:
    _require(book.m == 1, "truncated correspondence needs a single page")
    page = book.pages[0]
    _require(page.kind in ("ars", "nrs", "shifted-staircase"), "truncated correspondence needs a full staircase page")
    sizes = set(page.span_sizes)
    _require(len(sizes) == 1, "diagonal sizes must all be equal")
    return sizes.pop()


def to_truncated_tableau(filling) -> dict[Cell, int]:
    book = filling.book
    _constant_block(book)
    page = book.pages[0]
    out = {c: filling.labels[book.node_of(0, c)] for c in page.cells}
    for d in page.diagonals:
        out[(d.row_span[0], d.col_span[1])] = filling.labels[book.diag_id[d.index]]
    return out


def from_truncated_tableau(tab: dict[Cell, int], book: BookShape) -> tuple[int, ...]:
    _constant_block(book)
    page = book.pages[0]
    labels = [0] * book.total_cells
    for c in page.cells:
        labels[book.node_of(0, c)] = tab[c]
    for d in page.diagonals:
        labels[book.diag_id[d.index]] = tab[(d.row_span[0], d.col_span[1])]
    return tuple(labels)


# -- shape strings -------------------------------------------------------------

_PAGE_PREFIXES = ("shifted:", "skew:", "trunc:", "nrs:", "ars:")


def _ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(x) for x in text.split(",")]


def _keyvals(text: str, sep: str) -> tuple[dict[str, str], bool]:
    minus = False
    out = {}
    for item in text.split(sep):
        item = item.strip()
        if item == "minus":
            minus = True
            continue
        if item.endswith(",minus"):
            minus = True
            item = item[: -len(",minus")]
        key, _, val = item.partition("=")
        out[key.strip()] = val.strip()
    return out, minus


def parse_page(text: str) -> PageShape:
    """Parse one page, e.g. ``shifted:3,2,1`` or ``ars:a=1,2;r=1;s=2,minus``."""
    text = text.strip()
    try:
        if text.startswith("shifted:"):
            return make_shifted(_ints(text[len("shifted:"):]))
        if text.startswith("skew:"):
            outer, _, inner = text[len("skew:"):].partition("/")
            return make_skew(_ints(outer), _ints(inner))
        if text.startswith("trunc:"):
            outer, _, inner = text[len("trunc:"):].partition("\\")
            return make_truncated(_ints(outer), _ints(inner))
        if text.startswith("nrs:"):
            kv, minus = _keyvals(text[len("nrs:"):], ",")
            return make_nrs_staircase(int(kv["n"]), int(kv.get("r", 0)), int(kv.get("s", 0)), minus)
        if text.startswith("ars:"):
            kv, minus = _keyvals(text[len("ars:"):], ";")
            return make_ars_staircase(_ints(kv["a"]), int(kv.get("r", 0)), int(kv.get("s", 0)), minus)
    except (KeyError, ValueError) as exc:
        if isinstance(exc, ShapeError):
            raise
        raise ShapeError(f"cannot parse shape {text!r}: {exc}") from None
    raise ShapeError(f"unknown shape {text!r}")


_BOOK_RE = re.compile(r"^book:\[(.*)\]$", re.S)


def parse_book(text: str) -> BookShape:
    """Parse ``book:[page;page;...]`` or a single page string."""
    text = text.strip()
    match = _BOOK_RE.match(text)
    if not match:
        return BookShape([parse_page(text)])
    pieces = []
    for token in match.group(1).split(";"):
        if token.strip().startswith(_PAGE_PREFIXES) or not pieces:
            pieces.append(token)
        else:
            pieces[-1] += ";" + token
    return BookShape([parse_page(p) for p in pieces])
