"""Enumeration and counting of Selberg books, Young books and Selberg permutations."""

from __future__ import annotations

import re
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, NamedTuple, Sequence

from .shapes import (
    BookShape,
    ConstraintError,
    OrderConstraints,
    ShapeError,
    order_constraints,
)

DEFAULT_CELL_BUDGET = 14
DEFAULT_STATE_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Budget:
    cells: int = DEFAULT_CELL_BUDGET
    states: int = DEFAULT_STATE_BUDGET


# -- linear extensions --------------------------------------------------------

def _pred_masks(oc: OrderConstraints) -> list[int]:
    masks = [0] * oc.size
    for u, v in oc.pairs:
        masks[v] |= 1 << u
    return masks


def count_linear_extensions(oc: OrderConstraints, state_budget: int = DEFAULT_STATE_BUDGET) -> int:
    """Count linear extensions by dynamic programming over down-sets.

    Down-sets are bitmasks; the frontier is advanced one element at a time so
    only two layers of the lattice are alive at once.
    """
    oc.check_acyclic()
    preds = _pred_masks(oc)
    size = oc.size
    layer = {0: 1}
    seen = 1
    for _ in range(size):
        nxt = defaultdict(int)
        for mask, ways in layer.items():
            for e in range(size):
                bit = 1 << e
                if not mask & bit and preds[e] & mask == preds[e]:
                    nxt[mask | bit] += ways
        seen += len(nxt)
        if seen > state_budget:
            raise BudgetExceeded(f"down-set DP exceeded {state_budget} states")
        layer = nxt
    return layer.get((1 << size) - 1, 0) if size else 1


def linear_extensions(oc: OrderConstraints) -> Iterator[tuple[int, ...]]:
    """Yield every linear extension as the sequence of elements in increasing order.

    Candidates are tried in increasing element id, so the stream is sorted
    lexicographically by that sequence.
    """
    oc.check_acyclic()
    preds = _pred_masks(oc)
    size = oc.size
    if size == 0:
        yield ()
        return
    seq = []
    mask = 0
    nxt = [0] * (size + 1)
    depth = 0
    while True:
        if depth == size:
            yield tuple(seq)
            depth -= 1
            mask ^= 1 << seq.pop()
            continue
        e = nxt[depth]
        while e < size and (mask >> e & 1 or preds[e] & mask != preds[e]):
            e += 1
        if e < size:
            nxt[depth] = e + 1
            seq.append(e)
            mask |= 1 << e
            depth += 1
            nxt[depth] = 0
        else:
            if depth == 0:
                return
            depth -= 1
            mask ^= 1 << seq.pop()


def count_with_fixed_positions(
    oc: OrderConstraints, fixed: dict[int, int], state_budget: int = DEFAULT_STATE_BUDGET
) -> int:
    """Count linear extensions in which element ``e`` sits at 1-based position ``fixed[e]``."""
    oc.check_acyclic()
    preds = _pred_masks(oc)
    size = oc.size
    at = {pos: e for e, pos in fixed.items()}
    if len(at) != len(fixed) or any(not 1 <= p <= size for p in at):
        return 0
    free = [e for e in range(size) if e not in fixed]
    layer = {0: 1}
    seen = 1
    for pos in range(1, size + 1):
        nxt = defaultdict(int)
        choices = [at[pos]] if pos in at else free
        for mask, ways in layer.items():
            for e in choices:
                bit = 1 << e
                if not mask & bit and preds[e] & mask == preds[e]:
                    nxt[mask | bit] += ways
        seen += len(nxt)
        if seen > state_budget:
            raise BudgetExceeded(f"down-set DP exceeded {state_budget} states")
        layer = nxt
        if not layer:
            return 0
    return sum(layer.values())


# -- fillings -----------------------------------------------------------------

@dataclass(frozen=True)
class Filling:
    book: BookShape
    labels: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.labels) != list(range(1, self.book.total_cells + 1)):
            raise ValueError("labels must be a bijection onto 1..N")

    @classmethod
    def from_sequence(cls, book: BookShape, seq: Sequence[int]) -> Filling:
        labels = [0] * len(seq)
        for pos, node in enumerate(seq, start=1):
            labels[node] = pos
        return cls(book, tuple(labels))

    def satisfies(self, oc: OrderConstraints) -> bool:
        return all(self.labels[u] < self.labels[v] for u, v in oc.pairs)

    def is_young(self) -> bool:
        return self.satisfies(order_constraints(self.book, "young"))

    def is_selberg(self) -> bool:
        return self.satisfies(order_constraints(self.book, "selberg"))

    def diagonal_entries(self) -> list[int]:
        return [self.labels[i] for i in self.book.diagonal_ids()]

    def label_of(self, page: int, cell) -> int:
        return self.labels[self.book.node_of(page, cell)]


def enumerate_fillings(
    book: BookShape,
    kind: str = "young",
    limit: int | None = None,
    budget: int = DEFAULT_CELL_BUDGET,
) -> Iterator[Filling]:
    """Every valid filling of ``book`` exactly once, by backtracking.

    Without ``limit`` a book larger than ``budget`` cells raises
    :class:`BudgetExceeded`; with ``limit`` at most that many are produced.
    """
    if book.total_cells > budget and limit is None:
        raise BudgetExceeded(
            f"book has {book.total_cells} cells, backtracking budget is {budget}"
        )
    oc = order_constraints(book, kind)
    for count, seq in enumerate(linear_extensions(oc)):
        if limit is not None and count >= limit:
            return
        yield Filling.from_sequence(book, seq)


def count_fillings(book: BookShape, kind: str = "young", budget: int = DEFAULT_CELL_BUDGET) -> int:
    return sum(1 for _ in enumerate_fillings(book, kind, budget=budget))


def count_book(book: BookShape, kind: str = "young", state_budget: int = DEFAULT_STATE_BUDGET) -> int:
    return count_linear_extensions(order_constraints(book, kind), state_budget)


# -- gap vectors ----------------------------------------------------------------

@dataclass(frozen=True)
class GapVector:
    """Gaps ``d_0, ..., d_n`` between consecutive diagonal entries.

    The sentinels are ``a_0 = 0`` and ``a_{n+1} = N + 1``.
    """

    gaps: tuple[int, ...]

    @property
    def inner(self) -> tuple[int, ...]:
        return self.gaps[1:-1]

    @property
    def n(self) -> int:
        return len(self.gaps) - 1


def classify_by_gaps(filling: Filling) -> GapVector:
    if filling.book.n == 0:
        raise ShapeError("gap vectors need diagonal cells")
    diag = [0] + filling.diagonal_entries() + [filling.book.total_cells + 1]
    return GapVector(tuple(diag[i + 1] - diag[i] - 1 for i in range(len(diag) - 1)))


def gap_distribution(fillings) -> Counter:
    return Counter(classify_by_gaps(f).gaps for f in fillings)


def enumerate_gap_distribution(
    book: BookShape, kind: str = "young", budget: int = DEFAULT_CELL_BUDGET
) -> Counter:
    """Gap vectors of every filling, read straight off the backtracking stream."""
    if book.n == 0:
        raise ShapeError("gap vectors need diagonal cells")
    if book.total_cells > budget:
        raise BudgetExceeded(f"book has {book.total_cells} cells, backtracking budget is {budget}")
    diags = book.diagonal_ids()
    top = book.total_cells + 1
    dist = Counter()
    for seq in linear_extensions(order_constraints(book, kind)):
        where = [0] + [seq.index(d) + 1 for d in diags] + [top]
        dist[tuple(b - a - 1 for a, b in zip(where, where[1:]))] += 1
    return dist


# -- Selberg permutations ------------------------------------------------------

class Letter(NamedTuple):
    kind: str  # one of "x", "a", "b", "c"
    i: int
    j: int = 0
    k: int = 0

    def __str__(self):
        if self.kind == "x":
            return f"x{self.i}"
        if self.kind == "a":
            return f"a{self.i},{self.j}^({self.k})"
        return f"{self.kind}{self.i}^({self.k})"


_LETTER_RE = re.compile(r"^(x)(\d+)$|^(a)(\d+),?(\d+)\^\((\d+)\)$|^([bc])(\d+)\^\((\d+)\)$")


def parse_letter(text: str) -> Letter:
    m = _LETTER_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse letter {text!r}")
    if m.group(1):
        return Letter("x", int(m.group(2)))
    if m.group(3):
        return Letter("a", int(m.group(4)), int(m.group(5)), int(m.group(6)))
    return Letter(m.group(7), int(m.group(8)), 0, int(m.group(9)))


def parse_word(text: str) -> tuple[Letter, ...]:
    return tuple(parse_letter(tok) for tok in text.split())


def format_word(word: Sequence[Letter]) -> str:
    return " ".join(str(x) for x in word)


def alphabet(n: int, r: int, s: int, m: int) -> list[Letter]:
    letters = [Letter("x", i) for i in range(1, n + 1)]
    letters += [Letter("a", i, j, k) for i in range(1, n + 1) for j in range(i + 1, n + 1) for k in range(1, m + 1)]
    letters += [Letter("b", i, 0, k) for i in range(1, n + 1) for k in range(1, r + 1)]
    letters += [Letter("c", i, 0, k) for i in range(1, n + 1) for k in range(1, s + 1)]
    return letters


def alphabet_size(n: int, r: int, s: int, m: int) -> int:
    return (r + s + 1) * n + m * comb(n, 2)


@lru_cache(maxsize=256)
def _alphabet_set(n: int, r: int, s: int, m: int) -> frozenset:
    return frozenset(alphabet(n, r, s, m))


def is_selberg_permutation(word: Sequence[Letter], n: int, r: int, s: int, m: int) -> bool:
    letters = set(word)
    if len(letters) != len(word) or letters != _alphabet_set(n, r, s, m):
        return False
    pos = {letter: idx for idx, letter in enumerate(word)}
    x = [None] + [pos[Letter("x", i)] for i in range(1, n + 1)]
    if any(x[i] > x[i + 1] for i in range(1, n)):
        return False
    for letter, p in pos.items():
        if letter.kind == "a" and not x[letter.i] < p < x[letter.j]:
            return False
        if letter.kind == "b" and not p < x[letter.i]:
            return False
        if letter.kind == "c" and not p > x[letter.i]:
            return False
    return True


def enumerate_selberg_permutations(
    n: int, r: int, s: int, m: int, budget: int = DEFAULT_CELL_BUDGET
) -> Iterator[tuple[Letter, ...]]:
    """All Selberg permutations, built left to right.

    A letter may be written once everything it must follow is written:
    ``x_i`` waits for ``x_{i-1}``, its ``b_i`` and every ``a_{hi}``; the
    ``a_{ij}`` and ``c_i`` letters wait for their ``x_i``.
    """
    if n < 1:
        raise ValueError("Selberg permutations need n >= 1")
    size = alphabet_size(n, r, s, m)
    if size > budget:
        raise BudgetExceeded(f"alphabet has {size} letters, budget is {budget}")
    letters = alphabet(n, r, s, m)
    # x_i is blocked by this many unwritten letters
    blockers = [0] + [(1 if i > 1 else 0) + r + m * (i - 1) for i in range(1, n + 1)]
    written_x = [False] * (n + 1)
    used = [False] * len(letters)
    word = []

    def ready(letter):
        if letter.kind == "x":
            return blockers[letter.i] == 0
        if letter.kind in ("a", "c"):
            return written_x[letter.i]
        return True

    def release(letter, delta):
        if letter.kind == "x" and letter.i < n:
            blockers[letter.i + 1] += delta
        elif letter.kind == "a":
            blockers[letter.j] += delta
        elif letter.kind == "b":
            blockers[letter.i] += delta

    def rec():
        if len(word) == size:
            yield tuple(word)
            return
        for idx, letter in enumerate(letters):
            if used[idx] or not ready(letter):
                continue
            used[idx] = True
            word.append(letter)
            release(letter, -1)
            if letter.kind == "x":
                written_x[letter.i] = True
            yield from rec()
            if letter.kind == "x":
                written_x[letter.i] = False
            release(letter, +1)
            word.pop()
            used[idx] = False

    yield from rec()


# -- the book <-> permutation bijection ----------------------------------------

def _letter_map(book: BookShape) -> dict[int, Letter]:
    """Letter carried by each node of an (n, r, s)^- book."""
    if book.n == 0:
        raise ShapeError("bijection needs diagonal cells")
    for page in book.pages:
        if page.kind not in ("nrs-minus", "shifted-staircase"):
            raise ShapeError(f"bijection is defined on (n,r,s)^- pages only, got {page.kind}")
    n = book.n
    out = {book.diag_id[i]: Letter("x", i) for i in range(1, n + 1)}
    r_off = s_off = 0
    for p, page in enumerate(book.pages):
        for row, col in page.cells:
            node = book.node_of(p, (row, col))
            if row <= page.r:
                out[node] = Letter("b", col, 0, r_off + row)
            elif col <= n:
                out[node] = Letter("a", row - page.r, col, p + 1)
            else:
                out[node] = Letter("c", row - page.r, 0, s_off + col - n)
        r_off += page.r
        s_off += page.s
    return out


class SelbergBijection:
    """The book <-> permutation correspondence for one (n, r, s)^- book shape."""

    def __init__(self, book: BookShape):
        self.book = book
        self.letters = _letter_map(book)
        self.node_of = {letter: node for node, letter in self.letters.items()}
        self.params = (book.n, sum(book.rvec), sum(book.svec), book.m)

    def to_word(self, filling: Filling) -> tuple[Letter, ...]:
        if filling.book is not self.book:
            raise ValueError("filling belongs to a different book")
        word = [None] * len(filling.labels)
        for node, label in enumerate(filling.labels):
            word[label - 1] = self.letters[node]
        return tuple(word)

    def to_filling(self, word: Sequence[Letter]) -> Filling:
        if not is_selberg_permutation(word, *self.params):
            raise ValueError("not a Selberg permutation for this book")
        labels = [0] * len(word)
        for pos, letter in enumerate(word, start=1):
            labels[self.node_of[letter]] = pos
        return Filling(self.book, tuple(labels))


def book_to_permutation(filling: Filling) -> tuple[Letter, ...]:
    return SelbergBijection(filling.book).to_word(filling)


def permutation_to_book(word: Sequence[Letter], book: BookShape) -> Filling:
    return SelbergBijection(book).to_filling(word)


# -- frozen entries -------------------------------------------------------------

class FreezePreconditionError(ValueError):
    pass


def frozen_entry(x: int, i: int, j: int) -> int:
    """Forced label at row ``k+i``, column ``k+j`` when diagonal ``k+1`` holds ``x``."""
    return x + comb(j, 2) + i - 1


def check_freeze(filling: Filling, k: int, ell: int, kind: str = "young") -> bool:
    """Check the forced block in rows and columns ``k+1 .. k+ell``.

    Needs a single shifted-staircase page with gaps ``d_{k+t} = t`` for
    ``t = 1 .. ell-1``.  Young kind: every entry of the block equals
    :func:`frozen_entry`.  Selberg kind: each column segment above the
    diagonal is a permutation of the forced values.
    """
    book = filling.book
    if book.m != 1 or book.pages[0].kind != "shifted-staircase":
        raise FreezePreconditionError("freeze check needs a single shifted staircase page")
    n = book.n
    if k < 0 or ell < 0 or k + ell > n:
        raise FreezePreconditionError(f"block k={k}, ell={ell} does not fit n={n}")
    gaps = classify_by_gaps(filling).gaps
    for t in range(1, ell):
        if gaps[k + t] != t:
            raise FreezePreconditionError(f"d_{k + t} = {gaps[k + t]}, expected {t}")
    if ell == 0:
        return True
    x = filling.labels[book.diag_id[k + 1]]
    page = book.pages[0]

    def entry(row, col):
        own = page.square_owner[(row, col)]
        return filling.labels[book.node_of(0, own)]

    for j in range(1, ell + 1):
        if kind == "young":
            for i in range(1, j + 1):
                if entry(k + i, k + j) != frozen_entry(x, i, j):
                    return False
        elif kind == "selberg":
            got = sorted(entry(k + i, k + j) for i in range(1, j))
            want = [frozen_entry(x, i, j) for i in range(1, j)]
            if got != want or entry(k + j, k + j) != frozen_entry(x, j, j):
                return False
        else:
            raise ValueError(f"unknown kind {kind!r}")
    return True


__all__ = [
    "Budget",
    "BudgetExceeded",
    "ConstraintError",
    "Filling",
    "GapVector",
    "Letter",
    "alphabet",
    "alphabet_size",
    "SelbergBijection",
    "book_to_permutation",
    "check_freeze",
    "classify_by_gaps",
    "count_book",
    "count_fillings",
    "count_linear_extensions",
    "enumerate_fillings",
    "enumerate_gap_distribution",
    "enumerate_selberg_permutations",
    "format_word",
    "frozen_entry",
    "gap_distribution",
    "is_selberg_permutation",
    "linear_extensions",
    "parse_word",
    "permutation_to_book",
]
