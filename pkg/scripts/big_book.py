"""Count Young books on four shifted pages and time the down-set DP.

    python scripts/big_book.py
    python scripts/big_book.py "book:[shifted:5,3,1;shifted:4,3,1]"
"""

import sys
import time

from youngbooks import combinat as cb
from youngbooks import shapes as sh
from youngbooks.cli import factorize

DEFAULT = "book:[shifted:6,2,1;shifted:5,4,1;shifted:5,2,1;shifted:4,2,1]"


def main(text=DEFAULT):
    book = sh.parse_book(text)
    print(f"{text}: {book.m} pages, {book.n} diagonal cells, {book.total_cells} cells")
    for kind in ("young", "selberg"):
        try:
            start = time.perf_counter()
            value = cb.count_book(book, kind)
        except (sh.ShapeError, cb.BudgetExceeded) as exc:
            print(f"  {kind:8s} n/a ({exc})")
            continue
        secs = time.perf_counter() - start
        print(f"  {kind:8s} {value}  = {factorize(value)}   [{secs:.3f}s]")


if __name__ == "__main__":
    main(*sys.argv[1:2])
