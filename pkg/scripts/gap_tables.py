"""Tabulate gap-refined counts of staircase books next to the generating function.

    python scripts/gap_tables.py 4 1
"""

import sys

from youngbooks import combinat as cb
from youngbooks import genfun as gf
from youngbooks import shapes as sh


def main(n=3, m=1):
    n, m = int(n), int(m)
    book = sh.staircase_book(n, m)
    sb, yb = gf.sb_genfun(n, m), gf.yb_genfun(n, m)
    enum_sb = cb.enumerate_gap_distribution(book, "selberg", budget=16)
    enum_yb = cb.enumerate_gap_distribution(book, "young", budget=16)
    print(f"{'d_1..d_(n-1)':>16s} {'SB enum':>9s} {'SB genfun':>9s} {'YB enum':>9s} {'YB genfun':>9s}")
    for exps, _ in sb.sorted_terms():
        full = (0,) + exps + (0,)
        print(f"{str(exps):>16s} {enum_sb.get(full, 0):9d} {gf.gap_count(sb, exps):9d} "
              f"{enum_yb.get(full, 0):9d} {gf.gap_count(yb, exps):9d}")
    print(f"{'total':>16s} {sum(enum_sb.values()):9d} {gf.exp_moment(sb)!s:>9s} "
          f"{sum(enum_yb.values()):9d} {gf.exp_moment(yb)!s:>9s}")


if __name__ == "__main__":
    main(*sys.argv[1:3])
