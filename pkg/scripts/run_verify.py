"""Run the identity checks on a chosen grid and print a summary per identity.

    python scripts/run_verify.py --max-n 3 --max-m 2 --max-rs 2
    python scripts/run_verify.py --full --jobs 4      # the acceptance grids
"""

import argparse
import sys

from youngbooks import verify as vf


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--max-m", type=int, default=2)
    ap.add_argument("--max-rs", type=int, default=2)
    ap.add_argument("--full", action="store_true", help="ignore the caps and use each identity's own grid")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--only", nargs="*", default=None, help="identity names")
    args = ap.parse_args()

    cfg = vf.VerifyConfig() if args.full else vf.VerifyConfig(args.max_n, args.max_m, args.max_rs)
    names = args.only or list(vf.BY_NAME)
    reports = vf.run_identities(names, cfg, jobs=args.jobs)
    bad = 0
    for rep in reports:
        c = rep.counts()
        print(f"{rep.name:24s} {rep.status:8s} pass={c['pass']:<5d} erratum={c['erratum']:<4d} "
              f"fail={c['fail']:<3d} {rep.seconds:7.2f}s")
        for row in rep.rows:
            if row.status == "fail":
                bad += 1
                print(f"    FAIL {row.case}: {row.lhs} vs {row.rhs}  {row.note}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
