"""Command line entry point: ``youngbooks <command> ...``.

Human-readable output goes to stdout, ``--json`` switches to one JSON object
per invocation, and errors go to stderr with a nonzero exit code.  Every
number in JSON output is a decimal string.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import combinat as cb
from . import formulas as fm
from . import genfun as gf
from . import shapes as sh
from . import verify as vf

TRIAL_LIMIT = 10**6


def factorize(value: int) -> str:
    """Trial division up to 10^6; whatever is left over is printed as one cofactor."""
    if value == 0:
        return "0"
    sign = "-" if value < 0 else ""
    value = abs(value)
    if value == 1:
        return sign + "1"
    parts = []
    p = 2
    while p <= TRIAL_LIMIT and p * p <= value:
        e = 0
        while value % p == 0:
            value //= p
            e += 1
        if e:
            parts.append(f"{p}^{e}" if e > 1 else str(p))
        p += 1 if p == 2 else 2
    if value > 1:
        parts.append(str(value))
    return sign + "·".join(parts)


def _ints(text: str | None) -> tuple[int, ...]:
    if text is None or text.strip() == "":
        return ()
    return tuple(int(x) for x in text.split(","))


def _frac(text: str) -> Fraction:
    return Fraction(text)


class CommandError(Exception):
    pass


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = [("-" if len(n) == 1 else "--") + n.replace("_", "-") for n in missing]
        raise CommandError("missing option(s): " + ", ".join(flags))


def _compositions(args):
    rvec, svec = _ints(args.r), _ints(args.s)
    m = args.m
    if m is not None:
        if not rvec:
            rvec = (0,) * m
        if not svec:
            svec = (0,) * m
    if len(rvec) != len(svec):
        raise CommandError("-r and -s must list the same number of pages")
    if m is not None and len(rvec) != m:
        raise CommandError(f"-m {m} does not match {len(rvec)} entries in -r/-s")
    return rvec, svec


def _single(text: str | None, name: str) -> int:
    vals = _ints(text)
    if len(vals) > 1:
        raise CommandError(f"{name} takes a single integer here")
    return vals[0] if vals else 0


def _parse_shape(text: str) -> sh.PageShape:
    if text.strip().startswith(sh._PAGE_PREFIXES):
        return sh.parse_page(text)
    return sh.make_skew(_ints(text), ())


# -- subcommands -----------------------------------------------------------------

def cmd_count(args) -> dict:
    what = args.what
    params = {}
    if what == "sp":
        _need(args, "n", "m")
        r, s = _single(args.r, "-r"), _single(args.s, "-s")
        params = {"n": args.n, "r": r, "s": s, "m": args.m}
        value = fm.sp_count(args.n, r, s, args.m)
    elif what in ("sb", "yb"):
        _need(args, "n", "m")
        params = {"n": args.n, "m": args.m}
        value = (fm.sb_count if what == "sb" else fm.yb_count)(args.n, args.m)
    elif what == "yb-nrs":
        _need(args, "n")
        rvec, svec = _compositions(args)
        params = {"n": args.n, "r": list(rvec), "s": list(svec)}
        value = fm.yb_count_nrs(args.n, rvec, svec)
    elif what == "yb-ars":
        _need(args, "n", "k")
        rvec, svec = _compositions(args)
        params = {"k": args.k, "n": args.n, "r": list(rvec), "s": list(svec)}
        value = fm.yb_count_ars_kn(args.k, args.n, rvec, svec)
    elif what == "syt":
        _need(args, "shape")
        page = _parse_shape(args.shape)
        params = {"shape": args.shape}
        value = cb.count_linear_extensions(sh.page_order(page), args.states)
    elif what == "book":
        _need(args, "book")
        book = sh.parse_book(args.book)
        params = {"book": args.book, "kind": args.kind}
        value = cb.count_book(book, args.kind, args.states)
    else:  # pragma: no cover - argparse restricts choices
        raise CommandError(f"unknown count target {what!r}")
    return {"command": f"count {what}", "params": params, "value": value}


def _format_filling(filling: cb.Filling) -> list[str]:
    book = filling.book
    lines = []
    for p, page in enumerate(book.pages):
        rows = {}
        for square, owner in sorted(page.square_owner.items()):
            rows.setdefault(square[0], []).append((square[1], filling.labels[book.node_of(p, owner)]))
        width = len(str(book.total_cells))
        for row in sorted(rows):
            cells = dict(rows[row])
            hi = max(cells)
            line = " ".join(str(cells[c]).rjust(width) if c in cells else " " * width for c in range(1, hi + 1))
            lines.append(f"p{p + 1} " + line)
    return lines


def cmd_enumerate(args) -> dict:
    _need(args, "book")
    book = sh.parse_book(args.book)
    fillings = list(cb.enumerate_fillings(book, args.kind, limit=args.limit, budget=args.budget))
    cases = []
    for idx, filling in enumerate(fillings):
        case = {"index": str(idx), "labels": [str(x) for x in filling.labels]}
        if book.n:
            case["gaps"] = [str(d) for d in cb.classify_by_gaps(filling).gaps]
        case["rows"] = _format_filling(filling)
        cases.append(case)
    return {
        "command": "enumerate",
        "params": {"book": args.book, "kind": args.kind, "limit": args.limit},
        "value": len(fillings),
        "cases": cases,
    }


def cmd_genfun(args) -> dict:
    what = args.what
    _need(args, "n")
    if what in ("sb", "yb"):
        _need(args, "m")
        poly = (gf.sb_genfun if what == "sb" else gf.yb_genfun)(args.n, args.m)
        params = {"n": args.n, "m": args.m}
    else:
        rvec, svec = _compositions(args)
        poly = (gf.sb_genfun_nrs if what == "sb-nrs" else gf.yb_genfun_nrs)(args.n, rvec, svec)
        params = {"n": args.n, "r": list(rvec), "s": list(svec)}
    out = {"command": f"genfun {what}", "params": params, "polynomial": poly}
    if args.gaps is not None:
        gaps = _ints(args.gaps)
        if what in ("sb", "yb"):
            # full vectors d_0..d_n are accepted; the staircase genfun only sees d_1..d_{n-1}
            if len(gaps) == args.n + 1:
                if gaps[0] or gaps[-1]:
                    out["value"] = 0
                    return out
                gaps = gaps[1:-1]
        if len(gaps) != poly.nvars:
            raise CommandError(f"--gaps needs {poly.nvars} entries (or n+1 for staircase books)")
        out["params"]["gaps"] = list(gaps)
        out["value"] = gf.gap_count(poly, gaps)
    return out


def cmd_selberg(args) -> dict:
    _need(args, "n")
    if args.alpha is not None or args.beta is not None or args.gamma is not None:
        _need(args, "alpha", "beta", "gamma")
        params = fm.SelbergParams(args.n, _frac(args.alpha), _frac(args.beta), _frac(args.gamma))
    else:
        _need(args, "m")
        r, s = _single(args.r, "-r"), _single(args.s, "-s")
        params = fm.SelbergParams(args.n, Fraction(r + 1), Fraction(s + 1), Fraction(args.m, 2))
    value = fm.selberg_exact(params)
    out = {
        "command": "selberg",
        "params": {"n": params.n, "alpha": params.alpha, "beta": params.beta, "gamma": params.gamma},
        "value": value.as_fraction() if value.is_rational() else value,
    }
    return out


def cmd_verify(args) -> dict:
    names = list(vf.BY_NAME) if args.identity == "all" else [args.identity]
    if args.identity != "all" and args.identity not in vf.BY_NAME:
        raise CommandError(f"unknown identity {args.identity!r}; choose from: all, " + ", ".join(vf.BY_NAME))
    cfg = vf.VerifyConfig(
        max_n=args.max_n, max_m=args.max_m, max_rs=args.max_rs,
        cell_budget=args.budget, state_budget=args.states,
    )
    reports = vf.run_identities(names, cfg, jobs=args.jobs)
    cases = []
    for report in reports:
        for row in report.rows:
            cases.append({
                "identity": report.name, "case": row.case,
                "lhs": row.lhs, "rhs": row.rhs, "status": row.status, "note": row.note,
            })
    failed = sum(r.status == "fail" for r in reports)
    errata = sum(r.status == "erratum" for r in reports)
    return {
        "command": f"verify {args.identity}",
        "params": {"max_n": args.max_n, "max_m": args.max_m, "max_rs": args.max_rs,
                   "budget": args.budget, "states": args.states},
        "value": f"{len(reports) - failed}/{len(reports)}",
        "cases": cases,
        "_reports": reports,
        "_failed": failed,
        "_errata": errata,
    }


# -- output ------------------------------------------------------------------------

def _jsonable(obj):
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, (int, Fraction, fm.PiHalfScalar)):
        return str(obj)
    if isinstance(obj, gf.MultiPoly):
        return {"variables": [f"t{obj.offset + i}" for i in range(obj.nvars)], "terms": obj.to_json()}
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items() if not k.startswith("_")}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _with_factorization(result: dict) -> dict:
    value = result.get("value")
    if isinstance(value, int) and not isinstance(value, bool):
        result["factorization"] = factorize(value)
    elif isinstance(value, Fraction) and value:
        result["factorization"] = factorize(value.numerator) + (
            "" if value.denominator == 1 else " / " + factorize(value.denominator))
    return result


def render_text(result: dict) -> str:
    lines = []
    if "_reports" in result:
        width = max((len(r.name) for r in result["_reports"]), default=0)
        for report in result["_reports"]:
            c = report.counts()
            lines.append(f"== {report.name.ljust(width)}  {report.status.upper():7s} "
                         f"pass={c['pass']} erratum={c['erratum']} fail={c['fail']}  ({report.title})")
            for row in report.rows:
                mark = {"pass": "ok", "fail": "FAIL", "erratum": "ERRATUM"}[row.status]
                line = f"   [{mark}] {row.case}: {row.lhs} vs {row.rhs}"
                if row.note and row.status != "pass":
                    line += f"  ({row.note})"
                lines.append(line)
        lines.append(f"identities passing: {result['value']}"
                     + (f"; {result['_errata']} with printed-formula errata noted" if result["_errata"] else ""))
        return "\n".join(lines)
    if "polynomial" in result:
        lines.append(result["polynomial"].to_text())
    if "cases" in result:
        for case in result["cases"]:
            head = f"# {case['index']}"
            if "gaps" in case:
                head += "  gaps " + ",".join(case["gaps"])
            lines.append(head)
            lines.extend(case["rows"])
    if "value" in result:
        lines.append(f"value: {result['value']}")
    if "factorization" in result:
        lines.append(f"factorization: {result['factorization']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="youngbooks", description="Exact counts for Selberg and Young books.")
    parser.add_argument("--json", action="store_true", help="emit one JSON object")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int)
    common.add_argument("-m", type=int)
    common.add_argument("-r", help="integer or comma-separated composition")
    common.add_argument("-s", help="integer or comma-separated composition")
    common.add_argument("-k", type=int)
    common.add_argument("--shape")
    common.add_argument("--book")
    common.add_argument("--kind", choices=("young", "selberg"), default="young")
    common.add_argument("--gaps", help="comma-separated gap vector")
    common.add_argument("--budget", type=int, default=cb.DEFAULT_CELL_BUDGET,
                        help="backtracking cell budget (default %(default)s)")
    common.add_argument("--states", type=int, default=cb.DEFAULT_STATE_BUDGET,
                        help="down-set DP state budget (default %(default)s)")
    common.add_argument("--limit", type=int)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("count", parents=[common], help="closed-form or DP counts")
    p.add_argument("what", choices=("sp", "sb", "yb", "yb-nrs", "yb-ars", "syt", "book"))
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", parents=[common], help="list fillings of a book")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("genfun", parents=[common], help="gap generating functions")
    p.add_argument("what", choices=("sb", "yb", "sb-nrs", "yb-nrs"))
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("selberg", parents=[common], help="exact Selberg integral")
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--gamma")
    p.set_defaults(func=cmd_selberg)

    p = sub.add_parser("verify", parents=[common], help="run identity checks")
    p.add_argument("identity", help="'all' or one of: " + ", ".join(vf.BY_NAME))
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-m", type=int)
    p.add_argument("--max-rs", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = _with_factorization(args.func(args))
    except cb.BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=stderr)
        return 3
    except (CommandError, sh.ShapeError, sh.ConstraintError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    if args.json:
        json.dump(_jsonable(result), stdout, indent=2, ensure_ascii=False)
        stdout.write("\n")
    else:
        print(render_text(result), file=stdout)
    if "_reports" in result:
        if result["_errata"]:
            print("warning: printed-formula errata were detected and noted", file=stderr)
        return 1 if result["_failed"] else 0
    return 0


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
