"""Identity checks behind ``youngbooks verify``.

Each check compares a closed form or generating function against an
independent count (backtracking enumeration, down-set DP, a determinant, or
a direct polynomial integral) over a parameter grid and returns one row per
case.  A row's status is ``pass``, ``fail`` or ``erratum``; the last marks a
printed formula that is known to be off and whose discrepancy was confirmed.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Callable

from . import combinat as cb
from . import formulas as fm
from . import genfun as gf
from . import shapes as sh

BIG_BOOK = "book:[shifted:6,2,1;shifted:5,4,1;shifted:5,2,1;shifted:4,2,1]"
BIG_BOOK_VALUE = 2**4 * 3 * 5**2 * 7 * 17 * 19 * 23 * 1649819
SKEW_LAMBDA = (7, 7, 7, 7, 7, 5, 5)
SKEW_MU = (4, 4)
SKEW_PRIME = 9173


@dataclass(frozen=True)
class VerifyConfig:
    max_n: int | None = None
    max_m: int | None = None
    max_rs: int | None = None
    cell_budget: int = cb.DEFAULT_CELL_BUDGET
    state_budget: int = cb.DEFAULT_STATE_BUDGET

    def n(self, default: int) -> int:
        return default if self.max_n is None else min(self.max_n, default)

    def m(self, default: int) -> int:
        return default if self.max_m is None else min(self.max_m, default)

    def rs(self, default: int) -> int:
        return default if self.max_rs is None else min(self.max_rs, default)


@dataclass
class CaseRow:
    case: str
    lhs: str
    rhs: str
    status: str
    note: str = ""


@dataclass
class IdentityReport:
    name: str
    title: str
    rows: list[CaseRow] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def status(self) -> str:
        statuses = {row.status for row in self.rows}
        if not self.rows or "fail" in statuses:
            return "fail"
        if "erratum" in statuses:
            return "erratum"
        return "pass"

    def counts(self) -> Counter:
        return Counter(row.status for row in self.rows)


def _row(case, lhs, rhs, ok=None, note="") -> CaseRow:
    if ok is None:
        ok = lhs == rhs
    return CaseRow(case, str(lhs), str(rhs), "pass" if ok else "fail", note)


# -- individual identities ----------------------------------------------------------

def check_big_young_book(cfg: VerifyConfig) -> list[CaseRow]:
    book = sh.parse_book(BIG_BOOK)
    value = cb.count_book(book, "young", cfg.state_budget)
    return [_row("|YB((6,2,1),(5,4,1),(5,2,1),(4,2,1))| by down-set DP", value, BIG_BOOK_VALUE)]


def check_skew_prime_factor(cfg: VerifyConfig) -> list[CaseRow]:
    det = fm.skew_count_determinant(SKEW_LAMBDA, SKEW_MU)
    dp = cb.count_linear_extensions(sh.page_order(sh.make_skew(SKEW_LAMBDA, SKEW_MU)), cfg.state_budget)
    return [
        _row(f"{SKEW_PRIME} divides #SYT(7^5 5^2 / 4^2)", det % SKEW_PRIME, 0),
        _row("determinant = down-set DP", det, dp),
    ]


def _staircase_cells(n: int, m: int) -> int:
    return n + m * comb(n, 2)


def check_book_count_lattice(cfg: VerifyConfig) -> list[CaseRow]:
    rows = []
    for n in range(1, cfg.n(4) + 1):
        for m in range(1, cfg.m(3) + 1):
            if _staircase_cells(n, m) > cfg.cell_budget:
                continue
            book = sh.staircase_book(n, m)
            sb_enum = cb.count_fillings(book, "selberg", cfg.cell_budget)
            yb_enum = cb.count_fillings(book, "young", cfg.cell_budget)
            sb, yb = fm.sb_count(n, m), fm.yb_count(n, m)
            rows.append(_row(f"|SB({n},{m})| formula vs backtracking", sb, sb_enum))
            rows.append(_row(f"|YB({n},{m})| formula vs backtracking", yb, yb_enum))
            rows.append(_row(f"|SB({n},{m})|/|YB({n},{m})| = F({n})^{m}",
                             Fraction(sb_enum, yb_enum), fm.F(n) ** m))
            rows.append(_row(f"|SP({n},0,0,{m})| = |SB({n},{m})|", fm.sp_count(n, 0, 0, m), sb))
    return rows


def inner_gap_vectors(n: int, m: int):
    """All d_1..d_{n-1} for (n, m) staircase books."""
    return cb_compositions(m * comb(n, 2), n - 1)


def cb_compositions(total, length):
    return list(sh.compositions(total, length))


def gap_counts_by_dp(book: sh.BookShape, kind: str, gap_vectors, state_budget: int) -> dict:
    """Exact count of fillings for each full gap vector d_0..d_n by pinned-diagonal DP."""
    oc = sh.order_constraints(book, kind)
    diags = book.diagonal_ids()
    out = {}
    for gaps in gap_vectors:
        labels, acc = [], 0
        for d in gaps[:-1]:
            acc += d + 1
            labels.append(acc)
        out[tuple(gaps)] = cb.count_with_fixed_positions(oc, dict(zip(diags, labels)), state_budget)
    return out


def check_gap_refinement(cfg: VerifyConfig, enum_budget: int = 16) -> list[CaseRow]:
    """Gap-refined counts by backtracking (up to ``enum_budget`` cells) and by pinned DP."""
    rows = []
    for n in range(2, cfg.n(4) + 1):
        for m in range(1, cfg.m(2) + 1):
            book = sh.staircase_book(n, m)
            full = [(0,) + d + (0,) for d in inner_gap_vectors(n, m)]
            polys = {"selberg": gf.sb_genfun(n, m), "young": gf.yb_genfun(n, m)}
            for kind, poly in polys.items():
                label = "SB" if kind == "selberg" else "YB"
                extra = " (m=1: Gelfand-Tsetlin volume form)" if kind == "young" and m == 1 else ""
                want = {g: gf.gap_count(poly, g[1:-1]) for g in full}
                want = {g: c for g, c in want.items() if c}
                if book.total_cells <= max(enum_budget, cfg.cell_budget):
                    dist = cb.enumerate_gap_distribution(book, kind, budget=book.total_cells)
                    bad = set(dist.keys() ^ want.keys()) | {g for g in dist if dist[g] != want.get(g)}
                    rows.append(_row(
                        f"{label}({n},{m};d) genfun vs enumeration over {len(want)} gap vectors{extra}",
                        f"{len(bad)} mismatches", "0 mismatches"))
                by_dp = gap_counts_by_dp(book, kind, full, cfg.state_budget)
                bad = [g for g, c in by_dp.items() if want.get(g, 0) != c]
                rows.append(_row(
                    f"{label}({n},{m};d) genfun vs pinned-diagonal DP over {len(full)} gap vectors",
                    f"{len(bad)} mismatches", "0 mismatches"))
            sb_y = all(
                gf.gap_count(polys["selberg"], d) == fm.F(n) ** m * gf.gap_count(polys["young"], d)
                for d in inner_gap_vectors(n, m)
            )
            rows.append(_row(f"SB({n},{m};d) = F({n})^{m} YB({n},{m};d) for every d", sb_y, True))
    return rows


def _representatives(items: list, limit: int = 4) -> list:
    if len(items) <= limit:
        return items
    picks = {0, len(items) - 1, len(items) // 2, len(items) // 3}
    return [items[i] for i in sorted(picks)]


def _balanced(total: int, length: int) -> tuple[int, ...]:
    base, extra = divmod(total, length)
    return tuple(base + (1 if i < extra else 0) for i in range(length))


def round_trip_all(book: sh.BookShape, n: int, r: int, s: int, m: int) -> tuple[int, bool]:
    """Push every Selberg filling of a minus book through the bijection and back."""
    oc = sh.order_constraints(book, "selberg")
    bij = cb.SelbergBijection(book)
    seen = set()
    ok = True
    for seq in cb.linear_extensions(oc):
        filling = cb.Filling.from_sequence(book, seq)
        word = bij.to_word(filling)
        if word in seen or bij.to_filling(word) != filling:
            ok = False
        seen.add(word)
    return len(seen), ok


def check_permutation_bijection(cfg: VerifyConfig, max_alphabet: int = 10) -> list[CaseRow]:
    rows = []
    perm_cache = {}
    max_m = cfg.m(3)
    rs_cap = cfg.rs(max_alphabet)
    budget = max(cfg.cell_budget, max_alphabet)
    for n in range(1, cfg.n(max_alphabet) + 1):
        for m in range(0, max_m + 1):
            for r in range(0, rs_cap + 1):
                for s in range(0, rs_cap + 1):
                    if cb.alphabet_size(n, r, s, m) > max_alphabet:
                        continue
                    key = (n, r, s, m if n > 1 else 0)
                    if key not in perm_cache:
                        perm_cache[key] = sum(1 for _ in cb.enumerate_selberg_permutations(n, r, s, m, budget))
                    enum = perm_cache[key]
                    formula = fm.sp_count(n, r, s, m)
                    rows.append(_row(f"|SP({n},{r},{s},{m})| enumeration vs closed form", enum, formula))
                    if m == 0:
                        continue
                    pairs = [(rv, sv) for rv in sh.compositions(r, m) for sv in sh.compositions(s, m)]
                    for rv, sv in _representatives(pairs):
                        book = sh.nrs_book(n, rv, sv, minus=True)
                        dp = cb.count_book(book, "selberg", cfg.state_budget)
                        rows.append(_row(f"|SB-({n},{rv},{sv})| DP vs |SP({n},{r},{s},{m})|", dp, formula))
                    rv, sv = _balanced(r, m), _balanced(s, m)
                    book = sh.nrs_book(n, rv, sv, minus=True)
                    size, ok = round_trip_all(book, n, r, s, m)
                    rows.append(_row(f"bijection SB-({n},{rv},{sv}) <-> SP({n},{r},{s},{m}) round trip",
                                     f"{size} distinct valid words, round trip {'ok' if ok else 'BROKEN'}",
                                     f"{enum} distinct valid words, round trip ok"))
    return rows


def check_selberg_exact(cfg: VerifyConfig) -> list[CaseRow]:
    rows = []
    for n in range(1, cfg.n(3) + 1):
        for r in range(cfg.rs(2) + 1):
            for s in range(cfg.rs(2) + 1):
                for m in range(cfg.m(3) + 1):
                    params = fm.SelbergParams(n, Fraction(r + 1), Fraction(s + 1), Fraction(m, 2))
                    exact = fm.selberg_exact(params)
                    comb_side = fm.selberg_combinatorial(n, r, s, m)
                    rows.append(_row(
                        f"S_{n}({r + 1},{s + 1},{Fraction(m, 2)}) Gamma product vs n!|SP|/N!",
                        exact, comb_side, exact.is_rational() and exact.coeff == comb_side,
                    ))
    return rows


def _nrs_grid(cfg: VerifyConfig):
    """(n, rvec, svec) with at most ``cell_budget`` cells in the full book."""
    cap = cfg.cell_budget
    for n in range(1, cfg.n(cap) + 1):
        for m in range(1, cfg.m(3) + 1):
            if n + m * comb(n, 2) > cap:
                continue
            for r in range(cfg.rs(cap) + 1):
                for s in range(cfg.rs(cap) + 1):
                    if (r + s + 1) * n + m * comb(n, 2) > cap:
                        continue
                    for rv in sh.compositions(r, m):
                        for sv in sh.compositions(s, m):
                            if sh.expected_total_cells((1,) * n, rv, sv) <= cap:
                                yield n, rv, sv


def _ars_grid(cfg: VerifyConfig, k: int):
    cap = cfg.cell_budget
    for n in range(1, cfg.n(cap) + 1):
        for m in range(1, cfg.m(3) + 1):
            for r in range(cfg.rs(cap) + 1):
                for s in range(cfg.rs(cap) + 1):
                    if sh.expected_minus_cells((k,) * n, (r,) + (0,) * (m - 1), (s,) + (0,) * (m - 1)) > cap:
                        continue
                    for rv in sh.compositions(r, m):
                        for sv in sh.compositions(s, m):
                            if sh.expected_total_cells((k,) * n, rv, sv) <= cap:
                                yield n, rv, sv


def check_nrs_ars_formulas(cfg: VerifyConfig) -> list[CaseRow]:
    rows = []
    cap = cfg.cell_budget
    count = 0
    bad = []
    for n, rv, sv in _nrs_grid(cfg):
        count += 1
        dp = cb.count_book(sh.nrs_book(n, rv, sv), "young", cfg.state_budget)
        if dp != fm.yb_count_nrs(n, rv, sv):
            bad.append((n, rv, sv))
    rows.append(_row(f"|YB(n,r,s)| closed form vs DP on {count} books (<= {cap} cells)",
                     f"{len(bad)} mismatches", "0 mismatches", note=str(bad[:3]) if bad else ""))

    count, bad = 0, []
    for n in range(1, cfg.n(cap) + 1):
        for r in range(cfg.rs(cap) + 1):
            for s in range(cfg.rs(cap) + 1):
                if (r + s + 1) * n + comb(n, 2) + r * s > cap:
                    continue
                lam = [n + s] * (r + n)
                shape = sh.make_truncated(lam, list(range(n - 1, 0, -1)))
                count += 1
                dp = cb.count_linear_extensions(sh.page_order(shape), cfg.state_budget)
                if dp != fm.syt_truncated_staircase(n, r, s):
                    bad.append((n, r, s))
    rows.append(_row(f"#SYT((n+s)^(r+n) \\ staircase) closed form vs DP on {count} shapes",
                     f"{len(bad)} mismatches", "0 mismatches", note=str(bad[:3]) if bad else ""))

    count, bad = 0, []
    for n, rv, sv in _ars_grid(cfg, 2):
        count += 1
        dp = cb.count_book(sh.ars_book((2,) * n, rv, sv), "young", cfg.state_budget)
        if dp != fm.yb_count_ars_kn(2, n, rv, sv):
            bad.append((n, rv, sv))
    rows.append(_row(f"|YB((2^n),r,s)| closed form vs DP on {count} books",
                     f"{len(bad)} mismatches", "0 mismatches", note=str(bad[:3]) if bad else ""))

    count, bad = 0, []
    for n in range(1, cfg.n(cap) + 1):
        for r in range(cfg.rs(cap) + 1):
            for s in range(cfg.rs(cap) + 1):
                target = sh.truncated_target(2, n, r, s)
                if target.size > cap:
                    continue
                count += 1
                dp = cb.count_linear_extensions(sh.page_order(target), cfg.state_budget)
                if dp != fm.syt_truncated_panova(2, n, r, s):
                    bad.append((n, r, s))
    rows.append(_row(f"#SYT(truncated shape, k=2) closed form vs DP on {count} shapes",
                     f"{len(bad)} mismatches", "0 mismatches", note=str(bad[:3]) if bad else ""))
    return rows


def check_skew_double(cfg: VerifyConfig) -> list[CaseRow]:
    rows = []
    for n in range(1, cfg.n(2) + 1):
        for r1, r2, s1, s2 in product(range(cfg.rs(2) + 1), repeat=4):
            lam, mu = sh.skew_double_partitions(n, r1, r2, s1, s2)
            det = fm.skew_count_determinant(lam, mu)
            value = fm.syt_skew_double(n, r1, r2, s1, s2)
            case = f"n={n} r=({r1},{r2}) s=({s1},{s2})"
            rows.append(_row(f"{case}: two-page book count vs skew determinant", value, det))
            printed = fm.syt_skew_double_printed(n, r1, r2, s1, s2)
            ratio = printed / det
            rows.append(CaseRow(
                f"{case}: printed skew closed form / determinant",
                str(ratio), str(2**n),
                "erratum" if ratio == 2**n else "fail",
                "printed closed form is 2^n times the determinant count",
            ))
    return rows


def check_integral_identities(cfg: VerifyConfig) -> list[CaseRow]:
    rows = []
    for n in range(1, cfg.n(3) + 1):
        for r in range(cfg.rs(2) + 1):
            for s in range(cfg.rs(2) + 1):
                for m in range(cfg.m(2) + 1):
                    moment = gf.exp_moment(gf.minus_genfun(n, r, s, m))
                    total = (r + s + 1) * n + m * comb(n, 2)
                    selberg = fm.selberg_exact(fm.SelbergParams(n, r + 1, s + 1, Fraction(m, 2)))
                    rhs = Fraction(factorial(total), factorial(n)) * selberg.as_fraction()
                    rows.append(_row(f"exp moment of minus genfun n={n} r={r} s={s} m={m}", moment, rhs))
    a = (1, 2)
    for r in range(cfg.rs(1) + 1):
        for s in range(cfg.rs(1) + 1):
            for m in range(1, cfg.m(1) + 1):
                book = sh.ars_book(a, (r,), (s,), minus=True) if m == 1 else sh.ars_book(
                    a, (r,) + (0,) * (m - 1), (s,) + (0,) * (m - 1), minus=True)
                count = cb.count_fillings(book, "selberg", max(cfg.cell_budget, book.total_cells))
                lhs = Fraction(factorial(len(a)) * count, factorial(book.total_cells))
                cube = fm.ars_box_integral(a, r, s, m)
                rows.append(_row(
                    f"a={a} r={r} s={s} m={m}: n!|SB-|/(N-)! vs integral over [0,1]^n",
                    lhs, cube,
                    note="" if lhs == cube else "integrand not symmetric in x_1, x_2; "
                    "the count matches the ordered region x_1 < x_2 only",
                ))
                ordered = fm.ars_box_integral(a, r, s, m, ordered=True)
                rows.append(_row(
                    f"a={a} r={r} s={s} m={m}: |SB-|/(N-)! vs integral over x_1 < x_2",
                    Fraction(count, factorial(book.total_cells)), ordered))
    return rows


def check_freeze(cfg: VerifyConfig) -> list[CaseRow]:
    rows = []
    budget = max(cfg.cell_budget, 15)
    for n in range(1, cfg.n(5) + 1):
        book = sh.staircase_book(n, 1)
        checked = passed = mutated = caught = 0
        for filling in cb.enumerate_fillings(book, "young", budget=budget):
            gaps = cb.classify_by_gaps(filling).gaps
            for k in range(n):
                for ell in range(1, n - k + 1):
                    if any(gaps[k + t] != t for t in range(1, ell)):
                        continue
                    checked += 1
                    passed += cb.check_freeze(filling, k, ell)
                    if ell >= 2:
                        bad = _mutate(filling, k, ell)
                        if bad is not None:
                            mutated += 1
                            caught += not cb.check_freeze(bad, k, ell)
        rows.append(_row(f"YB({n},1): forced block entries", f"{passed}/{checked} pass", f"{checked}/{checked} pass"))
        rows.append(_row(f"YB({n},1): mutated fillings rejected", f"{caught}/{mutated}", f"{mutated}/{mutated}"))
    for n in range(1, cfg.n(4) + 1):
        book = sh.staircase_book(n, 1)
        checked = passed = 0
        for filling in cb.enumerate_fillings(book, "selberg", budget=budget):
            gaps = cb.classify_by_gaps(filling).gaps
            for k in range(n):
                for ell in range(1, n - k + 1):
                    if any(gaps[k + t] != t for t in range(1, ell)):
                        continue
                    checked += 1
                    passed += cb.check_freeze(filling, k, ell, kind="selberg")
        rows.append(_row(f"SB({n},1): column segments are permutations of forced values",
                         f"{passed}/{checked} pass", f"{checked}/{checked} pass"))
    x = 1
    printed = x + comb(0, 2) + 1
    rows.append(CaseRow(
        "printed forced-entry formula x + C(j-1,2) + i at i=j=1",
        str(printed), str(cb.frozen_entry(x, 1, 1)),
        "erratum" if printed != cb.frozen_entry(x, 1, 1) else "fail",
        "printed offset is off by j-2; x + C(j,2) + i - 1 is what enumeration confirms",
    ))
    return rows


def _mutate(filling: cb.Filling, k: int, ell: int):
    """Swap the label of block cell (k+1, k+ell) with some cell outside the block."""
    book = filling.book
    page = book.pages[0]
    target = book.node_of(0, (k + 1, k + ell))
    block = {(k + i, k + j) for j in range(1, ell + 1) for i in range(1, j + 1)}
    for cell in sorted(page.cells):
        if cell not in block:
            other = book.node_of(0, cell)
            labels = list(filling.labels)
            labels[target], labels[other] = labels[other], labels[target]
            return cb.Filling(book, tuple(labels))
    return None


def check_notation_errata(cfg: VerifyConfig) -> list[CaseRow]:
    rows = []
    book = sh.nrs_book(1, (0,), (1,))
    filling = next(cb.enumerate_fillings(book, "selberg"))
    first_diag = filling.diagonal_entries()[0]
    d0_printed = first_diag - 1 - 1
    rows.append(CaseRow(
        "lower sentinel a_0 = 1 on (1,(0),(1)) books gives d_0",
        str(d0_printed), str(cb.classify_by_gaps(filling).gaps[0]),
        "erratum" if d0_printed < 0 else "fail",
        "a_0 = 0 is used so that d_0 counts the labels below the first diagonal",
    ))
    book = sh.nrs_book(1, (1,), (0,))
    dist = cb.gap_distribution(cb.enumerate_fillings(book, "selberg"))
    poly = gf.sb_genfun_nrs(1, (1,), (0,))
    literal = gf.MultiPoly(2, {(g[1], g[1]): Fraction(c, factorial(g[0]) * factorial(g[1])) for g, c in dist.items()})
    rows.append(CaseRow(
        "genfun for (1,(1),(0)) books with t_0 carrying exponent d_1",
        literal.to_text(), poly.to_text(),
        "erratum" if literal != poly else "fail",
        "exponent of t_0 read as d_0",
    ))
    k, n, m = 2, 2, 1
    book = sh.ars_book((k,) * n, (0,), (0,), minus=True)
    count = cb.count_book(book, "selberg", cfg.state_budget)
    lhs = Fraction(factorial(n) * count, factorial(book.total_cells))
    good = fm.selberg_exact(fm.SelbergParams(n, 1, 1, Fraction(k * k * m, 2))).as_fraction()
    bad = fm.selberg_exact(fm.SelbergParams(n, 1, 1, Fraction(2 * k * k * m))).as_fraction()
    rows.append(CaseRow(
        "merged-diagonal books, k=2 n=2: Selberg value at gamma = 2k^2m vs enumeration",
        str(bad), str(lhs),
        "erratum" if bad != lhs and good == lhs else "fail",
        f"gamma = k^2 m / 2 gives {good}, matching enumeration",
    ))
    return rows


@dataclass(frozen=True)
class Identity:
    name: str
    title: str
    check: Callable[[VerifyConfig], list[CaseRow]]


IDENTITIES = (
    Identity("big-young-book", "Young books on four shifted pages, exact count", check_big_young_book),
    Identity("skew-prime-factor", "skew SYT count with a large prime factor", check_skew_prime_factor),
    Identity("book-count-lattice", "Selberg/Young book closed forms vs enumeration", check_book_count_lattice),
    Identity("gap-refinement", "gap-refined counts vs generating functions", check_gap_refinement),
    Identity("permutation-bijection", "Selberg permutations vs minus books", check_permutation_bijection),
    Identity("selberg-exact", "Gamma product vs permutation count", check_selberg_exact),
    Identity("nrs-ars-formulas", "staircase and merged-diagonal closed forms vs DP", check_nrs_ars_formulas),
    Identity("skew-double", "two-page skew shapes vs determinant", check_skew_double),
    Identity("integral-identities", "exponential moments and box integrals", check_integral_identities),
    Identity("freeze", "forced entries under staircase gap patterns", check_freeze),
    Identity("notation-errata", "printed conventions that needed correcting", check_notation_errata),
)

BY_NAME = {ident.name: ident for ident in IDENTITIES}


def run_identity(name: str, cfg: VerifyConfig) -> IdentityReport:
    ident = BY_NAME[name]
    start = time.perf_counter()
    rows = ident.check(cfg)
    return IdentityReport(ident.name, ident.title, rows, time.perf_counter() - start)


def run_identities(names, cfg: VerifyConfig, jobs: int = 1) -> list[IdentityReport]:
    """Run the named checks; reports come back in the order requested."""
    names = list(names)
    if jobs <= 1 or len(names) <= 1:
        return [run_identity(name, cfg) for name in names]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_identity, names, [cfg] * len(names)))
