"""Sparse polynomials with rational coefficients and the book generating functions.

Exponential generating functions are stored as ordinary polynomials: the
number of books with gap vector ``d`` is the coefficient of ``t^d`` times
``d_0! d_1! ...``.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Sequence

from .formulas import F, as_integer


class MultiPoly:
    """Polynomial in ``nvars`` variables named ``t{offset}, t{offset+1}, ...``.

    ``terms`` maps dense exponent tuples to nonzero :class:`Fraction`
    coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("nvars", "offset", "terms")

    def __init__(self, nvars: int, terms=None, offset: int = 0):
        self.nvars = nvars
        self.offset = offset
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent {exps} does not have {nvars} entries")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def constant(cls, nvars: int, c, offset: int = 0) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: c}, offset)

    @classmethod
    def variable(cls, nvars: int, index: int, offset: int = 0) -> MultiPoly:
        """The variable at position ``index`` (0-based, before applying ``offset``)."""
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1}, offset)

    @classmethod
    def linear(cls, nvars: int, indices: Iterable[int], offset: int = 0) -> MultiPoly:
        """Sum of the variables at the given positions."""
        terms = {}
        for index in indices:
            exps = [0] * nvars
            exps[index] = 1
            terms[tuple(exps)] = 1
        return cls(nvars, terms, offset)

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials have different variable counts")
            return other
        return MultiPoly.constant(self.nvars, other, self.offset)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return MultiPoly(self.nvars, terms, self.offset)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {k: -v for k, v in self.terms.items()}, self.offset)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = Fraction(other)
            return MultiPoly(self.nvars, {k: v * c for k, v in self.terms.items()}, self.offset)
        other = self._coerce(other)
        terms = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                terms[key] = terms.get(key, 0) + va * vb
        return MultiPoly(self.nvars, terms, self.offset)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = Fraction(c)
        return MultiPoly(self.nvars, {k: v / c for k, v in self.terms.items()}, self.offset)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.constant(self.nvars, 1, self.offset)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.nvars, other, self.offset)
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MultiPoly({self.to_text()})"

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError(f"exponent {exps} does not have {self.nvars} entries")
        return self.terms.get(exps, Fraction(0))

    def degrees(self) -> set[int]:
        return {sum(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def embed(self, nvars: int, shift: int, offset: int = 0) -> MultiPoly:
        """Place the variables at positions ``shift, shift+1, ...`` of a larger ring."""
        terms = {}
        for k, v in self.terms.items():
            exps = [0] * nvars
            exps[shift: shift + self.nvars] = k
            terms[tuple(exps)] = v
        return MultiPoly(nvars, terms, offset)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in graded lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = " ".join(
                f"t{self.offset + i}^{e}" for i, e in enumerate(exps) if e
            )
            parts.append(f"{c} * {mono}" if mono else f"{c}")
        return " + ".join(parts)

    def to_json(self) -> list[dict]:
        return [
            {"exponents": list(exps), "numerator": str(c.numerator), "denominator": str(c.denominator)}
            for exps, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, items: list[dict], nvars: int, offset: int = 0) -> MultiPoly:
        return cls(
            nvars,
            {tuple(it["exponents"]): Fraction(int(it["numerator"]), int(it["denominator"])) for it in items},
            offset,
        )


def _interval_sum(nvars: int, lo: int, hi: int, offset: int) -> MultiPoly:
    """t_lo + ... + t_hi in a ring whose first variable is t_offset."""
    return MultiPoly.linear(nvars, range(lo - offset, hi - offset + 1), offset)


def sb_genfun(n: int, m: int) -> MultiPoly:
    """prod_{i<j} (t_i + ... + t_{j-1})^m in variables t_1 .. t_{n-1}."""
    if n < 1:
        raise ValueError("n must be positive")
    nv = n - 1
    poly = MultiPoly.constant(nv, 1, offset=1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            poly = poly * _interval_sum(nv, i, j - 1, 1) ** m
    return poly


def yb_genfun(n: int, m: int) -> MultiPoly:
    """prod_{i<j} ((t_i + ... + t_{j-1}) / (j - i))^m."""
    if n < 1:
        raise ValueError("n must be positive")
    nv = n - 1
    base = MultiPoly.constant(nv, 1, offset=1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            base = base * (_interval_sum(nv, i, j - 1, 1) / (j - i))
    return base ** m


def sb_genfun_nrs(n: int, rvec: Sequence[int], svec: Sequence[int], corner: bool = True) -> MultiPoly:
    """Gap generating function of (n, r, s)-Selberg books in t_0 .. t_n.

    With ``corner=False`` the factor for the northeast rectangles is left out,
    giving the generating function of the minus books.
    """
    if len(rvec) != len(svec):
        raise ValueError("compositions differ in length")
    if n < 1:
        raise ValueError("n must be positive")
    nv = n + 1
    r, s, m = sum(rvec), sum(svec), len(rvec)
    poly = MultiPoly.constant(nv, 1)
    for i in range(1, n + 1):
        poly = poly * _interval_sum(nv, 0, i - 1, 0) ** r * _interval_sum(nv, i, n, 0) ** s
    if corner:
        poly = poly * _interval_sum(nv, 0, n, 0) ** sum(x * y for x, y in zip(rvec, svec))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            poly = poly * _interval_sum(nv, i, j - 1, 0) ** m
    return poly


def minus_genfun(n: int, r: int, s: int, m: int) -> MultiPoly:
    """Gap generating function of the minus books; depends only on the totals r, s, m."""
    if n < 1:
        raise ValueError("n must be positive")
    nv = n + 1
    poly = MultiPoly.constant(nv, 1)
    for i in range(1, n + 1):
        poly = poly * _interval_sum(nv, 0, i - 1, 0) ** r * _interval_sum(nv, i, n, 0) ** s
        for j in range(i + 1, n + 1):
            poly = poly * _interval_sum(nv, i, j - 1, 0) ** m
    return poly


def yb_genfun_nrs(n: int, rvec: Sequence[int], svec: Sequence[int]) -> MultiPoly:
    scale = Fraction(1)
    for ri, si in zip(rvec, svec):
        scale *= Fraction(F(ri) * F(si), F(n + ri + si))
    return sb_genfun_nrs(n, rvec, svec) * scale


def gap_count(poly: MultiPoly, gaps: Sequence[int], integral: bool = True) -> int | Fraction:
    """Number of books with the given gap vector: coefficient times prod d_i!."""
    value = poly.coefficient(gaps) * prod(factorial(d) for d in gaps)
    if integral:
        return as_integer(value, f"gap count at {tuple(gaps)}")
    return value


def exp_moment(poly: MultiPoly) -> Fraction:
    """Integral of the polynomial against exp(-t_0 - t_1 - ...) over the positive orthant."""
    return sum(
        (c * prod(factorial(e) for e in exps) for exps, c in poly.terms.items()),
        Fraction(0),
    )
