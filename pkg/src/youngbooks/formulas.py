"""Exact closed forms: counts of permutations, books and tableaux, and the
Selberg integral at integer and half-integer parameters.

Everything is computed with :class:`int` and :class:`fractions.Fraction`.
A count is always evaluated as a rational first and then checked to be an
integer; a nonzero remainder raises :class:`IntegralityError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb, factorial, prod
from typing import Sequence

from .shapes import Partition, ShapeError


class IntegralityError(ArithmeticError):
    pass


class UnsupportedGammaArgument(ValueError):
    pass


def as_integer(value, what: str = "value") -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise IntegralityError(f"{what} is not an integer: {value}")
    return value.numerator


# -- elementary products ---------------------------------------------------------

def double_factorial(n: int) -> int:
    """n(n-2)(n-4)... down to 1 or 2; the empty product for n = 0 and n = -1."""
    if n < -1:
        raise ValueError(f"double factorial undefined for {n}")
    return prod(range(n, 0, -2))


def superfactorial(k: int) -> int:
    """F(k) = 1! 2! ... (k-1)!, with F(0) = F(1) = 1."""
    if k < 0:
        raise ValueError(f"superfactorial undefined for {k}")
    return prod(factorial(i) for i in range(1, k))


F = superfactorial


def _check_compositions(rvec, svec):
    rvec, svec = tuple(rvec), tuple(svec)
    if len(rvec) != len(svec):
        raise ValueError(f"compositions differ in length: {rvec} vs {svec}")
    if any(x < 0 for x in rvec + svec):
        raise ValueError("composition parts must be nonnegative")
    return rvec, svec


# -- permutations and books -------------------------------------------------------

def sp_count(n: int, r: int, s: int, m: int) -> int:
    """Number of Selberg permutations of A(n, r, s, m)."""
    if n < 1 or min(r, s, m) < 0:
        raise ValueError("need n >= 1 and r, s, m >= 0")
    dd = double_factorial
    total = (r + s + 1) * n + m * comb(n, 2)
    value = Fraction(2**n * factorial(total), factorial(n))
    for j in range(1, n + 1):
        value *= Fraction(
            dd(j * m) * dd(2 * r + (j - 1) * m) * dd(2 * s + (j - 1) * m),
            dd(m) * dd(2 * r + 2 * s + 2 + (n + j - 2) * m),
        )
    return as_integer(value, f"|SP({n},{r},{s},{m})|")


def sb_count(n: int, m: int) -> int:
    """Number of (n, m)-Selberg books."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1, m >= 0")
    dd = double_factorial
    value = Fraction(2**n * factorial(n + m * comb(n, 2)), factorial(n) * dd(m) ** n)
    for j in range(1, n + 1):
        value *= Fraction(dd((j - 1) * m) ** 2 * dd(j * m), dd(2 + (n + j - 2) * m))
    return as_integer(value, f"|SB({n},{m})|")


def yb_count(n: int, m: int) -> int:
    """Number of (n, m)-Young books."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1, m >= 0")
    dd = double_factorial
    value = Fraction(2**n * factorial(n + m * comb(n, 2)), factorial(n) * dd(m) ** n)
    for j in range(1, n + 1):
        value *= Fraction(
            dd((j - 1) * m) ** 2 * dd(j * m),
            factorial(j - 1) ** m * dd(2 + (n + j - 2) * m),
        )
    return as_integer(value, f"|YB({n},{m})|")


def yb_count_nrs(n: int, rvec: Sequence[int], svec: Sequence[int]) -> int:
    """Number of (n, r, s)-Young books for compositions r and s of equal length."""
    rvec, svec = _check_compositions(rvec, svec)
    if n < 1 or not rvec:
        raise ValueError("need n >= 1 and at least one page")
    m = len(rvec)
    r, s = sum(rvec), sum(svec)
    dd = double_factorial
    corner = sum(x * y for x, y in zip(rvec, svec))
    value = Fraction(factorial((r + s + 1) * n + m * comb(n, 2) + corner))
    for ri, si in zip(rvec, svec):
        value *= Fraction(F(ri) * F(si), F(n + ri + si))
    value *= Fraction(2**n, factorial(n))
    for j in range(1, n + 1):
        value *= Fraction(
            dd(j * m) * dd(2 * r + (j - 1) * m) * dd(2 * s + (j - 1) * m),
            dd(m) * dd(2 * r + 2 * s + 2 + (n + j - 2) * m),
        )
    return as_integer(value, f"|YB({n},{rvec},{svec})|")


def syt_truncated_staircase(n: int, r: int, s: int) -> int:
    """SYT of a rectangle ((n+s)^(r+n)) with the staircase (n-1, ..., 1) cut
    from its southwest corner."""
    if n < 1 or min(r, s) < 0:
        raise ValueError("need n >= 1 and r, s >= 0")
    dd = double_factorial
    value = Fraction(factorial((r + s + 1) * n + comb(n, 2) + r * s))
    value *= Fraction(2**n * F(r) * F(s), factorial(n) * F(n + r + s))
    for j in range(1, n + 1):
        value *= Fraction(dd(j) * dd(2 * r + j - 1) * dd(2 * s + j - 1), dd(2 * r + 2 * s + n + j))
    return as_integer(value, "truncated staircase count")


def syt_skew_double(n: int, r1: int, r2: int, s1: int, s2: int) -> int:
    """SYT of the skew shape glued from an (n,r1,s1)- and an (n,r2,s2)-staircase."""
    return yb_count_nrs(n, (r1, r2), (s1, s2))


def syt_skew_double_printed(n: int, r1: int, r2: int, s1: int, s2: int) -> Fraction:
    """The closed form for the same skew count exactly as printed in the source.

    It lacks the ``m!! = 2`` divisor of each product factor, so it is ``2^n``
    times too large; kept only so the discrepancy can be reported.
    """
    r, s = r1 + r2, s1 + s2
    dd = double_factorial
    value = Fraction(
        2**n * factorial((r + s) * n + n * n + r1 * s1 + r2 * s2) * F(r1) * F(r2) * F(s1) * F(s2),
        factorial(n) * F(n + r1 + s1) * F(n + r2 + s2),
    )
    for j in range(1, n + 1):
        value *= Fraction(
            dd(2 * j) * dd(2 * r + 2 * j - 2) * dd(2 * s + 2 * j - 2),
            dd(2 * r + 2 * s + 2 * n + 2 * j - 2),
        )
    return value


def yb_count_ars_kn(k: int, n: int, rvec: Sequence[int], svec: Sequence[int]) -> int:
    """Number of (a, r, s)-Young books with every diagonal block of size k."""
    rvec, svec = _check_compositions(rvec, svec)
    if k < 1 or n < 1 or not rvec:
        raise ValueError("need k, n >= 1 and at least one page")
    m = len(rvec)
    r, s = sum(rvec), sum(svec)
    g = k * k * m
    dd = double_factorial
    corner = sum(x * y for x, y in zip(rvec, svec))
    value = Fraction(2**n * factorial((k * r + k * s + 1) * n + g * comb(n, 2) + corner), factorial(n))
    for ri, si in zip(rvec, svec):
        value *= Fraction(F(k) ** n * F(ri) * F(si), F(k * n + ri + si))
    for j in range(1, n + 1):
        value *= Fraction(
            dd(j * g) * dd(2 * k * r + (j - 1) * g) * dd(2 * k * s + (j - 1) * g),
            dd(g) * dd(2 * k * r + 2 * k * s + 2 + (n + j - 2) * g),
        )
    return as_integer(value, "(k^n, r, s)-Young book count")


def syt_truncated_panova(k: int, n: int, r: int, s: int) -> int:
    """SYT of ((kn+s)^(r+kn)) truncated by ((kn)^(k-1), kn-1, (kn-k)^(k-1), kn-k-1, ...)."""
    if k < 1 or n < 1 or min(r, s) < 0:
        raise ValueError("need k, n >= 1 and r, s >= 0")
    g = k * k
    dd = double_factorial
    value = Fraction(2**n * factorial((k * r + k * s + 1) * n + g * comb(n, 2) + r * s), factorial(n))
    value *= Fraction(F(k) ** n * F(r) * F(s), F(k * n + r + s))
    for j in range(1, n + 1):
        value *= Fraction(
            dd(j * g) * dd(2 * k * r + (j - 1) * g) * dd(2 * k * s + (j - 1) * g),
            dd(g) * dd(2 * k * r + 2 * k * s + 2 + (n + j - 2) * g),
        )
    return as_integer(value, "truncated shape count")


def minus_total(n: int, rvec, svec) -> int:
    return (sum(rvec) + sum(svec) + 1) * n + len(rvec) * comb(n, 2)


def sb_minus_count(n: int, rvec: Sequence[int], svec: Sequence[int]) -> int:
    rvec, svec = _check_compositions(rvec, svec)
    return sp_count(n, sum(rvec), sum(svec), len(rvec))


def sb_full_count(n: int, rvec: Sequence[int], svec: Sequence[int]) -> int:
    """Selberg books on full staircases: the corner cells take any labels."""
    rvec, svec = _check_compositions(rvec, svec)
    low = minus_total(n, rvec, svec)
    high = low + sum(x * y for x, y in zip(rvec, svec))
    ratio = as_integer(Fraction(factorial(high), factorial(low)), "factorial ratio")
    return sb_minus_count(n, rvec, svec) * ratio


def sb_yb_factor(n: int, rvec: Sequence[int], svec: Sequence[int]) -> int:
    """Selberg-to-Young count ratio for (n, r, s) books, valid gap vector by gap vector."""
    rvec, svec = _check_compositions(rvec, svec)
    value = Fraction(1)
    for ri, si in zip(rvec, svec):
        value *= Fraction(F(n + ri + si), F(ri) * F(si))
    return as_integer(value, "Selberg/Young factor")


def sb_yb_factor_ars(a: Sequence[int], rvec: Sequence[int], svec: Sequence[int]) -> int:
    rvec, svec = _check_compositions(rvec, svec)
    atot = sum(a)
    blocks = prod(F(x) for x in a)
    value = Fraction(1)
    for ri, si in zip(rvec, svec):
        value *= Fraction(F(atot + ri + si), blocks * F(ri) * F(si))
    return as_integer(value, "Selberg/Young factor")


# -- tableau oracles ---------------------------------------------------------------

def hook_count_straight(lam) -> int:
    lam = lam if isinstance(lam, Partition) else Partition.of(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if len(lam) else []
    hooks = prod(
        (lam[i] - j - 1) + (conj[j] - i - 1) + 1
        for i in range(len(lam))
        for j in range(lam[i])
    )
    return as_integer(Fraction(factorial(lam.size), hooks), "hook count")


def hook_count_shifted(lam) -> int:
    """Shifted SYT count, |lam|! / prod lam_i! * prod_{i<j} (lam_i - lam_j)/(lam_i + lam_j)."""
    lam = lam if isinstance(lam, Partition) else Partition.of(lam)
    if not lam.is_strict():
        raise ShapeError(f"shifted shapes need strict partitions: {lam.parts}")
    value = Fraction(factorial(lam.size), prod(factorial(p) for p in lam))
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            value *= Fraction(lam[i] - lam[j], lam[i] + lam[j])
    return as_integer(value, "shifted hook count")


def exact_determinant(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant by Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in matrix]
    size = len(a)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, size):
            if a[r][col] != 0:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def skew_count_determinant(lam, mu) -> int:
    """SYT of lam/mu as |lam/mu|! det[1/(lam_i - mu_j - i + j)!]."""
    lam = lam if isinstance(lam, Partition) else Partition.of(lam)
    mu = mu if isinstance(mu, Partition) else Partition.of(mu)
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        raise ShapeError(f"{mu.parts} is not contained in {lam.parts}")
    size = len(lam)
    mus = list(mu) + [0] * (size - len(mu))

    def entry(i, j):
        e = lam[i] - mus[j] - i + j
        return Fraction(1, factorial(e)) if e >= 0 else Fraction(0)

    det = exact_determinant([[entry(i, j) for j in range(size)] for i in range(size)])
    return as_integer(factorial(lam.size - mu.size) * det, "skew determinant count")


# -- exact Gamma values and the Selberg integral ----------------------------------

@dataclass(frozen=True)
class PiHalfScalar:
    """``coeff * pi^(k/2)`` with a rational coefficient."""

    coeff: Fraction
    k: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff == 0:
            object.__setattr__(self, "k", 0)

    def __mul__(self, other):
        other = _pi_half(other)
        return PiHalfScalar(self.coeff * other.coeff, self.k + other.k)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _pi_half(other)
        return PiHalfScalar(self.coeff / other.coeff, self.k - other.k)

    def is_rational(self) -> bool:
        return self.k == 0

    def as_fraction(self) -> Fraction:
        if self.k != 0:
            raise ValueError(f"{self} is not rational")
        return self.coeff

    def __str__(self):
        if self.k == 0:
            return str(self.coeff)
        return f"{self.coeff}*pi^({self.k}/2)"


def _pi_half(x) -> PiHalfScalar:
    return x if isinstance(x, PiHalfScalar) else PiHalfScalar(Fraction(x))


def gamma_exact(x) -> PiHalfScalar:
    """Gamma at a positive integer or half-integer."""
    x = Fraction(x)
    if x <= 0 or x.denominator not in (1, 2):
        raise UnsupportedGammaArgument(f"Gamma({x}) is outside positive (half-)integers")
    if x.denominator == 1:
        return PiHalfScalar(Fraction(factorial(x.numerator - 1)))
    n = (x.numerator - 1) // 2
    return PiHalfScalar(Fraction(double_factorial(2 * n - 1), 2**n), 1)


@dataclass(frozen=True)
class SelbergParams:
    n: int
    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            value = Fraction(getattr(self, name))
            if value.denominator > 2:
                raise UnsupportedGammaArgument(f"{name}={value} has denominator > 2")
            object.__setattr__(self, name, value)
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError("alpha and beta must be positive")
        bound = Fraction(1, self.n)
        if self.n > 1:
            bound = min(bound, self.alpha / (self.n - 1), self.beta / (self.n - 1))
        if self.gamma <= -bound:
            raise ValueError(f"gamma={self.gamma} outside the convergence range")


def selberg_exact(params: SelbergParams) -> PiHalfScalar:
    n, al, be, ga = params.n, params.alpha, params.beta, params.gamma
    value = PiHalfScalar(Fraction(1))
    for j in range(1, n + 1):
        value = value * gamma_exact(al + (j - 1) * ga) * gamma_exact(be + (j - 1) * ga)
        value = value * gamma_exact(1 + j * ga)
        value = value / gamma_exact(al + be + (n + j - 2) * ga) / gamma_exact(1 + ga)
    return value


def selberg_combinatorial(n: int, r: int, s: int, m: int, count: int | None = None) -> Fraction:
    """Integral side of the permutation interpretation, n! |SP| / (alphabet size)!.

    ``count`` overrides the closed-form permutation count, e.g. with an
    enumerated one.
    """
    if count is None:
        count = sp_count(n, r, s, m)
    return Fraction(factorial(n) * count, factorial((r + s + 1) * n + m * comb(n, 2)))


# -- polynomial integrals over the unit cube ----------------------------------------

def _simplex_monomial(exps: Sequence[int]) -> Fraction:
    """Integral of y_1^e_1 ... y_n^e_n over 0 < y_1 < ... < y_n < 1."""
    value = Fraction(1)
    acc = 0
    for k, e in enumerate(exps, start=1):
        acc += e
        value /= acc + k
    return value


def box_integral_exact(
    p: Sequence[int],
    q: Sequence[int],
    e: dict[tuple[int, int], int] | Sequence[Sequence[int]],
    max_terms: int = 10**6,
    ordered: bool = False,
) -> Fraction:
    """Integrate prod x_i^p_i (1-x_i)^q_i prod_{i<j} |x_i - x_j|^e_ij over [0,1]^n.

    The cube is split into the n! regions of fixed variable order; on each the
    absolute values resolve to signed differences and the expanded polynomial
    is integrated monomial by monomial over the simplex.  With ``ordered``
    only the region ``x_1 < x_2 < ... < x_n`` is integrated.
    """
    from .genfun import MultiPoly

    n = len(p)
    if len(q) != n:
        raise ValueError("p and q must have the same length")
    if n > 4:
        raise ValueError("box integral supports n <= 4")
    if not isinstance(e, dict):
        e = {(i, j): e[i][j] for i in range(n) for j in range(i + 1, n)}
    if any(v < 0 for v in list(p) + list(q) + list(e.values())):
        raise ValueError("exponents must be nonnegative")
    total = Fraction(0)
    orders = [tuple(range(n))] if ordered else permutations(range(n))
    for order in orders:
        # x_{order[t]} is the t-th smallest, i.e. simplex variable y_t
        slot = {var: t for t, var in enumerate(order)}
        y = [MultiPoly.variable(n, t) for t in range(n)]
        poly = MultiPoly.constant(n, 1)
        for var in range(n):
            yv = y[slot[var]]
            poly = poly * yv ** p[var] * (MultiPoly.constant(n, 1) - yv) ** q[var]
        for (i, j), power in e.items():
            if power == 0:
                continue
            hi, lo = (i, j) if slot[i] > slot[j] else (j, i)
            poly = poly * (y[slot[hi]] - y[slot[lo]]) ** power
            if len(poly.terms) > max_terms:
                raise RuntimeError("box integral exceeded its term budget")
        total += sum(c * _simplex_monomial(exps) for exps, c in poly.terms.items())
    return total


def selberg_box_integral(n: int, r: int, s: int, m: int) -> Fraction:
    """The Selberg integrand with exponents r, s and m, integrated directly."""
    e = {(i, j): m for i in range(n) for j in range(i + 1, n)}
    return box_integral_exact([r] * n, [s] * n, e)


def ars_box_integral(a: Sequence[int], r: int, s: int, m: int, ordered: bool = False) -> Fraction:
    """Integrand with x_i^{r a_i} (1-x_i)^{s a_i} |x_i - x_j|^{m a_i a_j}."""
    n = len(a)
    e = {(i, j): m * a[i] * a[j] for i in range(n) for j in range(i + 1, n)}
    return box_integral_exact([r * x for x in a], [s * x for x in a], e, ordered=ordered)
