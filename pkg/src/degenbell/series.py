"""Truncated exponential-generating-function arithmetic.

A `Series` of order N stores the EGF coefficients a_0 .. a_N of
f(s) = sum_n a_n s^n / n!, each a_n a `Poly`.  The formal variable is
called ``s`` here and is deliberately distinct from the ring
indeterminate ``t``: several identities use ``t`` as a polynomial
argument at the same time as the generating variable.

Under the EGF convention the product is the binomial convolution
c_n = sum_j C(n,j) a_j b_{n-j}, which is what every generating-function
manipulation in this package needs.  Series of different orders combine
by truncating to the smaller order.

The central building block is the degenerate exponential

    e_l^w(s) = (1 + l*s)^(w/l) = sum_n (w)_{n,l} s^n / n!,

whose EGF coefficients are the degenerate falling factorials
(w)_{n,l} = w (w - l) (w - 2l) ... (w - (n-1)l).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .algebra import LAM, ONE, Poly

DEFAULT_ORDER = 16


class NotInvertibleError(ValueError):
    """Reciprocal requested of a series whose constant term is not 1."""


class ValuationError(ValueError):
    """Operation requires a series with zero constant term."""


def _as_coeff(v) -> Poly:
    if isinstance(v, Poly):
        return v
    return Poly.const(v)


class Series:
    """Truncated EGF with polynomial coefficients; immutable and exact."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        self._coeffs = tuple(_as_coeff(c) for c in coeffs)
        if not self._coeffs:
            raise ValueError("a series needs at least the order-0 coefficient")

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Poly, ...]:
        return self._coeffs

    def coeff(self, n: int) -> Poly:
        """EGF coefficient a_n, i.e. n! times the coefficient of s^n."""
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self._coeffs[n]

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "Series":
        return cls([Poly.zero()] * (order + 1))

    @classmethod
    def unit(cls, order: int = DEFAULT_ORDER) -> "Series":
        return cls([Poly.one()] + [Poly.zero()] * order)

    @classmethod
    def deg_exp(cls, exponent, order: int = DEFAULT_ORDER) -> "Series":
        """e_l^w(s) for polynomial exponent w: coefficients (w)_{n,l}."""
        w = _as_coeff(exponent)
        coeffs = [Poly.one()]
        acc = Poly.one()
        for n in range(order):
            acc = acc * (w - n * LAM)
            coeffs.append(acc)
        return cls(coeffs)

    def truncate(self, order: int) -> "Series":
        if order >= self.order:
            return self
        return Series(self._coeffs[: order + 1])

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other) -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series([self._coeffs[i] + other._coeffs[i] for i in range(n + 1)])

    def __sub__(self, other) -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series([self._coeffs[i] - other._coeffs[i] for i in range(n + 1)])

    def __mul__(self, other) -> "Series":
        if isinstance(other, Series):
            n = min(self.order, other.order)
            a, b = self._coeffs, other._coeffs
            out = []
            for k in range(n + 1):
                acc = Poly.zero()
                for j in range(k + 1):
                    if not a[j].is_zero() and not b[k - j].is_zero():
                        acc = acc + comb(k, j) * a[j] * b[k - j]
                out.append(acc)
            return Series(out)
        if isinstance(other, (Poly, int, Fraction)):
            c = _as_coeff(other)
            return Series([c * a for a in self._coeffs])
        return NotImplemented

    def __rmul__(self, other) -> "Series":
        if isinstance(other, (Poly, int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def reciprocal(self) -> "Series":
        """The series b with a*b = 1 up to the truncation order.

        Restricted to series with constant term exactly 1, which covers
        every generating function handled here.
        """
        if self._coeffs[0] != ONE:
            raise NotInvertibleError(f"constant term {self._coeffs[0]} is not 1")
        a = self._coeffs
        b = [Poly.one()]
        for n in range(1, self.order + 1):
            acc = Poly.zero()
            for j in range(1, n + 1):
                if not a[j].is_zero():
                    acc = acc + comb(n, j) * a[j] * b[n - j]
            b.append(-acc)
        return Series(b)

    def int_pow(self, e: int) -> "Series":
        if not isinstance(e, int) or e < 0:
            raise ValueError("series powers must be nonnegative integers")
        result = Series.unit(self.order)
        for _ in range(e):
            result = result * self
        return result

    def pow_over_factorial(self, k: int) -> "Series":
        """a^k / k! for a series with zero constant term.

        Because the valuation of a is at least 1, the result has zero
        coefficients below index k; its EGF coefficients are exact even
        though 1/k! is not an integer.
        """
        if k < 0:
            raise ValueError("power must be nonnegative")
        if not self._coeffs[0].is_zero():
            raise ValuationError("series has nonzero constant term")
        result = self.int_pow(k)
        inv = Fraction(1, factorial(k))
        return Series([c * inv for c in result._coeffs])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self) -> str:
        inner = ", ".join(str(c) for c in self._coeffs[:5])
        more = ", ..." if self.order > 4 else ""
        return f"Series[{self.order}]({inner}{more})"

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"order": self.order, "egf_coeffs": [c.to_json() for c in self._coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "Series":
        coeffs = [Poly.from_json(c) for c in data["egf_coeffs"]]
        if len(coeffs) != data["order"] + 1:
            raise ValueError("coefficient count does not match declared order")
        return cls(coeffs)


def deg_exp_of(a: Series) -> Series:
    """e_l(a(s)) = sum_k (1)_{k,l} a^k / k! for a with zero constant term."""
    if not a.coeffs[0].is_zero():
        raise ValuationError("series has nonzero constant term")
    total = Series.unit(a.order)
    power = Series.unit(a.order)  # a^k / k!, built incrementally
    weight = Poly.one()  # (1)_{k,l}
    for k in range(1, a.order + 1):
        power = power * a * Fraction(1, k)
        weight = weight * (ONE - (k - 1) * LAM)
        total = total + weight * power
    return total


def exp_of(a: Series) -> Series:
    """Classical e^(a(s)) = sum_k a^k / k! for a with zero constant term."""
    if not a.coeffs[0].is_zero():
        raise ValuationError("series has nonzero constant term")
    total = Series.unit(a.order)
    power = Series.unit(a.order)
    for k in range(1, a.order + 1):
        power = power * a * Fraction(1, k)
        total = total + power
    return total


@dataclass(frozen=True)
class NestedSeries:
    """Truncated bivariate EGF sum a_{j,k} u^j v^k / (j! k!).

    Only used to state the exponential splitting identity; supports
    construction and equality, nothing more.
    """

    rows: tuple[tuple[Poly, ...], ...]

    @property
    def orders(self) -> tuple[int, int]:
        return (len(self.rows) - 1, len(self.rows[0]) - 1)

    def entry(self, j: int, k: int) -> Poly:
        return self.rows[j][k]


def exp_splitting_sides(j_order: int, k_order: int) -> tuple[NestedSeries, NestedSeries]:
    """Both sides of e_l(u+v) = e_l(u) * e_l(v / (1 + l*u)) as bivariate EGFs.

    Left side: expand (u+v)^n binomially inside sum_n (1)_{n,l} (u+v)^n / n!.
    Right side: expand the inner argument v/(1+l*u) as a geometric series
    in u for each power of v, then take the product with e_l(u).  The left
    side needs no composition at all, so it serves as the oracle.
    """
    J, K = j_order, k_order
    one_ff = _unit_falling_factorials(J + K)

    # left: ordinary coefficient of u^j v^k in sum_n (1)_{n,l} (u+v)^n / n!
    left = [[Poly.zero()] * (K + 1) for _ in range(J + 1)]
    for n in range(J + K + 1):
        base = one_ff[n] / factorial(n)
        for m in range(n + 1):  # (u+v)^n = sum_m C(n,m) u^(n-m) v^m
            j, k = n - m, m
            if j <= J and k <= K:
                left[j][k] = left[j][k] + comb(n, m) * base

    # right: e_l(u) as ordinary coefficients in u
    exp_u = [one_ff[i] / factorial(i) for i in range(J + 1)]

    # e_l(v/(1+l*u)): ordinary coefficient of u^i v^k is
    # (1)_{k,l}/k! * C(-k, i) l^i with C(-k, i) = (-1)^i C(k+i-1, i)
    right = [[Poly.zero()] * (K + 1) for _ in range(J + 1)]
    for k in range(K + 1):
        vk = one_ff[k] / factorial(k)
        for i in range(J + 1):
            if k == 0 and i > 0:
                break
            inner = vk * Fraction((-1) ** i * comb(k + i - 1, i)) * LAM**i if i else vk
            for j in range(i, J + 1):
                right[j][k] = right[j][k] + exp_u[j - i] * inner

    def to_egf(grid) -> NestedSeries:
        return NestedSeries(
            tuple(
                tuple(grid[j][k] * (factorial(j) * factorial(k)) for k in range(K + 1))
                for j in range(J + 1)
            )
        )

    return to_egf(left), to_egf(right)


def _unit_falling_factorials(n_max: int) -> list[Poly]:
    """(1)_{n,l} for n = 0 .. n_max."""
    out = [Poly.one()]
    for n in range(n_max):
        out.append(out[-1] * (ONE - n * LAM))
    return out
