"""Classical Stirling / Bell / Fubini families as independent oracles.

Everything here is computed from textbook integer recurrences with no
reference to the degenerate machinery, so these values can be used to
check the l -> 0 specialization of every degenerate family.
"""

from __future__ import annotations

from functools import cache
from math import comb, factorial

from .algebra import Poly, Var, X


@cache
def _stirling_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        # S(n, k) = S(n-1, k-1) + k * S(n-1, k)
        row[k] = prev[k - 1] + (k * prev[k] if k <= n - 1 else 0)
    return tuple(row)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind, 0 outside 0 <= k <= n."""
    if n == 0 and k == 0:
        return 1
    if n < 0 or k < 0 or k > n:
        return 0
    return _stirling_row(n)[k]


@cache
def bell_number(n: int) -> int:
    """Via the binomial recurrence B(n+1) = sum_k C(n,k) B(k)."""
    if n == 0:
        return 1
    return sum(comb(n - 1, k) * bell_number(k) for k in range(n))


@cache
def ordered_bell_number(n: int) -> int:
    """Fubini numbers a(n) = sum_{k>=1} C(n,k) a(n-k), a(0) = 1."""
    if n == 0:
        return 1
    return sum(comb(n, k) * ordered_bell_number(n - k) for k in range(1, n + 1))


@cache
def bell_poly(n: int) -> Poly:
    """phi_n(x) = sum_k S(n,k) x^k."""
    total = Poly.zero()
    for k in range(n + 1):
        total = total + stirling2(n, k) * X**k
    return total


@cache
def fubini_poly(n: int) -> Poly:
    """F_n(x) = sum_k k! S(n,k) x^k; F_n(1) is the ordered Bell number."""
    total = Poly.zero()
    for k in range(n + 1):
        total = total + factorial(k) * stirling2(n, k) * X**k
    return total


def rising_factorial_int(a: int, k: int) -> int:
    """<a>_k = a (a+1) ... (a+k-1), empty product 1."""
    out = 1
    for i in range(k):
        out *= a + i
    return out


@cache
def two_var_fubini_poly(n: int, alpha: int) -> Poly:
    """Order-alpha two-variable Fubini polynomial in x and y.

    EGF (1 - x(e^s - 1))^(-alpha) e^(y s); assembled here from the
    Cauchy product of the two factors with classical Stirling weights.
    """
    y = Poly.variable(Var.Y)
    total = Poly.zero()
    for j in range(n + 1):
        inner = Poly.zero()
        for k in range(j + 1):
            inner = inner + rising_factorial_int(alpha, k) * stirling2(j, k) * X**k
        total = total + comb(n, j) * inner * y ** (n - j)
    return total
