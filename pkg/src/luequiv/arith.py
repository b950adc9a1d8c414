"""Exact modular integer helpers used throughout the package."""

from functools import reduce
from math import gcd


def gcd_many(values):
    """Greatest common divisor of a non-empty list; the all-zero list gives 0."""
    values = list(values)
    if not values:
        raise ValueError("gcd_many needs at least one value")
    return reduce(gcd, (abs(v) for v in values))


def ext_gcd(a, b):
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)`` and ``g >= 0``.

    >>> ext_gcd(6, 2)
    (2, 0, 1)
    """
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def two_var_congruence_solvable(a1, a2, c, m):
    """True iff ``a1*s + a2*t = c (mod m)`` has an integer solution (s, t)."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    return c % gcd_many([a1, a2, m]) == 0


def divisors(n):
    """Positive divisors of ``n`` in ascending order."""
    if n < 1:
        raise ValueError(f"divisors needs a positive integer, got {n}")
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def prime_power(n):
    """Return ``(p, alpha)`` when ``n == p**alpha`` for a prime p, else None.

    Trial division only; meant for the small moduli handled here.
    """
    if n < 2:
        return None
    p = next(k for k in range(2, n + 1) if n % k == 0)
    alpha = 0
    while n % p == 0:
        n //= p
        alpha += 1
    return (p, alpha) if n == 1 else None
