"""Small exact number-theory helpers shared across modules."""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of |n| as ((p, e), ...) with primes ascending."""
    n = abs(n)
    if n <= 1:
        return ()
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    p = 5
    step = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of n, ascending."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = [1]
    for p, e in factorize(n):
        out = [d * p**k for d in out for k in range(e + 1)]
    return tuple(sorted(out))


def prime_divisors(n: int) -> tuple[int, ...]:
    return tuple(p for p, _ in factorize(n))


def euler_phi(n: int) -> int:
    r = n
    for p, _ in factorize(n):
        r -= r // p
    return r


def squarefree_part(n: int) -> int:
    """Squarefree kernel of a nonzero integer, keeping the sign."""
    if n == 0:
        raise ValueError("n must be nonzero")
    sign = -1 if n < 0 else 1
    k = 1
    for p, e in factorize(n):
        if e % 2:
            k *= p
    return sign * k


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def v2(n: int) -> int:
    """2-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("n must be nonzero")
    return ((n & -n).bit_length() - 1)


def padic_valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("n must be nonzero")
    e = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        e += 1
    return e


__all__ = [
    "factorize", "divisors", "prime_divisors", "euler_phi",
    "squarefree_part", "is_square", "v2", "padic_valuation", "gcd",
]
