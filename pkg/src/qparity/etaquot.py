"""Eta-quotient algebra: modularity test, character, cusps and cusp orders.

An eta quotient is prod_{delta | N} eta(delta*z)^{r_delta}.  The
Gordon-Hughes-Newman congruences decide whether it transforms as a modular
form on Gamma_0(N); Ligozat's formula gives its exact order at each cusp;
the character is the Kronecker-symbol character d -> ((-1)^k s / d) with
s = prod delta^{r_delta}, which only depends on k mod 2 and the squarefree
kernel of (-1)^k s.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .arith import divisors, euler_phi, factorize, padic_valuation
from .f2series import F2Series, eta_power, one


@dataclass
class EtaQuotient:
    """Level candidate N plus integer exponent per divisor of N."""

    N: int
    exps: dict[int, int]

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("level must be >= 1")
        for d in self.exps:
            if self.N % d:
                raise ValueError(f"divisor {d} does not divide level {self.N}")
        self.exps = {d: r for d, r in sorted(self.exps.items()) if r != 0}
        if not self.exps:
            raise ValueError("eta quotient needs at least one nonzero exponent")

    def weight2(self) -> int:
        """Doubled weight 2k = sum of exponents."""
        return sum(self.exps.values())

    def sigma_delta(self) -> int:
        """sum delta * r_delta (24 times the order at the infinite cusp)."""
        return sum(d * r for d, r in self.exps.items())

    def sigma_quot(self) -> int:
        """sum (N/delta) * r_delta."""
        return sum(self.N // d * r for d, r in self.exps.items())

    def rescaled(self, scale: int) -> "EtaQuotient":
        """Same exponents viewed at level scale*N."""
        return EtaQuotient(self.N * scale, dict(self.exps))

    def expand(self, t: int) -> F2Series:
        """q-expansion mod 2 to t coefficients, offset24 = sigma_delta."""
        acc = one(t)
        for d, r in self.exps.items():
            acc = acc.mul(eta_power(d, r, t)).truncated(t)
        return acc

    def text(self) -> str:
        body = " * ".join(f"eta({d})^{r}" for d, r in self.exps.items())
        return f"{body} @ N={self.N}"


@dataclass(frozen=True)
class Cusp:
    c: int
    d: int

    def __post_init__(self):
        if self.d < 1 or gcd(self.c, self.d) != 1:
            raise ValueError(f"cusp {self.c}/{self.d} is not reduced")

    def __str__(self) -> str:
        return f"{self.c}/{self.d}"


@dataclass(frozen=True)
class ModularityReport:
    is_form: bool
    weight2: int
    cond_a: int           # sum delta*r mod 24
    cond_b: int           # sum (N/delta)*r mod 24
    char_k: int | None    # parity of the weight, when integral
    char_s_kernel: int | None  # squarefree kernel of (-1)^k * prod delta^r

    def character(self) -> tuple[int, int]:
        if self.char_k is None:
            raise ValueError("character undefined for half-integral weight")
        return (self.char_k, self.char_s_kernel)

    def trivial_character(self) -> bool:
        return self.char_k is not None and self.char_s_kernel == 1


def _char_kernel(exps: dict[int, int], k: int) -> int:
    # prod delta^{r_delta} tracked by prime exponent parity; sign from (-1)^k
    kernel = -1 if k % 2 else 1
    primes = set()
    for d in exps:
        primes.update(p for p, _ in factorize(d))
    for p in sorted(primes):
        e = sum(r * padic_valuation(d, p) for d, r in exps.items() if d % p == 0)
        if e % 2:
            kernel *= p
    return kernel


def ghn_check(eq: EtaQuotient) -> ModularityReport:
    """Gordon-Hughes-Newman congruence test; purely arithmetic."""
    cond_a = eq.sigma_delta() % 24
    cond_b = eq.sigma_quot() % 24
    w2 = eq.weight2()
    if w2 % 2:
        char_k = kernel = None
    else:
        char_k = (w2 // 2) % 2
        kernel = _char_kernel(eq.exps, w2 // 2)
    return ModularityReport(cond_a == 0 and cond_b == 0, w2, cond_a, cond_b,
                            char_k, kernel)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for arbitrary integers."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if a % 2 == 0:
            return 0
        if t % 2 and a % 8 in (3, 5):
            result = -result
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def cusp_set(N: int) -> list[Cusp]:
    """One representative c/d per Gamma_0(N) cusp class, canonical lifts.

    For each d | N the classes are indexed by units modulo gcd(d, N/d);
    representatives take the smallest nonnegative lift coprime to d.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    cusps = []
    for d in divisors(N):
        g = gcd(d, N // d)
        for c0 in range(g):
            if gcd(c0, g) != 1:
                continue
            c = c0
            while gcd(c, d) != 1:
                c += g
            cusps.append(Cusp(c, d))
    return cusps


def cusp_count(N: int) -> int:
    return sum(euler_phi(gcd(d, N // d)) for d in divisors(N))


def cusp_width(N: int, d: int) -> int:
    return N // (d * gcd(d, N // d))


def ligozat_order(eq: EtaQuotient, cusp: Cusp) -> Fraction:
    """Exact order of a GHN-valid eta quotient at the cusp c/d.

    Depends only on the denominator d, not on the representative c.
    """
    if not ghn_check(eq).is_form:
        raise ValueError("Ligozat's formula applies to GHN-valid quotients only")
    return _order_at_denominator(eq, cusp.d)


def _order_at_denominator(eq: EtaQuotient, d: int) -> Fraction:
    N = eq.N
    if N % d:
        raise ValueError(f"{d} is not a cusp denominator for level {N}")
    g = gcd(d, N // d)
    total = Fraction(0)
    for delta, r in eq.exps.items():
        total += Fraction(gcd(d, delta) ** 2 * r, g * d * delta)
    return Fraction(N, 24) * total


def order_table(eq: EtaQuotient) -> dict[int, Fraction]:
    """Ligozat order per cusp denominator d | N."""
    return {d: _order_at_denominator(eq, d) for d in divisors(eq.N)}


_ETA_FACTOR = re.compile(r"eta\(\s*(\d+)\s*\)(?:\s*\^\s*(-?\d+))?\s*$")


def parse_eta_quotient(text: str) -> EtaQuotient:
    """Parse 'eta(1)^10 * eta(2)^2 * eta(11)^11 * eta(22)^-22 @ N=44'.

    The '@ N=' part is optional; the default level is the lcm of the
    arguments.
    """
    body, _, level_part = text.partition("@")
    exps: dict[int, int] = {}
    for piece in body.split("*"):
        piece = piece.strip()
        if not piece:
            raise ValueError("empty factor in eta-quotient expression")
        m = _ETA_FACTOR.match(piece)
        if not m:
            raise ValueError(f"cannot parse eta factor {piece!r}")
        d = int(m.group(1))
        r = int(m.group(2)) if m.group(2) else 1
        exps[d] = exps.get(d, 0) + r
    level_part = level_part.strip()
    if level_part:
        m = re.match(r"N\s*=\s*(\d+)$", level_part)
        if not m:
            raise ValueError(f"cannot parse level spec {level_part!r}")
        N = int(m.group(1))
    else:
        N = lcm(*exps.keys())
    return EtaQuotient(N, exps)
