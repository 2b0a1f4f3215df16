"""Radu's admissibility and weight-zero machinery for dissected eta quotients.

Covers membership in the admissibility set Delta* for tuples
(m, M, N, t, (r_delta)), the residue orbit P_{m,r}(t), the root-of-unity
exponent nu, the four weight-zero/trivial-character conditions on a
candidate s-vector, a deterministic s-vector search, and the uniform
cusp-order lower bound for the dissection-times-eta-quotient form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .arith import divisors, factorize, prime_divisors, v2


class NonIntegralNu(Exception):
    """The exact rational defining nu failed to be an integer."""


@dataclass(frozen=True)
class RaduTuple:
    m: int
    M: int
    N: int
    t: int
    r: tuple[tuple[int, int], ...]  # (delta, r_delta) over all delta | M

    def __init__(self, m: int, M: int, N: int, t: int, r: dict[int, int]):
        if min(m, M, N) < 1:
            raise ValueError("m, M, N must be positive")
        if not 0 <= t < m:
            raise ValueError(f"t={t} outside [0, {m})")
        for d in r:
            if M % d:
                raise ValueError(f"exponent index {d} does not divide M={M}")
        full = tuple((d, r.get(d, 0)) for d in divisors(M))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "r", full)

    def r_dict(self) -> dict[int, int]:
        return dict(self.r)

    def w(self) -> int:
        return sum(e for _, e in self.r)

    def sigma_inf(self) -> int:
        return sum(d * e for d, e in self.r)

    def sigma0(self) -> int:
        return sum(self.M // d * e for d, e in self.r)

    def kappa(self) -> int:
        return gcd(1 - self.m * self.m, 24)


@dataclass(frozen=True)
class DeltaStarReport:
    kappa: int
    prime_support: bool    # p | m  =>  p | N
    divisor_support: bool  # delta | M, r_delta != 0  =>  delta | mN
    cond_sigma0: bool      # 24 | kappa m N^2 sigma0(r) / M
    cond_weight: bool      # 8 | kappa N w(r)
    cond_t: bool           # 24m / gcd(kappa(-24t - sigma_inf(r)), 24m) | N
    cond_even_m: bool      # even-m clause (vacuous for odd m)

    def passed(self) -> bool:
        return (self.prime_support and self.divisor_support and self.cond_sigma0
                and self.cond_weight and self.cond_t and self.cond_even_m)


def delta_star_check(tup: RaduTuple) -> DeltaStarReport:
    """Evaluate every Delta* clause; the report carries failures."""
    m, M, N = tup.m, tup.M, tup.N
    kappa = tup.kappa()
    prime_support = all(N % p == 0 for p in prime_divisors(m))
    divisor_support = all(m * N % d == 0 for d, e in tup.r if e != 0)
    val = Fraction(kappa * m * N * N * tup.sigma0(), M)
    cond_sigma0 = val.denominator == 1 and val.numerator % 24 == 0
    cond_weight = (kappa * N * tup.w()) % 8 == 0
    g = gcd(kappa * (-24 * tup.t - tup.sigma_inf()), 24 * m)
    cond_t = N % (24 * m // g) == 0
    cond_even_m = True
    if m % 2 == 0:
        pi = 1
        for d, e in tup.r:
            pi *= d ** abs(e)
        s = v2(pi) if pi > 1 else 0
        j_odd = pi >> s
        cond_even_m = ((kappa * N) % 4 == 0 and (N * s) % 8 == 0) or \
                      (s % 2 == 0 and (N * (1 - j_odd)) % 8 == 0)
    return DeltaStarReport(kappa, prime_support, divisor_support,
                           cond_sigma0, cond_weight, cond_t, cond_even_m)


def p_set(tup: RaduTuple) -> tuple[int, ...]:
    """The residue orbit P_{m,r}(t), sorted.

    a runs over residues mod 24m with gcd(a,6)=1 and gcd(a,M)=1; the
    defining expression t*a^2 + ((a^2-1)/24)*sigma_inf(r) depends only on
    a^2 mod 24m, and a coprime to 6 makes (a^2-1)/24 an integer.
    """
    m, M = tup.m, tup.M
    sig = tup.sigma_inf()
    seen = set()
    for a in range(1, 24 * m + 1):
        if gcd(a, 6) != 1 or gcd(a, M) != 1:
            continue
        seen.add((tup.t * a * a + (a * a - 1) // 24 * sig) % m)
    return tuple(sorted(seen))


def nu(tup: RaduTuple) -> int:
    """nu mod 24 with chi_{m,r}(t) = exp(nu/24), canonicalized to [0, 24)."""
    total = Fraction(0)
    sig = tup.sigma_inf()
    for u in p_set(tup):
        total += Fraction((1 - tup.m * tup.m) * (24 * u + sig), tup.m)
    if total.denominator != 1:
        raise NonIntegralNu(f"nu evaluated to {total}")
    return int(total) % 24


@dataclass(frozen=True)
class Theorem45Report:
    p_len: int
    nu: int
    cond_weight: bool   # |P| w(r) + w(s) = 0
    cond_inf: bool      # nu + |P| m sigma_inf(r) + sigma_inf(s) = 0 mod 24
    cond_zero: bool     # |P| m N sigma0(r)/M + sigma0(s) = 0 mod 24
    cond_square: bool   # (prod (m delta)^{|r|})^{|P|} * prod delta^{|s|} square

    def passed(self) -> bool:
        return self.cond_weight and self.cond_inf and self.cond_zero and self.cond_square


def _s_full(tup: RaduTuple, s: dict[int, int]) -> dict[int, int]:
    for d in s:
        if tup.N % d:
            raise ValueError(f"s-vector index {d} does not divide N={tup.N}")
    return {d: s.get(d, 0) for d in divisors(tup.N)}


def theorem45_check(tup: RaduTuple, s: dict[int, int]) -> Theorem45Report:
    """The four conditions making the dissected product a weight-zero form
    with trivial character on Gamma_0(N)."""
    sv = _s_full(tup, s)
    P = p_set(tup)
    n = len(P)
    w_s = sum(sv.values())
    sig_inf_s = sum(d * e for d, e in sv.items())
    sig0_s = sum(tup.N // d * e for d, e in sv.items())
    cond_weight = n * tup.w() + w_s == 0
    cond_inf = (nu(tup) + n * tup.m * tup.sigma_inf() + sig_inf_s) % 24 == 0
    val = Fraction(n * tup.m * tup.N * tup.sigma0(), tup.M) + sig0_s
    cond_zero = val.denominator == 1 and val.numerator % 24 == 0
    # square test by prime exponent parity; all bases are small integers
    exps: dict[int, int] = {}
    for d, e in tup.r:
        for p, k in factorize(tup.m * d):
            exps[p] = exps.get(p, 0) + k * abs(e) * n
    for d, e in sv.items():
        for p, k in factorize(d):
            exps[p] = exps.get(p, 0) + k * abs(e)
    cond_square = all(e % 2 == 0 for e in exps.values())
    return Theorem45Report(n, nu(tup), cond_weight, cond_inf, cond_zero, cond_square)


def search_s_vector(tup: RaduTuple, bound: int) -> dict[int, int] | None:
    """First s-vector with entries in [-bound, bound] passing all four
    conditions, in lexicographic order over divisors ascending.

    The weight condition pins the last coordinate, so the scan runs over the
    leading len(divisors)-1 coordinates with the two mod-24 conditions as
    cheap filters before the square test.
    """
    ds = divisors(tup.N)
    n = len(p_set(tup))
    target_w = -n * tup.w()
    c_inf = nu(tup) + n * tup.m * tup.sigma_inf()
    c_zero = Fraction(n * tup.m * tup.N * tup.sigma0(), tup.M)
    if c_zero.denominator != 1:
        return None
    c_zero = int(c_zero)
    rng = range(-bound, bound + 1)
    for head in product(rng, repeat=len(ds) - 1):
        last = target_w - sum(head)
        if abs(last) > bound:
            continue
        cand = dict(zip(ds, head + (last,)))
        if (c_inf + sum(d * e for d, e in cand.items())) % 24:
            continue
        if (c_zero + sum(tup.N // d * e for d, e in cand.items())) % 24:
            continue
        if theorem45_check(tup, cand).passed():
            return cand
    return None


def radu47_cusp_bounds(tup: RaduTuple, s: dict[int, int],
                       level: int | None = None) -> dict[int, Fraction]:
    """Lower bound on the order of the dissected product form, per cusp
    denominator c of Gamma_0(level).

    ``level`` defaults to the tuple's N; s is zero-extended over the
    divisors of a larger level.  The prefactor N/gcd(c^2, N) is exactly the
    cusp width, so each value bounds the order in the local variable of the
    cusps with that denominator.
    """
    N = tup.N if level is None else level
    if level is not None and level % tup.N:
        raise ValueError("level must be a multiple of the tuple's N")
    sv = {d: s.get(d, 0) for d in divisors(N)}
    for d in s:
        if N % d:
            raise ValueError(f"s-vector index {d} does not divide level {N}")
    P = p_set(tup)
    out: dict[int, Fraction] = {}
    for c in divisors(N):
        r_min: Fraction | None = None
        for d in divisors(tup.m):
            if gcd(d, c) != 1:
                continue
            acc = Fraction(0)
            for delta, e in tup.r:
                acc += Fraction(e * gcd(delta * d, tup.m * c) ** 2, delta * tup.m)
            if r_min is None or acc < r_min:
                r_min = acc
        s_part = Fraction(0)
        for delta, e in sv.items():
            s_part += Fraction(e * gcd(delta, c) ** 2, delta)
        inner = Fraction(len(P)) * r_min / 24 + s_part / 24
        out[c] = Fraction(N, gcd(c * c, N)) * inner
    return out


def radu47_lower_bound(tup: RaduTuple, s: dict[int, int], level: int | None = None) -> Fraction:
    """Uniform lower bound on the cusp orders: the uniform double minimum."""
    return min(radu47_cusp_bounds(tup, s, level).values())
