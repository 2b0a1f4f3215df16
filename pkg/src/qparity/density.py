"""Empirical odd-coefficient densities for partition-type series.

Everything here is an exact count over a computed parity table; nothing is
sampled and no convergence is claimed.  The checkpoint ratios at x/10, x/4
and x/2 give the trend data used by the consistency checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import f2series, partitions
from .arith import v2
from .f2series import F2Series, euler, from_support


@dataclass(frozen=True)
class DensityEstimate:
    series_id: str
    x: int
    odd_count: int
    checkpoints: tuple[tuple[int, int], ...]  # (horizon, odd count) at x/10, x/4, x/2

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.odd_count, self.x)

    def checkpoint_ratios(self) -> list[Fraction]:
        return [Fraction(c, h) for h, c in self.checkpoints]

    def strictly_decreasing_trend(self) -> bool:
        seq = self.checkpoint_ratios() + [self.ratio]
        return all(a > b for a, b in zip(seq, seq[1:]))


def _estimate(series_id: str, series: F2Series, x: int) -> DensityEstimate:
    marks = tuple(sorted({max(1, x // 10), max(1, x // 4), max(1, x // 2)}))
    checkpoints = tuple((h, series.popcount(h)) for h in marks)
    return DensityEstimate(series_id, x, series.popcount(x), checkpoints)


def _series_for(spec: str, x: int) -> F2Series:
    kind, _, arg = spec.partition("_")
    if kind == "p" and arg:
        return partitions.multipartition_parity(int(arg), x).series()
    if kind == "b" and arg:
        return partitions.regular_parity(int(arg), x).series()
    if spec == "landau":
        return landau_series(x)
    raise ValueError(f"unknown series spec {spec!r} (use p_T, b_M or landau)")


def odd_density(spec: str, x: int) -> DensityEstimate:
    """Exact odd-coefficient count of the named series up to x."""
    if x < 10:
        raise ValueError("x must be >= 10")
    return _estimate(spec, _series_for(spec, x), x)


@dataclass(frozen=True)
class ConjectureRow:
    t: int
    predicted: Fraction       # 2^(-k-1) for t = 2^k t0
    estimate: Fraction
    deviation: Fraction

    def as_tuple(self):
        return (self.t, self.predicted, self.estimate, self.deviation)


def conjecture_table(ts: list[int], x: int) -> list[ConjectureRow]:
    """Estimated odd densities of p_t against the predicted 2^(-k-1)."""
    rows = []
    for t in ts:
        k = v2(t)
        predicted = Fraction(1, 2 ** (k + 1))
        est = odd_density(f"p_{t}", x).ratio
        rows.append(ConjectureRow(t, predicted, est, abs(est - predicted)))
    return rows


def landau_series(x: int) -> F2Series:
    """(q)^4 + q (q)^8 (q^5)^4 mod 2: two-variable quadratic-form support."""
    e4 = euler((x + 3) // 4 + 1).inflate(4).truncated(x)
    e8 = euler((x + 7) // 8 + 1).inflate(8).truncated(x)
    e20 = euler((x + 19) // 20 + 1).inflate(20).truncated(x)
    return e4 ^ e8.mul(e20).truncated(x).shifted(1).truncated(x)


def landau_check(x: int) -> DensityEstimate:
    """Odd count of the density-zero correction series, with trend data."""
    if x < 1000:
        raise ValueError("x must be >= 1000")
    return _estimate("landau", landau_series(x), x)


@dataclass(frozen=True)
class RegularRelationReport:
    x: int
    d5: Fraction
    d20: Fraction
    d7: Fraction
    d28: Fraction
    residual_5_20: Fraction    # |d5 - d20/4|
    residual_7_28: Fraction    # |d7 - d28/2|
    identity_depth: int
    identity_ok: bool
    identity_first_mismatch: int | None


def regular_relation_check(x: int) -> RegularRelationReport:
    """Estimates for the 5/20- and 7/28-regular density relations plus the
    exact coefficientwise check of the b_5 dissection identity behind them."""
    if x < 10**4:
        raise ValueError("x must be >= 10^4")
    d5 = odd_density("b_5", x).ratio
    d20 = odd_density("b_20", x).ratio
    d7 = odd_density("b_7", x).ratio
    d28 = odd_density("b_28", x).ratio
    b5 = partitions.regular_parity(5, x).series()
    rhs = landau_series(x) ^ \
        partitions.regular_parity(20, x // 4 + 2).series().inflate(4).shifted(3).truncated(x)
    mismatch = b5.first_mismatch(rhs)
    ok = mismatch is None or mismatch >= x
    return RegularRelationReport(x, d5, d20, d7, d28,
                                 abs(d5 - d20 / 4), abs(d7 - d28 / 2),
                                 x, ok, None if ok else mismatch)
