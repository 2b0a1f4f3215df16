"""Parity tables for p(n), t-multipartitions and m-regular partitions.

Two independent routes exist for the ordinary partition parity: a
word-sliced pentagonal XOR recurrence (memory-sequential, good for large
horizons) and series inversion in :mod:`qparity.f2series`.  They are
cross-checked bit for bit in the test suite; everything else is built on
the series route.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import f2series
from .f2series import F2Series, euler, pentagonal_numbers

_M64 = (1 << 64) - 1


@dataclass(frozen=True)
class ParityTable:
    """Parity of a counting function for 0 <= n < x, bit-packed."""

    kind: str
    x: int
    bits: int

    def series(self) -> F2Series:
        return F2Series(self.bits, self.x, 0)

    def coeff(self, n: int) -> int:
        if not 0 <= n < self.x:
            raise IndexError(f"index {n} beyond horizon {self.x}")
        return (self.bits >> n) & 1

    def odd_count(self, upto: int | None = None) -> int:
        limit = self.x if upto is None else min(upto, self.x)
        return (self.bits & ((1 << limit) - 1)).bit_count()

    def to_bit_dump(self) -> bytes:
        """Little-endian packed 64-bit words."""
        nwords = (self.x + 63) // 64
        return self.bits.to_bytes(nwords * 8, "little")

    def to_rle(self) -> str:
        """Run-length text: first bit value, then run lengths."""
        runs = []
        cur = self.bits & 1
        first = cur
        n = 0
        run = 0
        bits = self.bits
        while n < self.x:
            if (bits >> n) & 1 == cur:
                run += 1
            else:
                runs.append(run)
                cur ^= 1
                run = 1
            n += 1
        runs.append(run)
        return f"rle {self.kind} x={self.x} first={first} " + ",".join(map(str, runs))


def _get64(words: list[int], pos: int) -> int:
    """64 bits of the word array starting at bit position pos (clipped at 0)."""
    if pos <= -64:
        return 0
    if pos < 0:
        return (_get64(words, 0) << -pos) & _M64
    w, sh = pos >> 6, pos & 63
    if w >= len(words):
        return 0
    v = words[w] >> sh
    if sh and w + 1 < len(words):
        v = (v | (words[w + 1] << (64 - sh))) & _M64
    return v


def partition_parity(x: int) -> ParityTable:
    """Parity of p(n) for n < x by the pentagonal XOR recurrence.

    Mod 2 the signs in Euler's recurrence vanish: p(n) = XOR of p(n - g)
    over generalized pentagonal g <= n.  Processed 64 coefficients at a
    time: contributions from earlier words are gathered word-parallel, and
    the within-word dependencies (pentagonal steps < 64) are resolved by a
    short LFSR-style sweep.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    pents = pentagonal_numbers(x)[1:]  # g >= 1
    small = [g for g in pents if g < 64]
    small_mask = sum(1 << g for g in small)
    nwords = (x + 63) // 64
    words = [0] * nwords
    for w in range(nwords):
        n0 = w << 6
        acc = 1 if w == 0 else 0
        for g in pents:
            if g > n0 + 63:
                break
            if g >= 64:
                acc ^= _get64(words, n0 - g)
            elif w:
                # sources still in the previous word: block bits j < g
                acc ^= _get64(words, n0 - g) & ((1 << g) - 1)
        for j in range(64):
            if (acc >> j) & 1:
                acc ^= (small_mask << j) & _M64
        words[w] = acc
    bits = int.from_bytes(b"".join(v.to_bytes(8, "little") for v in words), "little")
    return ParityTable("p_1", x, bits & ((1 << x) - 1))


def multipartition_parity(t: int, x: int) -> ParityTable:
    """Parity of p_t(n) for n < x via the t-th power of the Euler product."""
    if t < 1 or x < 1:
        raise ValueError("t and x must be >= 1")
    series = euler(x).pow(-t).truncated(x)
    return ParityTable(f"p_{t}", x, series.bits)


def regular_parity(m: int, x: int) -> ParityTable:
    """Parity of the m-regular partition counts b_m(n) for n < x."""
    if m < 2 or x < 1:
        raise ValueError("need m >= 2 and x >= 1")
    num = euler((x + m - 1) // m).inflate(m).truncated(x)
    series = num.mul(euler(x).inv()).truncated(x)
    return ParityTable(f"b_{m}", x, series.bits)


def partition_parity_series(x: int) -> ParityTable:
    """The series-inversion route for p(n) parity (oracle for the recurrence)."""
    return ParityTable("p_1", x, euler(x).inv().bits)
