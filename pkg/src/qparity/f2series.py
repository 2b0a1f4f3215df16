"""Truncated power series over GF(2), bit-packed in Python integers.

A series is ``q^(offset24/24) * sum_{n<trunc} bits[n] q^n`` with coefficients
in GF(2).  Bit n of the ``bits`` integer is the coefficient of ``q^n``.  The
``offset24`` field carries an exact rational exponent prefactor in units of
1/24, so Dedekind-eta-style objects (and their reciprocals, which have
negative exponents) live in the same carrier without expanding in ``q^(1/24)``.

All operations are pure; values are never mutated after construction.
Truncation horizons propagate pessimistically: no operation ever fabricates
a coefficient beyond what its inputs determine.
"""

from __future__ import annotations

import numpy as np

_MASKS: dict[int, int] = {}  # small cache of (1<<T)-1 masks for hot sizes

# bit positions set in each byte value, for sparse-side iteration
_BYTE_BITS = tuple(tuple(j for j in range(8) if (b >> j) & 1) for b in range(256))


class F2SeriesError(Exception):
    """Base class for series contract violations."""


class ConstantTermZero(F2SeriesError):
    """Inversion (or a negative power) of a series with even constant term."""


class BadResidue(F2SeriesError):
    """Dissection residue outside [0, a)."""


class OffsetMismatch(F2SeriesError):
    """Combined series whose offsets differ by a non-multiple of 24."""


def _mask(t: int) -> int:
    m = _MASKS.get(t)
    if m is None:
        m = (1 << t) - 1
        if len(_MASKS) < 64:
            _MASKS[t] = m
    return m


def _bit_positions(bits: int) -> list[int]:
    out = []
    data = bits.to_bytes((bits.bit_length() + 7) // 8, "little")
    for i, byte in enumerate(data):
        if byte:
            base = i << 3
            for j in _BYTE_BITS[byte]:
                out.append(base + j)
    return out


def _mul_bits(x: int, y: int, cap: int) -> int:
    """Carry-less product of two bit vectors, truncated to ``cap`` bits.

    Shift-and-XOR over the machine words of the dense factor, iterating the
    set bits of the sparser factor (fast path when one operand is an Euler
    product or other thin support).
    """
    if x == 0 or y == 0 or cap <= 0:
        return 0
    if x.bit_count() > y.bit_count():
        x, y = y, x
    acc = 0
    for i in _bit_positions(x):
        if i >= cap:
            break
        acc ^= y << i
    if acc.bit_length() > cap:
        acc &= _mask(cap)
    return acc


def _bits_to_array(bits: int, n: int) -> np.ndarray:
    data = bits.to_bytes((n + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(data, dtype=np.uint8), bitorder="little", count=n)


def _array_to_bits(arr: np.ndarray) -> int:
    return int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")


def _inflate_bits(bits: int, d: int, n: int) -> int:
    """Map bit i to bit d*i (the substitution q -> q^d on n valid positions)."""
    if d == 1 or bits == 0:
        return bits
    arr = _bits_to_array(bits, n)
    out = np.zeros(n * d, dtype=np.uint8)
    out[::d] = arr
    return _array_to_bits(out)


class F2Series:
    __slots__ = ("bits", "trunc", "offset24")

    def __init__(self, bits: int, trunc: int, offset24: int = 0):
        if trunc < 0:
            raise ValueError("trunc must be >= 0")
        if bits < 0:
            raise ValueError("bits must be a nonnegative integer")
        if bits.bit_length() > trunc:
            bits &= _mask(trunc)
        self.bits = bits
        self.trunc = trunc
        self.offset24 = offset24

    # -- basic queries ----------------------------------------------------

    def val(self) -> int:
        """Index of the lowest set bit, or trunc for a (known-)zero series."""
        if self.bits == 0:
            return self.trunc
        return (self.bits & -self.bits).bit_length() - 1

    def coeff(self, n: int) -> int:
        if not 0 <= n < self.trunc:
            raise IndexError(f"coefficient {n} beyond horizon {self.trunc}")
        return (self.bits >> n) & 1

    def support(self) -> list[int]:
        return _bit_positions(self.bits)

    def popcount(self, upto: int | None = None) -> int:
        """Number of odd coefficients among bits[0:upto] (default: all)."""
        if upto is None or upto >= self.trunc:
            return self.bits.bit_count()
        return (self.bits & _mask(upto)).bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def truncated(self, t: int) -> "F2Series":
        if t >= self.trunc:
            return self
        return F2Series(self.bits, t, self.offset24)

    def with_offset24(self, offset24: int) -> "F2Series":
        return F2Series(self.bits, self.trunc, offset24)

    def shifted(self, k: int) -> "F2Series":
        """Multiply by q^k in bit space (k >= 0); offset24 is untouched."""
        if k < 0:
            raise ValueError("shift must be >= 0")
        if k == 0:
            return self
        return F2Series(self.bits << k, self.trunc + k, self.offset24)

    # -- ring operations --------------------------------------------------

    def mul(self, other: "F2Series") -> "F2Series":
        t = min(self.trunc + other.val(), other.trunc + self.val())
        bits = _mul_bits(self.bits, other.bits, t)
        return F2Series(bits, t, self.offset24 + other.offset24)

    __mul__ = mul

    def __xor__(self, other: "F2Series") -> "F2Series":
        a, b, t = _aligned(self, other)
        return F2Series((a ^ b) & _mask(t), t, min(self.offset24, other.offset24))

    def square(self) -> "F2Series":
        """Frobenius: squaring mod 2 is the substitution q -> q^2."""
        return self.inflate(2)

    def pow(self, e: int) -> "F2Series":
        if e < 0:
            return self.pow(-e).inv()
        if e == 0:
            return one(self.trunc)
        if e == 1:
            return self
        # Frobenius: the 2-power part of e is pure bit-spreading and doubles
        # the horizon; only the odd part needs truncated products.
        u = e
        doublings = 0
        while u % 2 == 0:
            u //= 2
            doublings += 1
        cap = self.trunc + (u - 1) * self.val()
        acc = self
        for k in range(u.bit_length() - 2, -1, -1):
            acc = acc.square().truncated(cap)
            if (u >> k) & 1:
                acc = acc.mul(self).truncated(cap)
        for _ in range(doublings):
            acc = acc.square()
        return acc

    __pow__ = pow

    def inv(self) -> "F2Series":
        """Multiplicative inverse by Newton doubling.

        Over GF(2) the Newton step collapses to g <- f*g^2 (cross terms of
        the usual 2g - f g^2 vanish and the error squares by Frobenius), so
        every step is one truncated product plus a free bit-spread.
        """
        if self.trunc == 0 or not self.bits & 1:
            raise ConstantTermZero("inverse requires constant term 1")
        t = self.trunc
        g = 1
        k = 1
        while k < t:
            k = min(2 * k, t)
            half = (k + 1) // 2  # only bits below half survive the spread mod q^k
            g = _mul_bits(self.bits & _mask(k), _inflate_bits(g & _mask(half), 2, half), k)
        return F2Series(g, t, -self.offset24)

    # -- reindexing operations --------------------------------------------

    def inflate(self, d: int) -> "F2Series":
        if d < 1:
            raise ValueError("inflation factor must be >= 1")
        if d == 1:
            return self
        return F2Series(_inflate_bits(self.bits, d, self.trunc),
                        self.trunc * d, self.offset24 * d)

    def dissect(self, a: int, b: int) -> "F2Series":
        """Coefficients along the progression a*n+b as a new series.

        Exponents are read on the represented object, so an integer q-power
        carried in offset24 (a multiple of 24) is folded in; coefficients at
        negative exponents of a Laurent object do not appear.
        """
        if a < 1 or not 0 <= b < a:
            raise BadResidue(f"residue {b} not in [0, {a})")
        if self.offset24 % 24:
            raise OffsetMismatch("dissection requires an integer q-power offset")
        k = self.offset24 // 24
        obj = self.bits << k if k >= 0 else self.bits >> -k
        t_obj = self.trunc + k
        t_new = max(0, -((b - t_obj) // a))  # ceil((t_obj - b)/a)
        if t_new == 0:
            return F2Series(0, 0, 0)
        if a == 1:
            return F2Series(obj >> b, t_new, 0)
        arr = _bits_to_array(obj, t_obj)[b::a]
        return F2Series(_array_to_bits(arr), t_new, 0)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, F2Series):
            return NotImplemented
        a, b, t = _aligned(self, other)
        return (a ^ b) & _mask(t) == 0

    __hash__ = None  # mutable-width carrier; equality is windowed

    def first_mismatch(self, other: "F2Series") -> int | None:
        """Smallest object exponent where the two disagree, or None.

        Both offsets must be multiples of 24 (integer q-powers); the common
        valid window is compared.
        """
        if self.offset24 % 24 or other.offset24 % 24:
            raise OffsetMismatch("mismatch index needs integer q-power offsets")
        a, b, t = _aligned(self, other)
        diff = (a ^ b) & _mask(t)
        if diff == 0:
            return None
        base = min(self.offset24, other.offset24) // 24
        return base + (diff & -diff).bit_length() - 1

    def agree_through(self, other: "F2Series", n: int) -> bool:
        m = self.first_mismatch(other)
        return m is None or m > n

    def __repr__(self) -> str:
        return f"F2Series(trunc={self.trunc}, offset24={self.offset24}, weight={self.bits.bit_count()})"


def _aligned(f: F2Series, g: F2Series) -> tuple[int, int, int]:
    """Bits of f and g shifted to the smaller offset, plus the common horizon."""
    d, r = divmod(f.offset24 - g.offset24, 24)
    if r:
        raise OffsetMismatch(
            f"offsets {f.offset24} and {g.offset24} differ by a non-multiple of 24")
    fb, ft = f.bits, f.trunc
    gb, gt = g.bits, g.trunc
    if d > 0:
        fb <<= d
        ft += d
    elif d < 0:
        gb <<= -d
        gt += -d
    return fb, gb, min(ft, gt)


# -- constructors ----------------------------------------------------------

def zero(t: int) -> F2Series:
    return F2Series(0, t, 0)


def one(t: int, offset24: int = 0) -> F2Series:
    return F2Series(1, t, offset24)


def from_support(positions, t: int, offset24: int = 0) -> F2Series:
    bits = 0
    for n in positions:
        if 0 <= n < t:
            bits |= 1 << n
    return F2Series(bits, t, offset24)


def pentagonal_numbers(limit: int) -> list[int]:
    """Generalized pentagonal numbers k(3k-1)/2, k in Z, below limit, ascending."""
    out = [0] if limit > 0 else []
    k = 1
    while True:
        g = k * (3 * k - 1) // 2
        if g >= limit:
            break
        out.append(g)
        g += k  # k(3k+1)/2
        if g < limit:
            out.append(g)
        k += 1
    return out


def euler(t: int) -> F2Series:
    """prod(1-q^i) mod 2: support on the generalized pentagonal numbers."""
    return from_support(pentagonal_numbers(t), t)


def eta_power(delta: int, r: int, t: int) -> F2Series:
    """Expansion of eta(delta*z)^r mod 2 with offset24 = delta*r.

    The +-1 powers come straight off the sparse pentagonal support (the
    inverse by Newton against that sparse series); general r by binary
    exponentiation with Frobenius squaring.
    """
    if delta < 1 or t < 1:
        raise ValueError("delta and t must be >= 1")
    if r == 0:
        return one(t)
    base = from_support((delta * g for g in pentagonal_numbers((t + delta - 1) // delta)),
                        t, delta)
    if r == 1:
        return base
    if r == -1:
        return base.inv()
    if r > 0:
        return base.pow(r).truncated(t)
    return base.pow(-r).truncated(t).inv()
