"""Core GF(2) series arithmetic against brute-force oracles."""

import random

import pytest

from qparity.f2series import (BadResidue, ConstantTermZero, F2Series,
                              OffsetMismatch, eta_power, euler, from_support,
                              one, pentagonal_numbers, zero)


def naive_mul(a: list[int], b: list[int], t: int) -> list[int]:
    out = [0] * t
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y and i + j < t:
                    out[i + j] ^= 1
    return out


def bits_list(f: F2Series, t: int) -> list[int]:
    return [(f.bits >> n) & 1 for n in range(t)]


def series(coeffs: list[int], offset24: int = 0) -> F2Series:
    return from_support([i for i, c in enumerate(coeffs) if c], len(coeffs), offset24)


def partition_counts(n_max: int) -> list[int]:
    """Exact p(n) by the bounded-part DP (the independent oracle)."""
    table = [1] + [0] * n_max
    for part in range(1, n_max + 1):
        for n in range(part, n_max + 1):
            table[n] += table[n - part]
    return table


def colored_partition_counts(colors: int, n_max: int) -> list[int]:
    table = [1] + [0] * n_max
    for part in range(1, n_max + 1):
        for _ in range(colors):
            for n in range(part, n_max + 1):
                table[n] += table[n - part]
    return table


def test_mul_examples():
    f = series([1, 1, 0, 0])
    g = series([1, 1, 1, 0])
    assert f.mul(f).support() == [0, 2]
    assert f.mul(g).support() == [0, 3]
    e = euler(300)
    assert e.mul(e.inv()) == one(300)


def test_mul_against_naive():
    rng = random.Random(11)
    for _ in range(200):
        t = rng.randrange(2, 120)
        a = [rng.randrange(2) for _ in range(t)]
        b = [rng.randrange(2) for _ in range(t)]
        prod = series(a).mul(series(b))
        want = naive_mul(a, b, prod.trunc)
        assert bits_list(prod, prod.trunc) == want


def test_mul_trunc_uses_valuations():
    f = F2Series(0b1000, 10)            # q^3, known to q^9
    g = F2Series(0b1, 4)                # 1, known to q^3
    assert f.mul(g).trunc == 7          # unknown tail of g enters at q^(4+3)
    assert zero(5).mul(zero(7)).trunc == 12


def test_ring_laws_random():
    rng = random.Random(7)
    for _ in range(100):
        t = 64
        f = F2Series(rng.getrandbits(t), t)
        g = F2Series(rng.getrandbits(t), t)
        h = F2Series(rng.getrandbits(t), t)
        assert f.mul(g) == g.mul(f)
        assert f.mul(g).mul(h) == f.mul(g.mul(h))
        assert f.mul(g ^ h) == f.mul(g) ^ f.mul(h)


def test_inv_geometric():
    f = series([1, 1] + [0] * 30)
    assert f.inv().bits == (1 << 32) - 1


def test_inv_partition_oracle():
    parity = [p & 1 for p in partition_counts(60)]
    inv = euler(61).inv()
    assert bits_list(inv, 61) == parity
    assert bits_list(inv, 11) == [1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 0]


def test_inv_involution():
    f = series([1, 1, 0, 0, 0, 1] + [0] * 40)
    assert f.inv().inv() == f


def test_inv_requires_unit():
    with pytest.raises(ConstantTermZero):
        series([0, 1, 1]).inv()
    with pytest.raises(ConstantTermZero):
        series([1, 1]).pow(-2).inv if False else series([0, 1]).pow(-1)


def test_pow_frobenius_examples():
    f = series([1, 1, 0, 1])
    assert f.pow(2) == f.inflate(2)
    assert f.pow(2).trunc == f.inflate(2).trunc
    tri = euler(40).pow(3)
    assert tri.support() == [k * (k + 1) // 2 for k in range(9)]


def test_pow_negative_is_colored_partitions():
    parity = [c & 1 for c in colored_partition_counts(5, 40)]
    p5 = euler(41).pow(-5)
    assert bits_list(p5, 41) == parity
    assert p5.coeff(1) == 1  # five 1-part colorings


def test_pow_zero_and_one():
    f = series([1, 0, 1])
    assert f.pow(0) == one(3)
    assert f.pow(1) is f


def test_dissect_examples():
    f = series([1, 0, 1, 1, 0])
    assert f.dissect(1, 0) == f
    squares = from_support([n * n for n in range(6)], 30)
    assert squares.dissect(4, 0).support() == [0, 1, 4]
    d = euler(200).inv().dissect(5, 4)
    assert bits_list(d, 5) == [1, 0, 1, 0, 1]  # p(4),p(9),p(14),p(19),p(24)


def test_dissect_trunc_and_errors():
    f = zero(10)
    assert f.dissect(3, 1).trunc == 3
    with pytest.raises(BadResidue):
        f.dissect(3, 3)
    with pytest.raises(BadResidue):
        f.dissect(0, 0)
    with pytest.raises(OffsetMismatch):
        F2Series(1, 4, 5).dissect(2, 0)


def test_dissect_respects_integer_offset():
    # q * (1 + q) has coefficients at q^1, q^2
    f = F2Series(0b11, 6, 24)
    assert f.dissect(2, 1).support() == [0]
    assert f.dissect(2, 0).support() == [1]


def test_inflate_examples():
    assert series([1, 1]).inflate(3).support() == [0, 3]
    f = series([1, 0, 1])
    assert f.inflate(1) is f
    e = euler(20)
    assert e.inflate(5).support() == [5 * g for g in pentagonal_numbers(20)]
    assert e.inflate(5).trunc == 100


def test_eta_power_examples():
    e1 = eta_power(1, 1, 30)
    assert e1.offset24 == 1
    assert e1.support() == [0, 1, 2, 5, 7, 12, 15, 22, 26]
    e3 = eta_power(1, 3, 20)
    assert e3.offset24 == 3
    assert e3.support() == [0, 1, 3, 6, 10, 15]
    e424 = eta_power(4, 24, 50)
    assert e424.offset24 == 96  # leading term q^4 as a classical form
    assert e424.coeff(0) == 1


def test_eta_power_inverse_routes():
    t = 400
    via_inv = eta_power(3, -2, t)
    direct = eta_power(3, 2, t).inv()
    assert via_inv == direct
    assert via_inv.offset24 == -6


def test_offset_alignment_in_equality():
    f = F2Series(0b10, 8, 0)     # q
    g = F2Series(0b1, 7, 24)     # q * 1
    assert f == g
    with pytest.raises(OffsetMismatch):
        f == F2Series(0b1, 7, 12)


def test_xor_aligns_multiples_of_24():
    f = series([1, 1, 0, 0])
    g = F2Series(0b1, 3, 24)
    assert (f ^ g).support() == [0]


def test_first_mismatch_reports_object_exponent():
    f = series([1, 1, 1, 1])
    g = series([1, 1, 0, 1])
    assert f.first_mismatch(g) == 2
    assert f.agree_through(g, 1)
    assert not f.agree_through(g, 2)
    assert f.first_mismatch(f) is None


def test_dissection_reconstruction():
    rng = random.Random(23)
    for a in range(1, 9):
        t = 96
        f = F2Series(rng.getrandbits(t), t)
        acc = None
        for b in range(a):
            piece = f.dissect(a, b).inflate(a).shifted(b).truncated(t)
            acc = piece if acc is None else acc ^ piece
        assert acc.truncated(f.dissect(a, a - 1).trunc * a) == f


def test_coeff_beyond_horizon_raises():
    f = series([1, 0, 1])
    with pytest.raises(IndexError):
        f.coeff(3)


def test_euler_product_identity_deep():
    # (q)(q^5) == (q)^6 + q (q^5)^6 to 10^5
    t = 10**5
    e1 = euler(t)
    e5 = euler(t // 5 + 2).inflate(5).truncated(t)
    lhs = e1.mul(e5)
    rhs = e1.pow(6) ^ e5.pow(6).shifted(1)
    assert lhs.first_mismatch(rhs.truncated(t)) is None
