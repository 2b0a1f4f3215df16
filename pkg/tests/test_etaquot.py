"""Eta-quotient modularity, characters, cusps and cusp orders."""

import random
from fractions import Fraction
from math import gcd

import pytest

from qparity.arith import euler_phi
from qparity.etaquot import (Cusp, EtaQuotient, cusp_count, cusp_set, ghn_check,
                             kronecker, ligozat_order, order_table,
                             parse_eta_quotient)
from qparity.f2series import euler, one


def test_ghn_weight_zero_level_44():
    q = EtaQuotient(44, {1: -1, 4: 1, 11: 11, 44: -11})
    rep = ghn_check(q)
    assert rep.is_form
    assert rep.weight2 == 0
    assert q.sigma_delta() == -360
    assert q.sigma_quot() == 0


def test_ghn_eta4_360():
    rep = ghn_check(EtaQuotient(4, {4: 360}))
    assert rep.is_form
    assert rep.weight2 == 360          # weight 180
    assert rep.char_s_kernel == 1      # trivial character
    assert rep.char_k == 0


def test_ghn_eta_z_alone_fails():
    rep = ghn_check(EtaQuotient(1, {1: 1}))
    assert not rep.is_form
    assert rep.cond_a == 1


def test_character_pair_examples():
    # the nontrivial-character quotient from the 7,1,3 certification
    rep = ghn_check(EtaQuotient(28, {1: 1, 4: 2, 7: -3, 14: 18, 28: -18}))
    assert rep.is_form and rep.weight2 == 0
    assert rep.char_s_kernel == 7
    assert not rep.trivial_character()


def test_character_kernel_under_square_divisor_bumps():
    # adding 2 to the exponent at a perfect-square divisor multiplies s by a
    # square; only the weight-parity sign can move, and +4 changes nothing
    rng = random.Random(3)
    checked = 0
    while checked < 100:
        n = rng.choice((4, 9, 16, 36))
        exps = {1: rng.randrange(-6, 7) or 2, n: rng.randrange(-6, 7)}
        if sum(exps.values()) % 2:
            continue
        base = ghn_check(EtaQuotient(n, dict(exps)))
        exps[n] = exps.get(n, 0) + 2
        bumped = ghn_check(EtaQuotient(n, dict(exps)))
        assert abs(bumped.char_s_kernel) == abs(base.char_s_kernel)
        assert bumped.char_s_kernel == -base.char_s_kernel  # k parity flipped
        exps[n] += 2
        again = ghn_check(EtaQuotient(n, exps))
        assert again.char_s_kernel == base.char_s_kernel
        checked += 1


def test_kronecker_values():
    assert kronecker(1, 1) == 1
    assert kronecker(3, 5) == -1
    assert kronecker(0, 1) == 1
    assert kronecker(0, 5) == 0
    assert kronecker(4, 2) == 0
    assert kronecker(7, 2) == 1
    assert kronecker(3, 2) == -1
    assert kronecker(-1, -1) == -1
    assert kronecker(5, -3) == -1
    assert kronecker(-5, -3) == -1
    assert kronecker(-1, 3) == -1
    assert kronecker(-1, 5) == 1


def test_kronecker_against_euler_criterion():
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29):
        for a in range(1, p):
            want = 1 if pow(a, (p - 1) // 2, p) == 1 else -1
            assert kronecker(a, p) == want, (a, p)


def test_kronecker_multiplicative():
    rng = random.Random(5)
    for _ in range(300):
        a, b = rng.randrange(-60, 61), rng.randrange(-60, 61)
        n, m = rng.randrange(-60, 61), rng.randrange(-60, 61)
        assert kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n)
        assert kronecker(a, n * m) == kronecker(a, n) * kronecker(a, m)


def test_kronecker_square_factor():
    rng = random.Random(9)
    for _ in range(200):
        s = rng.randrange(1, 50)
        d = rng.randrange(1, 50)
        m = rng.randrange(1, 20)
        if gcd(m, d) != 1:
            continue
        assert kronecker(s * m * m, d) == kronecker(s, d)


def test_cusp_sets():
    assert [(c.c, c.d) for c in cusp_set(1)] == [(0, 1)]
    assert cusp_count(4) == len(cusp_set(4)) == 3
    assert cusp_count(44) == len(cusp_set(44)) == 6
    for n in range(1, 61):
        cusps = cusp_set(n)
        assert len(cusps) == sum(euler_phi(gcd(d, n // d)) for d in
                                 [d for d in range(1, n + 1) if n % d == 0])
        assert all(gcd(c.c, c.d) == 1 for c in cusps)


def test_ligozat_eta4_24():
    q = EtaQuotient(4, {4: 24})
    orders = {c.d: ligozat_order(q, c) for c in cusp_set(4)}
    assert orders[4] == 4   # matches the leading q^4
    assert orders[1] == 1
    assert orders[2] == 1


def test_ligozat_representative_independence():
    q = EtaQuotient(44, {1: 10, 2: 2, 11: 10, 22: -22})
    for cusp in cusp_set(44):
        g = gcd(cusp.d, 44 // cusp.d)
        c2 = cusp.c + g
        while gcd(c2, cusp.d) != 1:
            c2 += g
        assert ligozat_order(q, Cusp(c2, cusp.d)) == ligozat_order(q, cusp)


def test_ligozat_linear_in_exponents():
    rng = random.Random(17)
    hits = 0
    while hits < 50:
        n = rng.choice((4, 6, 12, 20))
        exps = {d: rng.randrange(-4, 5) for d in (1, 2, n) if rng.random() < 0.9}
        exps = {d: e for d, e in exps.items() if e}
        if not exps:
            continue
        q = EtaQuotient(n, dict(exps))
        if not ghn_check(q).is_form:
            continue
        doubled = EtaQuotient(n, {d: 2 * e for d, e in exps.items()})
        for cusp in cusp_set(n):
            assert ligozat_order(doubled, cusp) == 2 * ligozat_order(q, cusp)
        hits += 1


def test_order_at_infinity_is_sigma_over_24():
    rng = random.Random(31)
    for _ in range(200):
        n = rng.choice((2, 4, 6, 10, 12))
        exps = {d: rng.randrange(-5, 6) for d in (1, n)}
        if not any(exps.values()):
            continue
        q = EtaQuotient(n, exps)
        assert order_table(q)[n] == Fraction(q.sigma_delta(), 24)


def test_expand_examples():
    inv_eta = EtaQuotient(1, {1: -1})
    s = inv_eta.expand(50)
    assert s.offset24 == -1
    assert [s.coeff(n) for n in range(11)] == [1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 0]
    collapse = EtaQuotient(2, {2: 1, 1: -2}).expand(300)
    assert collapse == one(300, 0).with_offset24(0)
    big = EtaQuotient(44, {1: 10, 2: 2, 11: 11, 22: -22})
    assert big.expand(20).offset24 == -349


def test_expand_is_multiplicative():
    rng = random.Random(41)
    for _ in range(30):
        n = 12
        e1 = {d: rng.randrange(-2, 3) for d in (1, 2, 3)}
        e2 = {d: rng.randrange(-2, 3) for d in (2, 4, 6)}
        if not any(e1.values()) or not any(e2.values()):
            continue
        t = 150
        merged = dict(e1)
        for d, e in e2.items():
            merged[d] = merged.get(d, 0) + e
        if not any(merged.values()):
            continue
        lhs = EtaQuotient(n, merged).expand(t)
        rhs = EtaQuotient(n, e1).expand(t).mul(EtaQuotient(n, e2).expand(t)).truncated(t)
        assert lhs.truncated(rhs.trunc) == rhs


def test_expand_against_regular_partitions():
    # eta(5z)/eta(z) carries the 5-regular parity at offset 4/24... of q^(1/6)
    from qparity.partitions import regular_parity
    q = EtaQuotient(5, {5: 1, 1: -1})
    s = q.expand(200)
    assert s.offset24 == 4
    assert [s.coeff(n) for n in range(200)] == \
        [regular_parity(5, 200).coeff(n) for n in range(200)]


def test_parse_round_trip():
    q = parse_eta_quotient("eta(1)^10 * eta(2)^2 * eta(11)^11 * eta(22)^-22 @ N=44")
    assert q.N == 44
    assert q.exps == {1: 10, 2: 2, 11: 11, 22: -22}
    q2 = parse_eta_quotient("eta(4)")
    assert q2.N == 4 and q2.exps == {4: 1}
    q3 = parse_eta_quotient("eta(2)^3 * eta(3)^-1")
    assert q3.N == 6
    with pytest.raises(ValueError):
        parse_eta_quotient("eta(2)^a")
    with pytest.raises(ValueError):
        parse_eta_quotient("eta(8)^2 @ N=4")


def test_quotient_validation():
    with pytest.raises(ValueError):
        EtaQuotient(4, {3: 1})
    with pytest.raises(ValueError):
        EtaQuotient(4, {2: 0})
