"""Auxiliary right-hand-side constants against exact rational references."""

import math
import random
from fractions import Fraction

import pytest

from supercong.errors import NotCoprime, WrongClass
from supercong.special import (
    euler_numbers_exact,
    euler_numbers_mod,
    fermat_quotient,
    legendre,
    r1,
    r3,
    u_numbers_exact,
    u_numbers_mod,
)


def reduce_fraction(q: Fraction, p: int, t: int) -> int:
    m = p**t
    assert q.denominator % p != 0
    return q.numerator * pow(q.denominator, -1, m) % m


def primes_between(lo: int, hi: int):
    return [n for n in range(lo, hi + 1) if n > 1 and all(n % d for d in range(2, math.isqrt(n) + 1))]


def test_r1_golden_values():
    assert r1(7).value == 9 and r1(7).modulus == 49
    assert r1(11).value == 67


def test_r3_golden_value():
    assert r3(5).value == 11 and r3(5).modulus == 25


def test_r1_matches_exact_rational_oracle():
    """(2p + 2 - 2^(p-1)) * C((p-1)/2, floor(p/4))^2 mod p^2, fully exact."""
    for p in primes_between(3, 200):
        if p % 4 != 3:
            continue
        exact = (2 * p + 2 - 2 ** (p - 1)) * math.comb((p - 1) // 2, p // 4) ** 2
        assert r1(p).value == exact % p**2, p


def test_r3_matches_exact_rational_oracle():
    """(1 + 2p + (4/3)(2^(p-1)-1) - (3/2)(3^(p-1)-1)) * C((p-1)/2, floor(p/6))^2."""
    for p in primes_between(5, 200):
        if p % 3 != 2:
            continue
        coeff = (
            1
            + 2 * p
            + Fraction(4, 3) * (2 ** (p - 1) - 1)
            - Fraction(3, 2) * (3 ** (p - 1) - 1)
        )
        exact = coeff * math.comb((p - 1) // 2, p // 6) ** 2
        assert r3(p).value == reduce_fraction(exact, p, 2), p


def test_r1_r3_wrong_class_rejected():
    with pytest.raises(WrongClass):
        r1(5)
    with pytest.raises(WrongClass):
        r3(7)


def test_fermat_quotient_examples():
    q = fermat_quotient(2, 7, 2)
    assert (q.value, q.p, q.t) == (2, 7, 1)  # (2^6 - 1)/7 = 9 = 2 mod 7
    q = fermat_quotient(3, 11, 3)
    assert q.modulus == 121
    assert q.value == (3**10 - 1) // 11 % 121


def test_fermat_quotient_consistency():
    """p * q_p(b) + 1 = b^(p-1) (mod p^t)."""
    rng = random.Random(7)
    for _ in range(200):
        p = rng.choice(primes_between(3, 300))
        b = rng.randrange(2, 50)
        if b % p == 0:
            continue
        t = rng.randrange(2, 5)
        q = fermat_quotient(b, p, t)
        assert (p * q.value + 1) % p**t == pow(b, p - 1, p**t)


def test_fermat_quotient_input_validation():
    with pytest.raises(NotCoprime):
        fermat_quotient(14, 7, 2)
    with pytest.raises(ValueError):
        fermat_quotient(2, 7, 1)


def test_legendre_multiplicativity():
    rng = random.Random(11)
    for p in (5, 13, 101, 499):
        for _ in range(200):
            a = rng.randrange(1, 10**6)
            b = rng.randrange(1, 10**6)
            if a % p == 0 or b % p == 0:
                continue
            assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


def test_legendre_euler_criterion_and_errors():
    assert legendre(2, 7) == 1 and legendre(3, 7) == -1
    with pytest.raises(NotCoprime):
        legendre(21, 7)


def test_euler_numbers_exact_prefix():
    # E_0..E_10 at even indices: 1, -1, 5, -61, 1385, -50521
    es = euler_numbers_exact(10)
    assert es[0::2] == [1, -1, 5, -61, 1385, -50521]
    assert all(e == 0 for e in es[1::2])


def test_u_numbers_exact_prefix():
    # U_0..U_8 at even indices: 1, -2, 22, -602, 30742
    us = u_numbers_exact(8)
    assert us[0::2] == [1, -2, 22, -602, 30742]
    assert all(u == 0 for u in us[1::2])


@pytest.mark.parametrize("p", (7, 11, 101))
def test_sequences_mod_match_exact_then_reduce(p):
    n = min(30, p - 1)  # recurrence indices must stay below p
    assert euler_numbers_mod(n, p) == [e % p for e in euler_numbers_exact(n)]
    assert u_numbers_mod(n, p) == [u % p for u in u_numbers_exact(n)]


def test_sequences_mod_reject_indices_at_p():
    with pytest.raises(ValueError):
        euler_numbers_mod(7, 7)
