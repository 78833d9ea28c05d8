"""Binomial streams and generalized binomials against exact big integers."""

import math
from fractions import Fraction

import pytest

from supercong.binomials import (
    B22,
    B31,
    B42,
    B63,
    KINDS,
    batch_invert,
    binomial_mod,
    exact_binomial,
    generalized_binomial,
    rational_binomial,
    stream,
    stream_arrays,
    v_p_binomial,
)
from supercong.errors import IndexOutOfRange
from supercong.padic import reduce_to

# Independent oracles: literal closed forms, no shared table with the package.
EXACT = {
    B22: lambda k: math.comb(2 * k, k),
    B31: lambda k: math.comb(3 * k, k),
    B42: lambda k: math.comb(4 * k, 2 * k),
    B63: lambda k: math.comb(6 * k, 3 * k),
}


def exact_vp(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@pytest.mark.parametrize("p", (11, 101, 997))
@pytest.mark.parametrize("kind", KINDS)
def test_stream_matches_exact_binomials(p, kind):
    """Every stream term equals the exact binomial, reduced mod p^2 and p^4."""
    vs, us = stream_arrays(kind, p, 4)
    for k in range(p):
        n = EXACT[kind](k)
        assert vs[k] == exact_vp(n, p)
        for t in (2, 4):
            m = p**t
            assert us[k] * p ** vs[k] % m == n % m, (kind, p, k, t)


@pytest.mark.parametrize("p", (11, 101))
@pytest.mark.parametrize("kind", KINDS)
def test_stream_iterator_agrees_with_arrays(p, kind):
    for k, term in enumerate(stream(kind, p, 4)):
        if k >= p:
            break
        assert reduce_to(term, 3).value == EXACT[kind](k) % p**3


@pytest.mark.parametrize("p", (11, 101, 997))
def test_central_binomial_divisible_in_upper_half(p):
    """C(2k,k) = 0 (mod p) for (p+1)/2 <= k <= p-1."""
    vs, _ = stream_arrays(B22, p, 2)
    for k in range((p + 1) // 2, p):
        assert vs[k] >= 1


def test_consecutive_ratios_against_exact_for_k_up_to_200():
    """Stream recursions reproduce exact binomials for k <= 200 (prime 211)."""
    p = 211
    for kind in KINDS:
        vs, us = stream_arrays(kind, p, 4)
        m = p**4
        for k in range(201):
            n = EXACT[kind](k)
            assert us[k] * p ** vs[k] % m == n % m, (kind, k)


def test_exact_binomial_and_valuation():
    assert exact_binomial(10, 3) == 120
    assert exact_binomial(3, 7) == 0
    for n, k, p in ((20, 7, 3), (100, 41, 5), (999, 500, 7), (57, 19, 19)):
        assert v_p_binomial(n, k, p) == exact_vp(math.comb(n, k), p)


def test_rational_binomial_small_values():
    assert rational_binomial(Fraction(-1, 2), 2) == Fraction(3, 8)
    assert rational_binomial(5, 2) == Fraction(10)
    assert rational_binomial(Fraction(1, 3), 0) == Fraction(1)


def test_batch_invert():
    xs = [1, 2, 3, 4, 6]
    m = 7**3
    inv = batch_invert(xs, m)
    for x, y in zip(xs, inv):
        assert x * y % m == 1


@pytest.mark.parametrize(
    "n,k,p,t",
    [
        (40, 17, 11, 3),
        (123, 61, 7, 2),
        (200_000, 90_000, 11, 3),  # far above the exact-arithmetic cutoff
        (30_001, 10_000, 101, 2),
    ],
)
def test_binomial_mod_matches_exact(n, k, p, t):
    want = math.comb(n, k)
    got = binomial_mod(n, k, p, t)
    assert got.v == exact_vp(want, p)
    if got.v + got.g >= t:
        assert reduce_to(got, t).value == want % p**t


@pytest.mark.parametrize("p", (13, 29))
def test_half_binomial_identity(p):
    """C(-1/2, k) = C(2k,k) / (-4)^k for all k < p."""
    t = 2
    m = p**t
    for k in range(p):
        got = reduce_to(generalized_binomial(Fraction(-1, 2), k, p, t + 2), t)
        want = math.comb(2 * k, k) * pow(-4, -k, m) % m
        assert got.value == want, k


@pytest.mark.parametrize("p", (13, 29))
def test_product_identities_mod_p2(p):
    """C(a,k)C(-1-a,k) for a = -1/4, -1/6, -1/3 equals the matching stream
    quotient C(2k,k)C(4k,2k)/64^k, C(3k,k)C(6k,3k)/432^k, C(2k,k)C(3k,k)/27^k."""
    t = 2
    m = p**t
    cases = [
        (Fraction(-1, 4), lambda k: math.comb(2 * k, k) * math.comb(4 * k, 2 * k), 64),
        (Fraction(-1, 6), lambda k: math.comb(3 * k, k) * math.comb(6 * k, 3 * k), 432),
        (Fraction(-1, 3), lambda k: math.comb(2 * k, k) * math.comb(3 * k, k), 27),
    ]
    for a, prod, base in cases:
        if base % p == 0:
            continue
        for k in range(p):
            left = generalized_binomial(a, k, p, t + 3).mul(
                generalized_binomial(-1 - a, k, p, t + 3)
            )
            want = prod(k) * pow(base, -k, m) % m
            assert reduce_to(left, t).value == want, (a, k)


def test_generalized_binomial_index_bounds():
    with pytest.raises(IndexOutOfRange):
        generalized_binomial(Fraction(-1, 2), 13, 13)
    with pytest.raises(IndexOutOfRange):
        generalized_binomial(Fraction(-1, 2), -1, 13)
