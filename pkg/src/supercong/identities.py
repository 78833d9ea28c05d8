"""Exact rational identities underlying the congruence machinery.

Everything here is checked in exact arithmetic over the rationals
(no primes, no truncation beyond an explicit series order), so these
functions double as self-tests of the algebra the modular evaluators
rely on: the product formulas rewriting C(a,k)C(-1-a,k) for the four
special values of a, the convolution identity equating two weighted
sums, its three-term recurrence, the squared-series identity, and the
index-shift formula for (k+1)^2 C(a,k+1)C(-1-a,k+1)C(2k+2,k+1).
"""

from __future__ import annotations

from fractions import Fraction

from .binomials import exact_binomial, rational_binomial


def convolution_lhs(a: Fraction | int, n: int) -> Fraction:
    """sum_{k=0}^n k C(a,k)C(-1-a,k) (n+1-k) C(a,n+1-k)C(-1-a,n+1-k)."""
    a = Fraction(a)
    total = Fraction(0)
    for k in range(n + 1):
        j = n + 1 - k
        total += (
            k
            * rational_binomial(a, k)
            * rational_binomial(-1 - a, k)
            * j
            * rational_binomial(a, j)
            * rational_binomial(-1 - a, j)
        )
    return total


def convolution_rhs(a: Fraction | int, n: int) -> Fraction:
    """a(a+1) sum_{k=0}^n C(a,k)C(-1-a,k)C(2k,k+1)(-1)^(n+1-k)C(k-1,n-k)."""
    a = Fraction(a)
    total = Fraction(0)
    for k in range(n + 1):
        sign = -1 if (n + 1 - k) % 2 else 1
        total += (
            rational_binomial(a, k)
            * rational_binomial(-1 - a, k)
            * exact_binomial(2 * k, k + 1)
            * sign
            * rational_binomial(k - 1, n - k)
        )
    return a * (a + 1) * total


def check_convolution_identity(n: int) -> bool:
    """Both sides are polynomials in a of degree <= 2n+2, so agreement
    at 2n+3 points proves the identity for that n."""
    return all(convolution_lhs(a, n) == convolution_rhs(a, n) for a in range(2 * n + 3))


def check_convolution_recurrence(n: int, a: Fraction | int) -> bool:
    """(n^3-n) S(n) = 2(n^3-(2a^2+2a+1)n+a(a+1)) S(n-1) - (n^3-(2a+1)^2 n) S(n-2)."""
    if n < 2:
        raise ValueError("recurrence starts at n = 2")
    a = Fraction(a)
    s = [convolution_lhs(a, m) for m in (n, n - 1, n - 2)]
    lhs = (n**3 - n) * s[0]
    rhs = 2 * (n**3 - (2 * a * a + 2 * a + 1) * n + a * (a + 1)) * s[1] - (
        n**3 - (2 * a + 1) ** 2 * n
    ) * s[2]
    return lhs == rhs


#: a -> (stream kinds, base) with C(a,k)C(-1-a,k) = prod(streams at k)/base^k.
PRODUCT_FORMS: dict[Fraction, tuple[tuple[str, str], int]] = {
    Fraction(-1, 2): (("B22", "B22"), 16),
    Fraction(-1, 3): (("B22", "B31"), 27),
    Fraction(-1, 4): (("B22", "B42"), 64),
    Fraction(-1, 6): (("B31", "B63"), 432),
}


def check_product_identities(k_max: int) -> bool:
    """C(-1/2,k)^2 = C(2k,k)^2/16^k and the three companion formulas."""
    from .binomials import EXACT

    for k in range(k_max + 1):
        if rational_binomial(Fraction(-1, 2), k) != Fraction(
            exact_binomial(2 * k, k), (-4) ** k
        ):
            return False
        for a, (kinds, base) in PRODUCT_FORMS.items():
            lhs = rational_binomial(a, k) * rational_binomial(-1 - a, k)
            rhs = Fraction(EXACT[kinds[0]](k) * EXACT[kinds[1]](k), base**k)
            if lhs != rhs:
                return False
    return True


def _series_mul(f: list[Fraction], g: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, fi in enumerate(f):
        if fi == 0 or i > order:
            continue
        for j, gj in enumerate(g):
            if i + j > order:
                break
            out[i + j] += fi * gj
    return out


def check_series_square(a: Fraction | int, order: int) -> bool:
    """(sum_k C(a,k)C(-1-a,k) k (-t)^k)^2 equals
    (a(a+1)t/(t+1)) sum_k C(2k,k+1)C(a,k)C(-1-a,k)(-t(t+1))^k
    as formal power series in t, compared through t^order."""
    a = Fraction(a)
    lhs_lin = [Fraction(0)] * (order + 1)
    for k in range(1, order + 1):
        c = rational_binomial(a, k) * rational_binomial(-1 - a, k) * k
        lhs_lin[k] = c * (-1) ** k
    lhs = _series_mul(lhs_lin, lhs_lin, order)

    # -t(t+1) = -t - t^2; raise incrementally.
    rhs = [Fraction(0)] * (order + 1)
    powk = [Fraction(0)] * (order + 1)
    powk[0] = Fraction(1)
    for k in range(order + 1):
        c = (
            rational_binomial(a, k)
            * rational_binomial(-1 - a, k)
            * exact_binomial(2 * k, k + 1)
        )
        for i, x in enumerate(powk):
            rhs[i] += c * x
        nxt = [Fraction(0)] * (order + 1)
        for i, x in enumerate(powk):
            if x == 0:
                continue
            if i + 1 <= order:
                nxt[i + 1] -= x
            if i + 2 <= order:
                nxt[i + 2] -= x
        powk = nxt
    # multiply by a(a+1) t and divide by t+1 (geometric series).
    geo = [Fraction(-1) ** i for i in range(order + 1)]
    rhs = _series_mul(rhs, geo, order)
    rhs = [Fraction(0)] + [a * (a + 1) * x for x in rhs[:order]]
    return lhs == rhs


def check_shift_identity(a: Fraction | int, k: int) -> bool:
    """(k+1)^2 C(a,k+1)C(-1-a,k+1)C(2k+2,k+1) equals
    (4k^2 + 2k - 4a(a+1) + 2a(a+1)/(k+1)) C(a,k)C(-1-a,k)C(2k,k)."""
    a = Fraction(a)
    lhs = (
        (k + 1) ** 2
        * rational_binomial(a, k + 1)
        * rational_binomial(-1 - a, k + 1)
        * exact_binomial(2 * k + 2, k + 1)
    )
    rhs = (
        4 * k * k + 2 * k - 4 * a * (a + 1) + 2 * a * (a + 1) / Fraction(k + 1)
    ) * rational_binomial(a, k) * rational_binomial(-1 - a, k) * exact_binomial(2 * k, k)
    return lhs == rhs
