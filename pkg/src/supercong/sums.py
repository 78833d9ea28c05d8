"""Exact evaluation of truncated binomial sums modulo prime powers.

A sum is described by a :class:`SumSpec`: a product of central binomial
families, a rational base m (terms are divided by m^k), a term weight,
a truncation limit, and an optional global sign.  Evaluation is exact:
term valuations are tracked separately from units, every unit is carried
modulo p^(t + guard), and the accumulated total is therefore exact modulo
p^t with no rounding of any kind.

Negative net valuation in a term is an error (the sum would not be a
p-adic integer); terms whose valuation reaches the working exponent
contribute nothing and are skipped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .binomials import EXACT, rational_binomial
from .context import PrimeContext
from .errors import BaseNotUnit, NegativeValuation
from .padic import DEFAULT_GUARD, Residue

# Truncation limits, as functions of p.
HALF = "half"  # k = 0 .. (p-1)/2
FULL = "full"  # k = 0 .. p-1
FULL_MINUS_1 = "full_minus_1"  # k = 0 .. p-2
FULL_MINUS_2 = "full_minus_2"  # k = 0 .. p-3

# Global sign prefactors.
NONE = "none"
SIGN_HALF = "sign_half"  # (-1)^((p-1)/2)
SIGN_QUARTER = "sign_quarter"  # (-1)^((p-1)/4), p = 1 (mod 4) only


@dataclass(frozen=True)
class Weight:
    """Term weight w(k).

    Tags: "one", "k", "k2", "k3" multiply by k^e; "inv_k1", "inv_k1_sq",
    "inv_k1_cu" divide by (k+1)^e; "inv_k2", "inv_k3" divide by k+2, k+3;
    "inv_2k1", "inv_2k1_sq" divide by (2k-1)^e; "linear" multiplies by
    c0 + c1*k.  Weights that evaluate to 0 zero out the term; inverse
    weights at p-divisible arguments lower the term valuation instead.
    """

    tag: str
    c0: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)


W_ONE = Weight("one")
W_K = Weight("k")
W_K2 = Weight("k2")
W_K3 = Weight("k3")
W_INV_K1 = Weight("inv_k1")
W_INV_K1_SQ = Weight("inv_k1_sq")
W_INV_K1_CU = Weight("inv_k1_cu")
W_INV_K2 = Weight("inv_k2")
W_INV_K3 = Weight("inv_k3")
W_INV_2K1 = Weight("inv_2k1")
W_INV_2K1_SQ = Weight("inv_2k1_sq")

# (base(k) coefficients, exponent, inverted) per tag; "linear" is special.
_WEIGHT_SHAPE = {
    "one": (1, 0, 1, False),
    "k": (0, 1, 1, False),
    "k2": (0, 1, 2, False),
    "k3": (0, 1, 3, False),
    "inv_k1": (1, 1, 1, True),
    "inv_k1_sq": (1, 1, 2, True),
    "inv_k1_cu": (1, 1, 3, True),
    "inv_k2": (2, 1, 1, True),
    "inv_k3": (3, 1, 1, True),
    "inv_2k1": (-1, 2, 1, True),
    "inv_2k1_sq": (-1, 2, 2, True),
}


def linear_weight(c0: Fraction | int, c1: Fraction | int) -> Weight:
    return Weight("linear", Fraction(c0), Fraction(c1))


@dataclass(frozen=True)
class SumSpec:
    """A truncated sum sum_k w(k) * prod(binomials at k) / m^k."""

    product: tuple[str, ...]
    m: Fraction
    weight: Weight = W_ONE
    limit: str = HALF
    prefactor: str = NONE


def limit_bound(limit: str, p: int) -> int:
    if limit == HALF:
        return (p - 1) // 2
    if limit == FULL:
        return p - 1
    if limit == FULL_MINUS_1:
        return p - 2
    if limit == FULL_MINUS_2:
        return p - 3
    raise ValueError(f"unknown limit {limit!r}")


def prefactor_sign(prefactor: str, p: int) -> int:
    if prefactor == NONE:
        return 1
    if prefactor == SIGN_HALF:
        return -1 if (p - 1) // 2 % 2 else 1
    if prefactor == SIGN_QUARTER:
        return -1 if (p - 1) // 4 % 2 else 1
    raise ValueError(f"unknown prefactor {prefactor!r}")


def _weight_ints(weight: Weight) -> tuple[int, int, int, bool, int]:
    """Integer form (a0, a1, exp, inverted, clear) with w = (a0+a1*k)^e/clear.

    For the "linear" tag the rational coefficients are cleared to integers
    and the denominator is returned separately; it is a global constant
    factor, applied once to the whole sum.
    """
    if weight.tag == "linear":
        den = weight.c0.denominator
        den = den * weight.c1.denominator // _gcd(den, weight.c1.denominator)
        a0 = int(weight.c0 * den)
        a1 = int(weight.c1 * den)
        return a0, a1, 1, False, den
    a0, a1, exp, inv = _WEIGHT_SHAPE[weight.tag]
    return a0, a1, exp, inv, 1


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _accumulate(
    vs: Sequence[int],
    us: Sequence[int],
    bound: int,
    p: int,
    P: int,
    T: int,
    pow_p: Sequence[int],
    weight: Weight,
    zv: int,
    zu: int,
    inv,
    pole_min: int | None = None,
) -> int:
    """Sum of w(k) * term_k * z^k over k = 0..bound, exact mod P = p^T.

    (vs, us) give term valuations and units; us[k] == 0 marks an exact
    zero.  z = p^zv * zu is the per-step geometric multiplier.  The
    result still carries the linear weight's cleared denominator.
    """
    a0, a1, exp, inverted, _ = _weight_ints(weight)
    acc = 0
    pv, pu = 0, 1
    for k in range(bound + 1):
        u = us[k]
        if u and pv < T + 3:
            b = a0 + a1 * k
            if b:
                sign = 1
                if b < 0:
                    sign, b = -1, -b
                dv = 0
                while b % p == 0:
                    b //= p
                    dv += 1
                ub = inv(b) if inverted else b
                du = ub
                for _ in range(exp - 1):
                    du = du * ub % P
                if sign < 0 and exp % 2:
                    du = -du % P
                net = vs[k] + (-dv if inverted else dv) * exp
                if inverted and dv and pole_min is not None:
                    # the product's valuation must absorb the pole at 2k = p+1
                    assert net >= pole_min, (k, net, pole_min)
                v = net + pv
                if v < 0:
                    raise NegativeValuation(
                        f"term k={k} has valuation {v} < 0; sum is not p-integral"
                    )
                if v < T:
                    acc = (acc + u * du % P * pu % P * pow_p[v]) % P
        pv += zv
        pu = pu * zu % P
    return acc


def evaluate_sum(
    spec: SumSpec,
    p: int,
    t: int,
    ctx: PrimeContext | None = None,
    guard: int = DEFAULT_GUARD,
) -> Residue:
    """Evaluate the sum exactly modulo p^t."""
    if ctx is None:
        ctx = PrimeContext.for_target(p, t, guard)
    if ctx.workexp < t:
        raise ValueError(f"context exponent {ctx.workexp} below target {t}")
    P, T = ctx.P, ctx.workexp
    num, den = spec.m.numerator, spec.m.denominator
    if num % p == 0 or den % p == 0:
        raise BaseNotUnit(f"base {spec.m} is not a p-adic unit at p={p}")
    zu = den % P * pow(num, -1, P) % P
    vs, us = ctx.product(spec.product)
    bound = limit_bound(spec.limit, p)
    pole_min = None
    if spec.weight.tag.startswith("inv_2k1"):
        # at 2k = p + 1 each C(2k,k) or C(6k,3k) factor contributes one
        # power of p while C(3k,k) and C(4k,2k) contribute none
        gain = sum(1 for kind in spec.product if kind in ("B22", "B63"))
        pole_min = gain - _WEIGHT_SHAPE[spec.weight.tag][2]
    acc = _accumulate(
        vs, us, bound, p, P, T, ctx.pow_p, spec.weight, 0, zu, ctx.inv, pole_min
    )
    clear = _weight_ints(spec.weight)[4]
    if clear > 1:
        acc = acc * pow(clear, -1, P) % P
    if prefactor_sign(spec.prefactor, p) < 0:
        acc = -acc % P
    return Residue(p, t, acc)


def evaluate_combo(
    terms: Iterable[tuple[Fraction | int, SumSpec]],
    p: int,
    t: int,
    ctx: PrimeContext | None = None,
    guard: int = DEFAULT_GUARD,
) -> Residue:
    """Linear combination sum_i c_i * S_i of sums, exact modulo p^t."""
    if ctx is None:
        ctx = PrimeContext.for_target(p, t, guard)
    m = p**t
    total = 0
    for coeff, spec in terms:
        c = Fraction(coeff)
        cval = c.numerator * pow(c.denominator, -1, m) % m
        total = (total + cval * evaluate_sum(spec, p, t, ctx, guard).value) % m
    return Residue(p, t, total)


def evaluate_jacobi_sum(
    a: int,
    p: int,
    t: int,
    *,
    weight: Weight = W_ONE,
    limit: str = FULL,
    mult: int = 1,
    base: Fraction | int | None = None,
    central: bool = False,
    ctx: PrimeContext | None = None,
    guard: int = DEFAULT_GUARD,
) -> Residue:
    """Sum of w(k) * C(a,k)C(-1-a,k) [* C(2k,k)] * mult^k [/ base^k] mod p^t.

    a and mult are exact integers; mult may be divisible by p (the tail
    of the series then vanishes on its own) or zero (only k = 0 remains).
    base, when given, must be a p-adic unit.
    """
    if ctx is None:
        ctx = PrimeContext.for_target(p, t, guard)
    P, T = ctx.P, ctx.workexp
    vs, us = ctx.jacobi_central(a) if central else ctx.jacobi(a)
    zv, zu = 0, mult
    if mult == 0:
        zv = T + 4  # kills every k >= 1
        zu = 1
    else:
        while zu % p == 0:
            zu //= p
            zv += 1
        zu %= P
    if base is not None:
        bfrac = Fraction(base)
        num, den = bfrac.numerator, bfrac.denominator
        if num % p == 0 or den % p == 0:
            raise BaseNotUnit(f"base {bfrac} is not a p-adic unit at p={p}")
        zu = zu * den % P * pow(num, -1, P) % P
    bound = limit_bound(limit, p)
    acc = _accumulate(vs, us, bound, p, P, T, ctx.pow_p, weight, zv, zu, ctx.inv)
    clear = _weight_ints(weight)[4]
    if clear > 1:
        acc = acc * pow(clear, -1, P) % P
    return Residue(p, t, acc)


# -- exact rational oracles (for tests and cross-checks) -------------------


def weight_value(weight: Weight, k: int) -> Fraction:
    if weight.tag == "linear":
        return weight.c0 + weight.c1 * k
    a0, a1, exp, inv = _WEIGHT_SHAPE[weight.tag]
    b = Fraction(a0 + a1 * k)
    if b == 0:
        return Fraction(0)
    return b**-exp if inv else b**exp


def evaluate_sum_exact(spec: SumSpec, p: int) -> Fraction:
    """The same sum as an exact rational number (slow, small p only)."""
    total = Fraction(0)
    for k in range(limit_bound(spec.limit, p) + 1):
        term = weight_value(spec.weight, k)
        if term == 0:
            continue
        for kind in spec.product:
            term *= EXACT[kind](k)
        total += term / spec.m**k
    return total * prefactor_sign(spec.prefactor, p)


def evaluate_jacobi_sum_exact(
    a: int,
    p: int,
    *,
    weight: Weight = W_ONE,
    limit: str = FULL,
    mult: int = 1,
    base: Fraction | int | None = None,
    central: bool = False,
) -> Fraction:
    total = Fraction(0)
    for k in range(limit_bound(limit, p) + 1):
        term = weight_value(weight, k)
        if term == 0:
            continue
        term *= rational_binomial(a, k) * rational_binomial(-1 - a, k)
        if central:
            term *= EXACT["B22"](k)
        term *= Fraction(mult) ** k
        if base is not None:
            term /= Fraction(base) ** k
        total += term
    return total
