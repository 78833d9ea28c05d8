"""Per-prime evaluation context.

Everything expensive that more than one statement needs at the same prime
lives here and is computed once: binomial stream arrays, products of
streams, inverse tables, quadratic form representations, and the special
constants.  A context is confined to one task; the registry itself stays
read-only and shareable.
"""

from __future__ import annotations

from fractions import Fraction

from . import quadform, special
from .binomials import batch_invert, jacobi_stream_arrays, stream_arrays
from .errors import NotRepresentable
from .padic import DEFAULT_GUARD, Residue


class PrimeContext:
    """Shared per-prime caches at a fixed working exponent."""

    def __init__(self, p: int, workexp: int):
        self.p = p
        self.workexp = workexp
        self.P = p**workexp
        self.pow_p = [p**i for i in range(workexp + 1)]
        self._streams: dict[str, tuple[list[int], list[int]]] = {}
        self._products: dict[tuple[str, ...], tuple[list[int], list[int]]] = {}
        self._jacobi: dict[int, tuple[list[int], list[int]]] = {}
        self._jacobi_central: dict[int, tuple[list[int], list[int]]] = {}
        self._inv: list[int] | None = None
        self._reps: dict[str, quadform.QuadRep | None] = {}
        self._euler: list[int] | None = None
        self._u: list[int] | None = None

    @classmethod
    def for_target(cls, p: int, t: int, guard: int = DEFAULT_GUARD) -> "PrimeContext":
        return cls(p, t + guard)

    # -- streams ---------------------------------------------------------

    def stream(self, kind: str) -> tuple[list[int], list[int]]:
        if kind not in self._streams:
            self._streams[kind] = stream_arrays(kind, self.p, self.workexp)
        return self._streams[kind]

    def product(self, kinds: tuple[str, ...]) -> tuple[list[int], list[int]]:
        """Elementwise product of one to three stream families."""
        key = tuple(sorted(kinds))
        if key not in self._products:
            P = self.P
            vs, us = self.stream(key[0])
            vs, us = list(vs), list(us)
            for kind in key[1:]:
                v2, u2 = self.stream(kind)
                for k in range(self.p):
                    vs[k] += v2[k]
                    us[k] = us[k] * u2[k] % P
            self._products[key] = (vs, us)
        return self._products[key]

    def jacobi(self, a: int) -> tuple[list[int], list[int]]:
        """C(a,k)C(-1-a,k) arrays for an exact integer a."""
        if a not in self._jacobi:
            self._jacobi[a] = jacobi_stream_arrays(a, self.p, self.workexp)
        return self._jacobi[a]

    def jacobi_central(self, a: int) -> tuple[list[int], list[int]]:
        """C(a,k)C(-1-a,k)C(2k,k) arrays for an exact integer a."""
        if a not in self._jacobi_central:
            vs, us = self.jacobi(a)
            cv, cu = self.stream("B22")
            P = self.P
            self._jacobi_central[a] = (
                [vs[k] + cv[k] for k in range(self.p)],
                [us[k] * cu[k] % P for k in range(self.p)],
            )
        return self._jacobi_central[a]

    # -- inverses --------------------------------------------------------

    def inv(self, n: int) -> int:
        """Inverse mod p^workexp of a p-free 0 < n <= 2p + 4."""
        if self._inv is None:
            top = 2 * self.p + 4
            units = [i for i in range(1, top + 1) if i % self.p]
            invs = batch_invert(units, self.P)
            table = [0] * (top + 1)
            for i, val in zip(units, invs):
                table[i] = val
            self._inv = table
        return self._inv[n]

    # -- quadratic forms and specials -------------------------------------

    def rep(self, form: str) -> quadform.QuadRep:
        """Canonical (x > 0, y > 0) representation; raises NotRepresentable."""
        if form not in self._reps:
            try:
                self._reps[form] = quadform.represent(self.p, form)
            except NotRepresentable:
                self._reps[form] = None
        got = self._reps[form]
        if got is None:
            raise NotRepresentable(f"p={self.p} not represented by {form}")
        return got

    def xy(self, form: str) -> tuple[int, int]:
        r = self.rep(form)
        return r.x, r.y

    def x_one_mod_4(self) -> int:
        """x with p = x^2 + 4y^2 and x = 1 (mod 4)."""
        return quadform.normalize_x(self.rep(quadform.F4), "one_mod_4").x

    @property
    def sign_half(self) -> int:
        return -1 if (self.p - 1) // 2 % 2 else 1

    @property
    def sign_quarter(self) -> int:
        return -1 if (self.p - 1) // 4 % 2 else 1

    def legendre(self, a: int) -> int:
        return special.legendre(a, self.p)

    def r1(self, t: int = 2) -> int:
        """R1(p) lifted from mod p^2 (statements only ever use it mod p^2)."""
        return special.r1(self.p).value

    def r3(self, t: int = 2) -> int:
        return special.r3(self.p).value

    def fermat_quotient(self, b: int, t: int) -> int:
        return special.fermat_quotient(b, self.p, t).value

    def binom(self, n: int, k: int, t: int) -> int:
        """C(n,k) mod p^t for the p-unit binomials in right-hand sides."""
        from .binomials import binomial_mod
        from .padic import reduce_to

        return reduce_to(binomial_mod(n, k, self.p, t), t).value

    def euler_number(self, n: int) -> int:
        if self._euler is None:
            self._euler = special.euler_numbers_mod(self.p - 3, self.p)
        return self._euler[n]

    def u_number(self, n: int) -> int:
        if self._u is None:
            self._u = special.u_numbers_mod(self.p - 3, self.p)
        return self._u[n]

    def residue(self, q: Fraction | int, t: int) -> Residue:
        q = Fraction(q)
        m = self.p**t
        return Residue(self.p, t, q.numerator * pow(q.denominator, -1, m) % m)
