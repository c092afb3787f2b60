"""Finite fields F_(p^m) for odd p: arithmetic, trace, quadratic character.

Elements are canonical indices in [0, q).  The base-p digits of an index are
the coefficients of the representative polynomial, constant term first, so
index 0 is zero, index 1 is one, and indices below p form the prime subfield.
"""

from __future__ import annotations

import functools
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .errors import DegreeTooSmall, FieldTooLarge, NotOddPrime

DEFAULT_MAX_Q = 20_000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, +1}; p must be an odd prime."""
    if p == 2 or not is_prime(p):
        raise NotOddPrime(f"p={p} is not an odd prime")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomial arithmetic over F_p -----------------------------------------
# Polynomials are lists of ints in [0, p), constant term first, no trailing
# zeros; [] is the zero polynomial.  Moduli are monic.

def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _rem(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    a = list(a)
    deg = len(f) - 1
    for i in range(len(a) - 1, deg - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(deg):
                a[i - deg + j] = (a[i - deg + j] - c * f[j]) % p
    return _trim(a)


def _mulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _rem(out, f, p)


def _powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _rem([c % p for c in a], f, p)
    while e:
        if e & 1:
            result = _mulmod(result, base, f, p)
        base = _mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        inv_lead = pow(b[-1], p - 2, p)
        monic = [c * inv_lead % p for c in b]
        a, b = b, _rem(a, monic, p)
    return a


def _poly_sub(u: Sequence[int], v: Sequence[int], p: int) -> list[int]:
    n = max(len(u), len(v))
    return _trim([((u[i] if i < len(u) else 0) - (v[i] if i < len(v) else 0)) % p
                  for i in range(n)])


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p (constant term first)."""
    f = _trim([c % p for c in coeffs])
    if len(f) < 2 or f[-1] != 1:
        return False
    m = len(f) - 1
    if m == 1:
        return True
    x = [0, 1]
    frob = {}
    cur = x
    for k in range(1, m + 1):
        cur = _powmod(cur, p, f, p)
        frob[k] = cur
    if _poly_sub(frob[m], x, p):
        return False
    for r in _prime_factors(m):
        if len(_poly_gcd(_poly_sub(frob[m // r], x, p), f, p)) != 1:
            return False
    return True


def irreducible_polys(p: int, m: int) -> Iterator[list[int]]:
    """Yield monic irreducible degree-m polynomials over F_p in ascending order.

    Order: lexicographic on the coefficients below the leading 1, compared
    from the highest degree down.  The first yield is the canonical modulus.
    """
    for k in range(p ** m):
        coeffs = [(k // p ** i) % p for i in range(m)] + [1]
        if is_irreducible(coeffs, p):
            yield coeffs


class FieldCtx:
    """A concrete realization of F_(p^m).

    Holds the modulus polynomial, log/antilog tables for a fixed generator,
    the full trace table, and the digit decomposition of every index.
    Instances are immutable after construction and safe to share across
    threads; all operations are pure reads.
    """

    def __init__(self, p: int, m: int, max_q: int = DEFAULT_MAX_Q,
                 modulus: Sequence[int] | None = None):
        if p == 2 or not is_prime(p):
            raise NotOddPrime(f"p={p} is not an odd prime")
        if m < 1:
            raise DegreeTooSmall(f"extension degree m={m} must be >= 1")
        q = p ** m
        if q > max_q:
            raise FieldTooLarge(f"p^m = {q} exceeds the cap {max_q}")
        self.p = p
        self.m = m
        self.q = q

        if modulus is None:
            modulus = next(irreducible_polys(p, m))
        else:
            modulus = [c % p for c in modulus]
            if len(modulus) != m + 1 or modulus[-1] != 1 or not is_irreducible(modulus, p):
                raise ValueError(f"modulus must be monic irreducible of degree {m} over F_{p}")
        self.modulus: tuple[int, ...] = tuple(modulus)

        self._pows = p ** np.arange(m, dtype=np.int64)
        idx = np.arange(q, dtype=np.int64)
        self._digits = ((idx[:, None] // self._pows[None, :]) % p).astype(np.int16)
        self.neg_table = (((-self._digits) % p).astype(np.int64) @ self._pows)

        self.generator = self._find_generator()
        self.antilog, self.log = self._build_log_tables()
        self.trace_table = self._build_trace_table()

        assert self.trace_table[0] == 0
        assert self.trace_table[1] == m % p

    # -- construction helpers -------------------------------------------------

    def _idx_to_poly(self, a: int) -> list[int]:
        p = self.p
        out = []
        while a:
            a, r = divmod(a, p)
            out.append(r)
        return out

    def _poly_to_idx(self, f: Sequence[int]) -> int:
        return sum(c * self.p ** i for i, c in enumerate(f))

    def _pow_idx(self, a: int, e: int) -> int:
        # exponentiation in the polynomial representation (log tables not built yet)
        r = _powmod(self._idx_to_poly(a), e, list(self.modulus), self.p)
        return self._poly_to_idx(r)

    def _find_generator(self) -> int:
        # smallest canonical index of multiplicative order q-1
        q1 = self.q - 1
        exps = [q1 // r for r in _prime_factors(q1)]
        for g in range(2, self.q):
            if all(self._pow_idx(g, e) != 1 for e in exps):
                return g
        raise AssertionError("no multiplicative generator found")

    def _build_log_tables(self) -> tuple[np.ndarray, np.ndarray]:
        p, m, q = self.p, self.m, self.q
        f = list(self.modulus)
        g_poly = self._idx_to_poly(self.generator)
        # multiplication by g is linear on coefficient vectors
        mul_g = np.zeros((m, m), dtype=np.int64)
        for j in range(m):
            col = _mulmod([0] * j + [1], g_poly, f, p)
            mul_g[: len(col), j] = col
        antilog = np.empty(q - 1, dtype=np.int64)
        v = np.zeros(m, dtype=np.int64)
        v[0] = 1
        for k in range(q - 1):
            antilog[k] = v @ self._pows
            v = (mul_g @ v) % p
        assert v[0] == 1 and not v[1:].any(), "generator order is not q-1"
        log = np.full(q, -1, dtype=np.int64)
        log[antilog] = np.arange(q - 1, dtype=np.int64)
        assert (log[1:] >= 0).all(), "antilog table is not a permutation of F_q*"
        return antilog, log

    def _build_trace_table(self) -> np.ndarray:
        # Tr(x) = sum of the m Frobenius images, added coefficient-wise
        acc = self._digits.astype(np.int64).copy()
        cur = np.arange(self.q, dtype=np.int64)
        for _ in range(self.m - 1):
            cur = self.frobenius(cur)
            acc += self._digits[cur]
        acc %= self.p
        assert not acc[:, 1:].any(), "trace landed outside the prime subfield"
        return acc[:, 0].astype(np.int16)

    # -- scalar arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        s = (self._digits[a] + self._digits[b]) % self.p
        return int(s.astype(np.int64) @ self._pows)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, int(self.neg_table[b]))

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.antilog[(self.log[a] + self.log[b]) % (self.q - 1)])

    def square(self, a: int) -> int:
        return int(self.square_table[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return int(self.antilog[(-self.log[a]) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 to a negative power in F_q")
            return 0
        return int(self.antilog[(int(self.log[a]) * e) % (self.q - 1)])

    def trace(self, x: int) -> int:
        """Absolute trace Tr(x) = x + x^p + ... + x^(p^(m-1)), as a value in [0, p)."""
        return int(self.trace_table[x])

    def quad_char(self, x: int) -> int:
        """Quadratic character: 0 at 0, else x^((q-1)/2) mapped onto {+1, -1}."""
        if x == 0:
            return 0
        h = self.pow(x, (self.q - 1) // 2)
        if h == 1:
            return 1
        assert h == self.neg_table[1]
        return -1

    def element_digits(self, x: int) -> tuple[int, ...]:
        """Coefficient vector of x, constant term first, length m."""
        return tuple(int(c) for c in self._digits[x])

    def element_from_digits(self, digits: Sequence[int]) -> int:
        return sum((c % self.p) * self.p ** i for i, c in enumerate(digits))

    # -- vectorized kernels ---------------------------------------------------

    def frobenius(self, xs: np.ndarray) -> np.ndarray:
        """x -> x^p applied to an array of canonical indices."""
        xs = np.asarray(xs, dtype=np.int64)
        out = np.zeros_like(xs)
        nz = xs != 0
        out[nz] = self.antilog[(self.log[xs[nz]] * self.p) % (self.q - 1)]
        return out

    @cached_property
    def square_table(self) -> np.ndarray:
        out = np.zeros(self.q, dtype=np.int64)
        out[self.antilog] = self.antilog[(2 * np.arange(self.q - 1)) % (self.q - 1)]
        return out

    @cached_property
    def quad_char_table(self) -> np.ndarray:
        qc = np.zeros(self.q, dtype=np.int8)
        ks = np.arange(self.q - 1)
        qc[self.antilog] = np.where(ks % 2 == 0, 1, -1).astype(np.int8)
        return qc

    @cached_property
    def trace_by_exponent(self) -> np.ndarray:
        """tr(g^k) for k = 0 .. q-2."""
        return self.trace_table[self.antilog]

    @cached_property
    def trace_x2(self) -> np.ndarray:
        """tr(x^2) for every index x."""
        return self.trace_table[self.square_table]

    @cached_property
    def trace_x2_plus_x(self) -> np.ndarray:
        """tr(x^2 + x) for every index x (trace is additive)."""
        return ((self.trace_x2.astype(np.int64) + self.trace_table) % self.p).astype(np.int16)

    def trace_mul_all(self, b: int) -> np.ndarray:
        """tr(b*x) for every index x, as one array."""
        out = np.zeros(self.q, dtype=np.int16)
        if b != 0:
            out[self.antilog] = np.roll(self.trace_by_exponent, -int(self.log[b]))
        return out

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={list(self.modulus)})"


def build_field(p: int, m: int, max_q: int = DEFAULT_MAX_Q,
                modulus: Sequence[int] | None = None) -> FieldCtx:
    """Construct F_(p^m), with the smallest irreducible modulus by default."""
    return FieldCtx(p, m, max_q=max_q, modulus=modulus)


@functools.lru_cache(maxsize=None)
def field(p: int, m: int, max_q: int = DEFAULT_MAX_Q) -> FieldCtx:
    """Shared cache of default-modulus fields (oracles, CLI and tests)."""
    return build_field(p, m, max_q=max_q)
