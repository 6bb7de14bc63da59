"""Exact arithmetic in finite fields F_{p^k} carrying a distinguished root of unity.

A field element is a plain int in ``range(p**k)``: the value ``sum(d_i * p**i)``
stands for the residue class ``sum(d_i * t**i)`` modulo the defining polynomial.
Scalar operations here are pure Python; bulk matrix work lives in
:mod:`cherednik.linalg`, which unpacks the same encoding into per-digit numpy
planes and recombines through the structure tensor exposed by :meth:`GF.tensor`.
"""

from __future__ import annotations

import json
import random
from functools import lru_cache

from .errors import CharacteristicDividesM, NotPrime

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all 64-bit integers."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
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


# -- dense univariate arithmetic over F_p (coefficient tuples, little-endian) --

def _ptrim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(tuple(out))


def _pmod(a, f, p):
    # f monic
    a = list(a)
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c:
            for j in range(df):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
        a[i] = 0
    return _ptrim(tuple(x % p for x in a))


def _ppowmod(a, e, f, p):
    r = (1,)
    a = _pmod(a, f, p)
    while e:
        if e & 1:
            r = _pmod(_pmul(r, a, p), f, p)
        a = _pmod(_pmul(a, a, p), f, p)
        e >>= 1
    return r


def _pgcd(a, b, p):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        bm = tuple(c * inv % p for c in b)
        a, b = b, _prem(a, bm, p)
    return a


def _prem(a, bm, p):
    # remainder of a by monic bm
    a = list(a)
    db = len(bm) - 1
    while len(_ptrim(tuple(a))) - 1 >= db and _ptrim(tuple(a)):
        a = list(_ptrim(tuple(a)))
        da = len(a) - 1
        if da < db:
            break
        c = a[da]
        for j in range(db + 1):
            a[da - db + j] = (a[da - db + j] - c * bm[j]) % p
    return _ptrim(tuple(x % p for x in a))


def _is_irreducible(f, p):
    """Divisor-degree test: f of degree k is irreducible over F_p iff
    x^(p^k) = x mod f and gcd(x^(p^(k/l)) - x, f) = 1 for every prime l | k."""
    k = len(f) - 1
    x = (0, 1)
    xq = _ppowmod(x, p ** k, f, p)
    if _ptrim(tuple((a - b) % p for a, b in _zippad(xq, x))) != ():
        return False
    for ell in prime_factors(k):
        xe = _ppowmod(x, p ** (k // ell), f, p)
        diff = tuple((a - b) % p for a, b in _zippad(xe, x))
        if len(_pgcd(diff, f, p)) > 1:
            return False
    return True


def _zippad(a, b):
    n = max(len(a), len(b))
    return zip(a + (0,) * (n - len(a)), b + (0,) * (n - len(b)))


class GF:
    """The field F_{p^k}, with an element ``xi`` of multiplicative order ``m``.

    Elements are ints in ``range(p**k)`` (base-p digit encoding of the
    polynomial representative). All operations are exact.
    """

    def __init__(self, p, k=1, modulus=None, m=1, xi=None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.k = k
        self.q = p ** k
        self.m = m
        if modulus is None:
            if k != 1:
                raise ValueError("extension fields need an explicit modulus")
            modulus = (0, 1)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if k > 1 and not _is_irreducible(modulus, p):
            raise ValueError("modulus is reducible")
        self.modulus = modulus
        # reduction rows: digits of t^e mod modulus for e = k .. 2k-2
        red = []
        cur = list(modulus[:k])
        cur = [(-c) % p for c in cur]  # t^k = -(lower part)
        red.append(tuple(cur))
        for _ in range(k - 2):
            cur = [0] + cur
            hi = cur.pop()
            if hi:
                cur = [(c + hi * r) % p for c, r in zip(cur, red[0])]
            red.append(tuple(cur))
        self._red = red
        self.zero = 0
        self.one = 1
        if xi is None:
            xi = self._find_xi(m)
        if self.pow(xi, m) != 1 or any(self.pow(xi, m // ell) == 1 for ell in prime_factors(m)):
            raise ValueError("xi does not have exact order m")
        self.xi = xi
        self._roots = [1]
        for _ in range(m - 1):
            self._roots.append(self.mul(self._roots[-1], xi))

    # -- encoding -----------------------------------------------------------

    def digits(self, a):
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(a % p)
            a //= p
        return tuple(out)

    def undigits(self, ds):
        v = 0
        for d in reversed(ds):
            v = v * self.p + (d % self.p)
        return v

    def from_int(self, n):
        """Embed an ordinary integer through the prime subfield."""
        return n % self.p

    def root(self, j):
        """xi**j for any integer j."""
        return self._roots[j % self.m]

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        return self.undigits(tuple((x + y) % p for x, y in zip(self.digits(a), self.digits(b))))

    def sub(self, a, b):
        if self.k == 1:
            return (a - b) % self.p
        p = self.p
        return self.undigits(tuple((x - y) % p for x, y in zip(self.digits(a), self.digits(b))))

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        return self.undigits(tuple((-x) % p for x in self.digits(a)))

    def mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        p, k = self.p, self.k
        da, db = self.digits(a), self.digits(b)
        conv = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] += x * y
        out = [c % p for c in conv[:k]]
        for e in range(k, 2 * k - 1):
            c = conv[e] % p
            if c:
                row = self._red[e - k]
                for j in range(k):
                    out[j] = (out[j] + c * row[j]) % p
        return self.undigits(tuple(out))

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def element_order(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        n = self.q - 1
        for ell in prime_factors(n):
            while n % ell == 0 and self.pow(a, n // ell) == 1:
                n //= ell
        return n

    def frobenius(self, a):
        return self.pow(a, self.p)

    def random_nonzero(self, rng: random.Random):
        return rng.getrandbits(64) % (self.q - 1) + 1

    # -- construction helpers ------------------------------------------------

    def _find_xi(self, m):
        if (self.q - 1) % m != 0:
            raise ValueError("field has no element of order m")
        for a in range(1, self.q):
            if self.element_order(a) == m:
                return a
        raise AssertionError("unreachable: cyclic group has elements of every divisor order")

    def to_str(self, a):
        if self.k == 1:
            return str(a)
        ds = self.digits(a)
        parts = []
        for i, d in enumerate(ds):
            if d == 0:
                continue
            if i == 0:
                parts.append(str(d))
            elif i == 1:
                parts.append(f"{d}*t" if d != 1 else "t")
            else:
                parts.append(f"{d}*t^{i}" if d != 1 else f"t^{i}")
        return "+".join(parts) if parts else "0"

    def __repr__(self):
        return f"GF(p={self.p}, k={self.k}, m={self.m})"

    def __eq__(self, other):
        return (isinstance(other, GF) and self.p == other.p and self.k == other.k
                and self.modulus == other.modulus and self.m == other.m and self.xi == other.xi)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus, self.m, self.xi))

    # -- serialization -------------------------------------------------------

    def to_json(self) -> str:
        spec = {"p": self.p, "k": self.k, "modulus": list(self.modulus),
                "m": self.m, "xi": list(self.digits(self.xi))}
        return json.dumps(spec, sort_keys=True)

    @classmethod
    def from_json(cls, s: str) -> "GF":
        d = json.loads(s)
        p = d["p"]
        xi_digits = tuple(d["xi"])
        xi = 0
        for dig in reversed(xi_digits):
            xi = xi * p + (dig % p)
        return cls(p, d["k"], tuple(d["modulus"]), d["m"], xi=xi)

    def tensor(self):
        """Structure tensor T with T[i,j] = digits of t^(i+j) mod modulus.

        Used by the numpy matrix engine: the product of elements with digit
        vectors a, b has digits sum_{i,j} a_i b_j T[i,j,:].
        """
        import numpy as np
        k = self.k
        T = np.zeros((k, k, k), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                e = i + j
                if e < k:
                    T[i, j, e] = 1
                else:
                    T[i, j, :] = self._red[e - k]
        return T


@lru_cache(maxsize=None)
def build_field(p: int, m: int) -> GF:
    """Smallest field of characteristic p containing a root of unity of exact
    order m, together with the least such root in the digit-encoding order.

    The extension degree k is minimal with m | p^k - 1.  For k > 1 the
    modulus is found by seeded random search (seed derived from (p, k), so
    the result is reproducible and the modulus itself is stored).
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise ValueError("m must be positive")
    if m % p == 0:
        raise CharacteristicDividesM(f"p={p} divides m={m}")
    k = 1
    while (p ** k - 1) % m != 0:
        k += 1
    if k == 1:
        return GF(p, 1, (0, 1), m)
    rng = random.Random(p * 1000003 + k)
    while True:
        coeffs = tuple(rng.randrange(p) for _ in range(k)) + (1,)
        if _is_irreducible(coeffs, p):
            return GF(p, k, coeffs, m)
