"""Truncated integer power series with optional closed rational form.

A GradedSeries records graded dimensions a_0, ..., a_N.  The closed form, when
present, is a pair (numerator coefficient list, denominator exponent list)
standing for  P(t) / prod_i (1 - t^{e_i}); construction verifies that its
expansion matches the coefficient list.
"""

from __future__ import annotations

import json


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_substitute_power(a, m):
    out = [0] * ((len(a) - 1) * m + 1) if a else []
    for i, x in enumerate(a):
        out[i * m] = x
    return out


def geometric(m):
    """1 + t + ... + t^(m-1) as a coefficient list."""
    return [1] * m


def _expand_coeffs(numerator, den_exponents, N):
    coeffs = list(numerator[:N + 1]) + [0] * max(0, N + 1 - len(numerator))
    for e in den_exponents:
        if e <= 0:
            raise ValueError("denominator exponents must be positive")
        for j in range(e, N + 1):
            coeffs[j] += coeffs[j - e]
    return coeffs


def expand_rational(numerator, den_exponents, N) -> "GradedSeries":
    """Truncated expansion of numerator / prod (1 - t^e) to degree N."""
    coeffs = _expand_coeffs(numerator, den_exponents, N)
    return GradedSeries(coeffs, closed=(poly_trim(numerator), sorted(den_exponents)))


class GradedSeries:
    def __init__(self, coeffs, closed=None):
        self.coeffs = [int(c) for c in coeffs]
        self.closed = None
        if closed is not None:
            num, dens = closed
            self.closed = (poly_trim(num), sorted(dens))
            exp = _expand_coeffs(self.closed[0], self.closed[1], len(self.coeffs) - 1)
            if exp != self.coeffs:
                raise ValueError("closed form does not match coefficients")

    @property
    def truncation(self):
        return len(self.coeffs) - 1

    def __getitem__(self, d):
        return self.coeffs[d] if 0 <= d <= self.truncation else 0

    def __eq__(self, other):
        if isinstance(other, GradedSeries):
            return self.coeffs == other.coeffs
        return self.coeffs == list(other)

    def matches(self, other, upto=None) -> bool:
        """Coefficientwise agreement to min truncation (or to `upto`)."""
        n = min(self.truncation, other.truncation if isinstance(other, GradedSeries) else len(other) - 1)
        if upto is not None:
            n = min(n, upto)
        for d in range(n + 1):
            if self[d] != (other[d] if isinstance(other, GradedSeries) else other[d]):
                return False
        return True

    def total(self):
        return sum(self.coeffs)

    def top_degree(self):
        """Largest degree with a nonzero coefficient (-1 if identically 0)."""
        for d in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[d]:
                return d
        return -1

    def is_eventually_zero(self):
        """True if the tail of the stored window is zero (finite-dimensional
        as far as this truncation can tell)."""
        return self.coeffs and self.coeffs[-1] == 0

    def substitute_power(self, q, N=None):
        N = N if N is not None else self.truncation * q
        out = [0] * (N + 1)
        for i, c in enumerate(self.coeffs):
            if i * q <= N:
                out[i * q] = c
        return GradedSeries(out)

    def mul_poly(self, poly, N=None):
        prod = poly_mul(self.coeffs, poly)
        N = N if N is not None else self.truncation
        prod = prod[:N + 1] + [0] * max(0, N + 1 - len(prod))
        return GradedSeries(prod)

    def to_json_obj(self):
        obj = {"coeffs": self.coeffs}
        if self.closed:
            obj["closed"] = {"numerator": self.closed[0], "denominator": self.closed[1]}
        return obj

    def to_json(self):
        return json.dumps(self.to_json_obj(), sort_keys=True)

    def __str__(self):
        trimmed = poly_trim(self.coeffs)
        if not trimmed:
            return "0"
        parts = []
        for d, c in enumerate(trimmed):
            if not c:
                continue
            if d == 0:
                parts.append(str(c))
            elif d == 1:
                parts.append("t" if c == 1 else f"{c}t")
            else:
                parts.append(f"t^{d}" if c == 1 else f"{c}t^{d}")
        s = " + ".join(parts)
        if len(trimmed) == len(self.coeffs):
            s += " + O(t^%d)" % (self.truncation + 1)
        return s

    __repr__ = __str__
