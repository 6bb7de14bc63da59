"""Rational-function parameter fields over a finite field.

Generic Cherednik parameters (c, d, c1, ...) live in K(c, d, ...) where K is
one of the fields from :mod:`cherednik.gf`. Numerators and denominators are
:class:`cherednik.poly.Poly` objects with finite-field coefficients; fractions
are kept in a canonical form (gcd-reduced, monic denominator) so equality is a
plain comparison.

The gcd is a primitive polynomial-remainder-sequence recursion, adequate for
the handful of parameter variables the computations need (at most three).
"""

from __future__ import annotations

import random

from .errors import DenominatorVanishesAtSpecialization, ZeroDenominator
from .poly import Poly, PolyRing, mono_key


def _used_vars(f: Poly):
    used = set()
    for e in f.terms:
        for i, a in enumerate(e):
            if a:
                used.add(i)
    return used


def _to_univar(f: Poly, v: int):
    """View f as univariate in variable v: dict degree -> coefficient Poly."""
    out = {}
    for e, c in f.terms.items():
        d = e[v]
        e2 = list(e)
        e2[v] = 0
        out.setdefault(d, []).append((tuple(e2), c))
    return {d: f.ring.from_terms(ts) for d, ts in out.items()}


def _from_univar(ring, v, coeffs):
    terms = []
    for d, poly in coeffs.items():
        for e, c in poly.terms.items():
            e2 = list(e)
            e2[v] = d
            terms.append((tuple(e2), c))
    return ring.from_terms(terms)


def exact_div(f: Poly, d: Poly) -> Poly:
    """Exact division of multivariate polynomials; raises if not exact."""
    ring = f.ring
    dom = ring.domain
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    le, lc = d.leading()
    lc_inv = dom.inv(lc)
    rem = f
    quot_terms = []
    while not rem.is_zero():
        re, rc = rem.leading()
        qe = tuple(a - b for a, b in zip(re, le))
        if any(a < 0 for a in qe):
            raise ValueError("inexact polynomial division")
        qc = dom.mul(rc, lc_inv)
        quot_terms.append((qe, qc))
        rem = rem - d.shift(qe).scale(qc)
    return ring.from_terms(quot_terms)


def _prem(f: Poly, g: Poly, v: int) -> Poly:
    """Pseudo-remainder of f by g with respect to variable v."""
    ring = f.ring
    fu = _to_univar(f, v)
    gu = _to_univar(g, v)
    dg = max(gu)
    lg = gu[dg]
    while fu and max(fu) >= dg:
        df = max(fu)
        lf = fu[df]
        # f <- lg * f - lf * x_v^(df-dg) * g
        newf = {}
        for d, c in fu.items():
            newf[d] = lg * c
        for d, c in gu.items():
            dd = d + df - dg
            t = lf * c
            newf[dd] = (newf.get(dd, ring.zero)) - t
        fu = {d: c for d, c in newf.items() if not c.is_zero()}
    return _from_univar(ring, v, fu)


def _content(f: Poly, v: int) -> Poly:
    coeffs = list(_to_univar(f, v).values())
    g = coeffs[0]
    for c in coeffs[1:]:
        g = poly_gcd(g, c)
        if g.degree() == 0:
            break
    return g


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd of multivariate polynomials over a field."""
    ring = f.ring
    dom = ring.domain
    if f.is_zero():
        r = g
    elif g.is_zero():
        r = f
    else:
        used = _used_vars(f) | _used_vars(g)
        if not used:
            r = ring.one
        else:
            v = max(used)
            cf, cg = _content(f, v), _content(g, v)
            pf, pg = exact_div(f, cf), exact_div(g, cg)
            # primitive PRS in variable v
            if max(_to_univar(pf, v)) < max(_to_univar(pg, v)):
                pf, pg = pg, pf
            while not pg.is_zero():
                r = _prem(pf, pg, v)
                if not r.is_zero():
                    r = exact_div(r, _content(r, v))
                pf, pg = pg, r
            r = poly_gcd(cf, cg) * pf
    if r.is_zero():
        return r
    _, lc = r.leading()
    return r.scale(dom.inv(lc))


class Frac:
    """A normalized rational function num/den."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den, normalized=False):
        if den.is_zero():
            raise ZeroDenominator("zero denominator")
        if not normalized:
            num, den = _normalize(num, den)
        self.field = field
        self.num = num
        self.den = den

    def is_constant(self):
        return self.num.degree() <= 0 and self.den.degree() <= 0

    def constant_value(self):
        base = self.field.base
        n = self.num.constant_coeff()
        d = self.den.constant_coeff()
        return base.mul(n, base.inv(d))

    def __eq__(self, other):
        return isinstance(other, Frac) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(self.num.sorted_terms()), tuple(self.den.sorted_terms())))

    def __str__(self):
        if self.den == self.den.ring.one:
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def _normalize(num: Poly, den: Poly):
    ring = num.ring
    dom = ring.domain
    if num.is_zero():
        return ring.zero, ring.one
    g = poly_gcd(num, den)
    if g.degree() > 0 or g.terms != ring.one.terms:
        num = exact_div(num, g)
        den = exact_div(den, g)
    _, lc = den.leading()
    if not dom.eq(lc, dom.one):
        inv = dom.inv(lc)
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


class FracField:
    """Field of rational functions in named parameters over a finite field.

    Implements the coefficient-domain protocol, so x-polynomials and matrices
    can carry symbolic parameter entries.
    """

    def __init__(self, base, names):
        self.base = base
        self.names = tuple(names)
        self.ring = PolyRing(base, self.names)
        self.zero = Frac(self, self.ring.zero, self.ring.one, normalized=True)
        self.one = Frac(self, self.ring.one, self.ring.one, normalized=True)

    def var(self, name) -> Frac:
        i = self.names.index(name)
        return Frac(self, self.ring.var(i), self.ring.one, normalized=True)

    def const(self, c) -> Frac:
        return Frac(self, self.ring.const(c), self.ring.one, normalized=True)

    def from_int(self, n):
        return self.const(self.base.from_int(n))

    def add(self, a, b):
        return Frac(self, a.num * b.den + b.num * a.den, a.den * b.den)

    def sub(self, a, b):
        return Frac(self, a.num * b.den - b.num * a.den, a.den * b.den)

    def neg(self, a):
        return Frac(self, -a.num, a.den, normalized=True)

    def mul(self, a, b):
        return Frac(self, a.num * b.num, a.den * b.den)

    def inv(self, a):
        if a.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return Frac(self, a.den, a.num)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a.num.is_zero()

    def eq(self, a, b):
        return a == b

    def pow(self, a, e):
        r = self.one
        b = a if e >= 0 else self.inv(a)
        e = abs(e)
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def to_str(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, FracField) and self.base == other.base and self.names == other.names

    def __hash__(self):
        return hash((self.base, self.names))

    def __repr__(self):
        return f"FracField({self.base!r}, {self.names})"


def normalize_param(a: Frac) -> Frac:
    """Return the canonical form of a (fractions are kept normalized, so this
    re-normalizes defensively and is the identity on well-formed inputs)."""
    return Frac(a.field, a.num, a.den)


def draw_assignments(field, names, seed) -> dict:
    """Deterministic nonzero parameter values for the given seed.

    Values are drawn in the order the names are listed, from a stdlib
    Mersenne stream, so runs are reproducible across platforms.
    """
    rng = random.Random(seed)
    return {name: field.random_nonzero(rng) for name in names}


def specialize_params(a: Frac, seed) -> tuple[int, int]:
    """Evaluate a at the seed-determined parameter point.

    Returns (value, seed); raises DenominatorVanishesAtSpecialization if the
    denominator vanishes there (caller should redraw with another seed).
    """
    field = a.field
    assign = draw_assignments(field.base, field.names, seed)
    values = [assign[n] for n in field.names]
    den = a.den.evaluate(values)
    if field.base.is_zero(den):
        raise DenominatorVanishesAtSpecialization(str(a))
    num = a.num.evaluate(values)
    return field.base.mul(num, field.base.inv(den)), seed
