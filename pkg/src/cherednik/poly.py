"""Sparse multivariate polynomials over an exact coefficient domain.

A domain is anything exposing zero/one/add/sub/neg/mul/inv/is_zero/eq/from_int
(the finite fields of :mod:`cherednik.gf` and the rational-function fields of
:mod:`cherednik.ratfunc` both do). Polynomials are dicts from exponent tuples
to nonzero coefficients.

The monomial order is graded lexicographic and fixed globally: monomials are
compared by total degree first, then by descending lexicographic comparison of
exponent tuples, so within one degree x1^d comes first.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DivisionFailure, InhomogeneousGenerator, NonHomogeneous


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, d: int) -> tuple[tuple[int, ...], ...]:
    """All exponent tuples of total degree d, in descending graded-lex order."""
    if nvars == 0:
        return ((),) if d == 0 else ()
    if nvars == 1:
        return ((d,),)
    out = []
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - e):
            out.append((e,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(nvars: int, d: int) -> dict:
    return {m: i for i, m in enumerate(monomials_of_degree(nvars, d))}


def mono_key(exps):
    """Sort key realizing the global order (largest first when reverse=True)."""
    return (sum(exps), exps)


class PolyRing:
    """Polynomial ring over a coefficient domain with named variables."""

    def __init__(self, domain, names):
        self.domain = domain
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.zero = Poly(self, {})
        self.one = Poly(self, {(0,) * self.nvars: domain.one})

    def var(self, i):
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): self.domain.one})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=None):
        c = self.domain.one if coeff is None else coeff
        if self.domain.is_zero(c):
            return self.zero
        return Poly(self, {tuple(exps): c})

    def const(self, c):
        if self.domain.is_zero(c):
            return self.zero
        return Poly(self, {(0,) * self.nvars: c})

    def from_int(self, n):
        return self.const(self.domain.from_int(n))

    def from_terms(self, terms):
        d = {}
        dom = self.domain
        for exps, c in terms:
            e = tuple(exps)
            c0 = d.get(e)
            c = dom.add(c0, c) if c0 is not None else c
            if dom.is_zero(c):
                d.pop(e, None)
            else:
                d[e] = c
        return Poly(self, d)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.domain == other.domain and self.names == other.names

    def __hash__(self):
        return hash((self.domain, self.names))

    def __repr__(self):
        return f"PolyRing({self.domain!r}, {self.names})"


class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self):
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            raise NonHomogeneous(f"degrees {sorted(degs)}")
        return degs.pop() if degs else -1

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: mono_key(kv[0]), reverse=True)

    def leading(self):
        """(exponent, coeff) of the leading term in the global order."""
        e = max(self.terms, key=mono_key)
        return e, self.terms[e]

    def __add__(self, other):
        dom = self.ring.domain
        out = dict(self.terms)
        for e, c in other.terms.items():
            c0 = out.get(e)
            s = dom.add(c0, c) if c0 is not None else c
            if dom.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return Poly(self.ring, out)

    def __sub__(self, other):
        dom = self.ring.domain
        out = dict(self.terms)
        for e, c in other.terms.items():
            c0 = out.get(e)
            s = dom.sub(c0, c) if c0 is not None else dom.neg(c)
            if dom.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return Poly(self.ring, out)

    def __neg__(self):
        dom = self.ring.domain
        return Poly(self.ring, {e: dom.neg(c) for e, c in self.terms.items()})

    def scale(self, c):
        dom = self.ring.domain
        if dom.is_zero(c):
            return self.ring.zero
        return Poly(self.ring, {e: dom.mul(c0, c) for e, c0 in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        dom = self.ring.domain
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = dom.mul(c1, c2)
                c0 = out.get(e)
                s = dom.add(c0, c) if c0 is not None else c
                if dom.is_zero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        r = self.ring.one
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def __eq__(self, other):
        return isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(self.sorted_terms())))

    def shift(self, exps):
        """Multiply by the monomial with the given exponents."""
        return Poly(self.ring, {tuple(a + b for a, b in zip(e, exps)): c
                                for e, c in self.terms.items()})

    def deriv(self, i):
        dom = self.ring.domain
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            c2 = dom.mul(c, dom.from_int(e[i]))
            if dom.is_zero(c2):
                continue
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = c2
        return Poly(self.ring, out)

    def substitute_power(self, q):
        """x_i -> x_i^q for every variable."""
        return Poly(self.ring, {tuple(q * a for a in e): c for e, c in self.terms.items()})

    def constant_coeff(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.domain.zero)

    def slice_coords(self, d):
        """Coefficient row in the degree-d monomial basis (global order)."""
        idx = monomial_index(self.ring.nvars, d)
        row = [self.ring.domain.zero] * len(idx)
        for e, c in self.terms.items():
            row[idx[e]] = c
        return row

    def map_coefficients(self, fn, new_domain=None):
        ring = self.ring if new_domain is None else PolyRing(new_domain, self.ring.names)
        dom = ring.domain
        out = {}
        for e, c in self.terms.items():
            c2 = fn(c)
            if not dom.is_zero(c2):
                out[e] = c2
        return Poly(ring, out)

    def divide_linear(self, a, b=None, u=None):
        """Exact division by the linear form x_a (b is None) or x_a - u*x_b.

        Performs synthetic division in x_a and raises DivisionFailure if a
        nonzero remainder is left, which would signal a convention bug in a
        divided-difference computation.
        """
        dom = self.ring.domain
        if b is None:
            out = {}
            for e, c in self.terms.items():
                if e[a] == 0:
                    raise DivisionFailure("term not divisible by variable")
                e2 = list(e)
                e2[a] -= 1
                out[tuple(e2)] = c
            return Poly(self.ring, out)
        # group terms by exponent of x_a
        by_dega = {}
        for e, c in self.terms.items():
            by_dega.setdefault(e[a], {})[e] = c
        if not by_dega:
            return self.ring.zero
        maxd = max(by_dega)
        quot = {}
        carry = {}  # coefficient poly (terms without x_a exponent tracked separately)
        for j in range(maxd - 1, -1, -1):
            # quotient coefficient at x_a^j: f_{j+1} + u * x_b * h_{j+1}
            cur = {}
            for e, c in by_dega.get(j + 1, {}).items():
                e2 = list(e)
                e2[a] = j
                cur[tuple(e2)] = c
            for e, c in carry.items():
                e2 = list(e)
                e2[a] = j
                e2[b] += 1
                c2 = dom.mul(c, u)
                key = tuple(e2)
                c0 = cur.get(key)
                s = dom.add(c0, c2) if c0 is not None else c2
                if dom.is_zero(s):
                    cur.pop(key, None)
                else:
                    cur[key] = s
            for e, c in cur.items():
                quot[e] = c
            carry = cur
        # remainder = f_0 + u x_b * h_0
        rem = dict(by_dega.get(0, {}))
        for e, c in carry.items():
            e2 = list(e)
            e2[a] = 0
            e2[b] += 1
            c2 = dom.mul(c, u)
            key = tuple(e2)
            c0 = rem.get(key)
            s = dom.add(c0, c2) if c0 is not None else c2
            if dom.is_zero(s):
                rem.pop(key, None)
            else:
                rem[key] = s
        if rem:
            raise DivisionFailure("nonzero remainder in linear-form division")
        return Poly(self.ring, quot)

    def evaluate(self, values):
        """Full evaluation at a point (list of domain elements)."""
        dom = self.ring.domain
        total = dom.zero
        for e, c in self.terms.items():
            t = c
            for i, a in enumerate(e):
                for _ in range(a):
                    t = dom.mul(t, values[i])
            total = dom.add(total, t)
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        dom = self.ring.domain
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            cs = dom.to_str(c) if hasattr(dom, "to_str") else str(c)
            for i, a in enumerate(e):
                if a == 1:
                    factors.append(self.ring.names[i])
                elif a > 1:
                    factors.append(f"{self.ring.names[i]}^{a}")
            if not factors:
                parts.append(cs)
            elif cs == "1":
                parts.append("*".join(factors))
            else:
                parts.append(f"({cs})*" + "*".join(factors) if ("+" in cs or "-" in cs[1:]) else f"{cs}*" + "*".join(factors))
        return " + ".join(parts)

    __repr__ = __str__


class FreeSpace:
    """Graded free module over a PolyRing with basis labels and degree shifts.

    A vector is a tuple of Polys, one per basis element; vectors used in slice
    computations are homogeneous: component t has polynomial degree
    d - basis_degrees[t].
    """

    def __init__(self, ring, basis_degrees=(0,), labels=None, rep=None):
        self.ring = ring
        self.basis_degrees = tuple(basis_degrees)
        self.rank = len(self.basis_degrees)
        self.labels = tuple(labels) if labels else tuple(f"u{i}" for i in range(self.rank))
        self.rep = rep  # optional GradedRep acting on the basis

    def zero_vector(self):
        return FreeVector(self, (self.ring.zero,) * self.rank)

    def vector(self, comps):
        comps = tuple(comps)
        if len(comps) != self.rank:
            raise InhomogeneousGenerator("component count mismatch")
        return FreeVector(self, comps)

    def unit(self, t, poly=None):
        comps = [self.ring.zero] * self.rank
        comps[t] = self.ring.one if poly is None else poly
        return FreeVector(self, tuple(comps))

    def slice_layout(self, d):
        """Per-component monomial lists for the degree-d slice, with offsets.

        Returns (total_dim, [(t, offset, monomials)]).  Columns are
        component-major: component t occupies offset..offset+len(monos).
        """
        layout = []
        off = 0
        for t, b in enumerate(self.basis_degrees):
            if d - b < 0:
                layout.append((t, off, ()))
                continue
            monos = monomials_of_degree(self.ring.nvars, d - b)
            layout.append((t, off, monos))
            off += len(monos)
        return off, layout

    def slice_dim(self, d):
        return self.slice_layout(d)[0]

    def __eq__(self, other):
        return (isinstance(other, FreeSpace) and self.ring == other.ring
                and self.basis_degrees == other.basis_degrees)

    def __hash__(self):
        return hash((self.ring, self.basis_degrees))


class FreeVector:
    __slots__ = ("space", "comps")

    def __init__(self, space, comps):
        self.space = space
        self.comps = comps

    def is_zero(self):
        return all(f.is_zero() for f in self.comps)

    def degree(self):
        """Common homogeneous degree; raises if mixed."""
        degs = set()
        for f, b in zip(self.comps, self.space.basis_degrees):
            if not f.is_zero():
                degs.add(f.homogeneous_degree() + b)
        if len(degs) > 1:
            raise NonHomogeneous(f"vector mixes degrees {sorted(degs)}")
        return degs.pop() if degs else -1

    def __add__(self, other):
        return FreeVector(self.space, tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other):
        return FreeVector(self.space, tuple(a - b for a, b in zip(self.comps, other.comps)))

    def __neg__(self):
        return FreeVector(self.space, tuple(-a for a in self.comps))

    def scale(self, c):
        return FreeVector(self.space, tuple(a.scale(c) for a in self.comps))

    def mul_poly(self, f):
        return FreeVector(self.space, tuple(f * a for a in self.comps))

    def shift(self, exps):
        return FreeVector(self.space, tuple(a.shift(exps) for a in self.comps))

    def slice_coords(self, d):
        """Coordinate row of a homogeneous degree-d vector in the slice basis."""
        dom = self.space.ring.domain
        total, layout = self.space.slice_layout(d)
        row = [dom.zero] * total
        for (t, off, monos) in layout:
            f = self.comps[t]
            if f.is_zero():
                continue
            idx = monomial_index(self.space.ring.nvars, d - self.space.basis_degrees[t])
            for e, c in f.terms.items():
                row[off + idx[e]] = c
        return row

    def __eq__(self, other):
        return isinstance(other, FreeVector) and self.space == other.space and self.comps == other.comps

    def __str__(self):
        parts = []
        for f, lab in zip(self.comps, self.space.labels):
            if not f.is_zero():
                parts.append(f"({f})*{lab}")
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


def vector_from_coords(space, d, row):
    """Inverse of FreeVector.slice_coords."""
    dom = space.ring.domain
    total, layout = space.slice_layout(d)
    comps = []
    for (t, off, monos) in layout:
        terms = []
        for j, e in enumerate(monos):
            c = row[off + j]
            if not dom.is_zero(c):
                terms.append((e, c))
        comps.append(space.ring.from_terms(terms))
    return FreeVector(space, tuple(comps))
