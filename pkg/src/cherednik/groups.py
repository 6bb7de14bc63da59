"""The complex reflection groups G(m,r,n) realized by exact monomial matrices.

An element is stored as (perm, colors) and acts on the polynomial variables by
x_i -> xi^{colors[i]} * x_{perm[i]}, where xi is the distinguished root of
unity of the group's field.  Membership in G(m,r,n) is the constraint
sum(colors) = 0 mod r.  Elements are never stored as dense matrices.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import InvalidParameters
from .gf import GF, build_field
from .poly import Poly, FreeVector


class GroupElement:
    __slots__ = ("perm", "colors")

    def __init__(self, perm, colors):
        self.perm = tuple(perm)
        self.colors = tuple(colors)

    @property
    def n(self):
        return len(self.perm)

    def __mul__(self, other):
        """Composition: (g*h) acts as first h, then g."""
        ph, ch = other.perm, other.colors
        pg, cg = self.perm, self.colors
        perm = tuple(pg[ph[i]] for i in range(len(pg)))
        colors = tuple(ch[i] + cg[ph[i]] for i in range(len(pg)))
        return GroupElement(perm, colors)

    def inverse(self):
        n = len(self.perm)
        inv = [0] * n
        for i, j in enumerate(self.perm):
            inv[j] = i
        colors = tuple(-self.colors[inv[i]] for i in range(n))
        return GroupElement(tuple(inv), colors)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.perm)) and all(c == 0 for c in self.colors)

    def perm_sign(self):
        seen = [False] * len(self.perm)
        sign = 1
        for i in range(len(self.perm)):
            if seen[i]:
                continue
            ln = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self.perm[j]
                ln += 1
            if ln % 2 == 0:
                sign = -sign
        return sign

    def key(self, m):
        return (self.perm, tuple(c % m for c in self.colors))

    def __repr__(self):
        return f"GroupElement(perm={self.perm}, colors={self.colors})"


class Reflection:
    """A reflection with its root data and conjugacy-class label.

    alpha is the linear form spanning the image of (1 - s): either
    x_a - xi^k x_b (swap type, stored as (a, b, k)) or x_a (diagonal type,
    stored as (a, None, e) with s: x_a -> xi^e x_a).
    """

    __slots__ = ("element", "a", "b", "k", "label")

    def __init__(self, element, a, b, k, label):
        self.element = element
        self.a = a
        self.b = b
        self.k = k
        self.label = label

    def pairing_y(self, i, group) -> int:
        """(y_i, alpha_s): coefficient of x_i in alpha."""
        field = group.field
        if i == self.a:
            return field.one
        if self.b is not None and i == self.b:
            return field.neg(group.root(self.k))
        return field.zero

    def covector_coeff(self, j, group) -> int:
        """(x_j, alpha_s^vee), read off from (1-s)x = (alpha^vee, x) alpha."""
        field = group.field
        if self.b is None:
            if j == self.a:
                return field.sub(field.one, group.root(self.k))
            return field.zero
        if j == self.a:
            return field.one
        if j == self.b:
            return field.neg(group.root(-self.k))
        return field.zero

    def __repr__(self):
        if self.b is None:
            return f"t[{self.a}]^(xi^{self.k}) ({self.label})"
        return f"s[{self.a},{self.b}]^{self.k} ({self.label})"


def swap_reflection(n, a, b, k, m, label=None):
    """s with x_a -> xi^k x_b, x_b -> xi^{-k} x_a."""
    perm = list(range(n))
    perm[a], perm[b] = b, a
    colors = [0] * n
    colors[a] = k % m
    colors[b] = (-k) % m
    return Reflection(GroupElement(perm, colors), a, b, k % m, label)


def diag_reflection(n, a, e, m, label=None):
    """t with x_a -> xi^e x_a (e a multiple of r)."""
    colors = [0] * n
    colors[a] = e % m
    return Reflection(GroupElement(range(n), colors), a, None, e % m, label)


class GroupSpec:
    """G(m,r,n) over a field containing a root of unity of order m.

    The field may carry a root of larger order M with m | M; the group then
    uses xi_M^(M/m).  This lets G(m,r,n) and G(r,r,n) share one field during
    degeneration checks.
    """

    def __init__(self, m, r, n, field: GF | None = None, p: int | None = None):
        if m < 1 or n < 1 or r < 1 or m % r != 0:
            raise InvalidParameters(f"need r | m, got (m,r,n)=({m},{r},{n})")
        if field is None:
            if p is None:
                raise InvalidParameters("give a field or a characteristic")
            field = build_field(p, m)
        if field.m % m != 0:
            raise InvalidParameters("field has no root of unity of order m")
        self.m, self.r, self.n = m, r, n
        self.q = m // r
        self.field = field
        self._scale = field.m // m  # xi_group = field.xi ** _scale

    def root(self, j):
        """xi^j for the group's order-m root xi."""
        return self.field.root(j * self._scale)

    @property
    def order(self):
        import math
        return self.m ** self.n * math.factorial(self.n) // self.r

    def identity(self):
        return GroupElement(range(self.n), (0,) * self.n)

    def contains(self, g: GroupElement) -> bool:
        return sum(g.colors) % self.r == 0 and all(0 <= c < self.m for c in g.colors)

    def element(self, perm, colors):
        g = GroupElement(perm, tuple(c % self.m for c in colors))
        if not self.contains(g):
            raise InvalidParameters("colors violate the determinant constraint")
        return g

    def elements(self):
        """All m^n n!/r elements (desk scale only)."""
        out = []
        for perm in itertools.permutations(range(self.n)):
            for colors in itertools.product(range(self.m), repeat=self.n - 1):
                s = sum(colors) % self.r
                for last in range((-s) % self.r, self.m, self.r):
                    out.append(GroupElement(perm, colors + (last,)))
        return out

    def generators(self):
        gens = []
        for i in range(self.n - 1):
            gens.append(swap_reflection(self.n, i, i + 1, 0, self.m).element)
        if self.m > 1 and self.n >= 2:
            gens.append(swap_reflection(self.n, 0, 1, 1, self.m).element)
        if self.q > 1:
            gens.append(diag_reflection(self.n, 0, self.r, self.m).element)
        if self.n == 1 and self.q > 1:
            pass  # diagonal generator already added
        return gens

    # -- reflections ---------------------------------------------------------

    def splits_reflection_classes(self) -> bool:
        """For n = 2 and r even the swap reflections form two classes (k even
        and k odd); otherwise they are a single class."""
        return self.n == 2 and self.r % 2 == 0

    def reflections(self) -> list[Reflection]:
        out = []
        split = self.splits_reflection_classes()
        for a in range(self.n):
            for b in range(a + 1, self.n):
                for k in range(self.m):
                    if split:
                        label = "s+" if k % 2 == 0 else "s-"
                    else:
                        label = "s"
                    rf = swap_reflection(self.n, a, b, k, self.m, label)
                    out.append(rf)
        for k in range(1, self.q):
            for a in range(self.n):
                out.append(diag_reflection(self.n, a, self.r * k, self.m, f"t{k}"))
        return out

    def reflection_class_labels(self) -> list[str]:
        labels = []
        if self.n >= 2:
            labels.extend(["s+", "s-"] if self.splits_reflection_classes() else ["s"])
        labels.extend(f"t{k}" for k in range(1, self.q))
        return labels

    def reflections_by_label(self) -> dict:
        out = {}
        for rf in self.reflections():
            out.setdefault(rf.label, []).append(rf)
        return out

    def brute_force_reflections(self) -> list[GroupElement]:
        """Scan every element for rank(1 - g) = 1; test oracle for the lists."""
        from .linalg import Mat
        out = []
        for g in self.elements():
            if g.is_identity():
                continue
            rows = []
            for i in range(self.n):
                row = [self.field.zero] * self.n
                row[i] = self.field.one
                row[g.perm[i]] = self.field.sub(row[g.perm[i]], self.root(g.colors[i]))
                rows.append(row)
            if Mat.from_rows(self.field, rows).rank() == 1:
                out.append(g)
        return out

    def conjugacy_classes(self):
        """Orbit partition under conjugation; list of (representative, size)."""
        gens = self.generators()
        gens = gens + [g.inverse() for g in gens]
        seen = {}
        classes = []
        for g in self.elements():
            key = g.key(self.m)
            if key in seen:
                continue
            orbit = [g]
            seen[key] = True
            i = 0
            while i < len(orbit):
                h = orbit[i]
                i += 1
                for c in gens:
                    h2 = c * h * c.inverse()
                    k2 = h2.key(self.m)
                    if k2 not in seen:
                        seen[k2] = True
                        orbit.append(h2)
            classes.append((orbit[0], len(orbit)))
        return classes

    def qpower_image(self, g: GroupElement, target: "GroupSpec") -> GroupElement:
        """Image under G(m,r,n) -> G(r,r,n): every entry raised to the q-th
        power, i.e. colors reduced mod r against the order-r root."""
        return GroupElement(g.perm, tuple(c % self.r for c in g.colors))

    def __repr__(self):
        return f"G({self.m},{self.r},{self.n}) over GF({self.field.p}^{self.field.k})"

    def __eq__(self, other):
        return (isinstance(other, GroupSpec) and (self.m, self.r, self.n) == (other.m, other.r, other.n)
                and self.field == other.field)

    def __hash__(self):
        return hash((self.m, self.r, self.n, self.field))


def act_poly(group: GroupSpec, g: GroupElement, f: Poly) -> Poly:
    """Action on polynomials: x_i -> xi^{c_i} x_{perm(i)} extended
    multiplicatively; coefficients may live in an extension of the group field
    (symbolic parameters), so root scalars are embedded through from_int-free
    coefficient maps."""
    ring = f.ring
    dom = ring.domain
    terms = []
    for e, c in f.terms.items():
        e2 = [0] * len(e)
        scal = None
        rootexp = 0
        for i, a in enumerate(e):
            if a:
                e2[g.perm[i]] += a
                rootexp += g.colors[i] * a
        root = group.root(rootexp)
        scal = _embed_scalar(dom, group.field, root)
        terms.append((tuple(e2), dom.mul(c, scal)))
    return ring.from_terms(terms)


def _embed_scalar(dom, field, value):
    """Embed a group-field scalar into the coefficient domain."""
    if dom is field or dom == field:
        return value
    # rational-function field over the same base
    if hasattr(dom, "base") and dom.base == field:
        return dom.const(value)
    raise TypeError("cannot embed scalar into coefficient domain")


def act_vector(group: GroupSpec, g: GroupElement, v: FreeVector, rep=None) -> FreeVector:
    """Diagonal action on polynomial components and the module basis.

    rep defaults to the representation attached to the vector's space; a free
    module without one is acted on componentwise (trivial basis action).
    """
    rep = rep if rep is not None else v.space.rep
    polys = [act_poly(group, g, f) for f in v.comps]
    if rep is None:
        return FreeVector(v.space, tuple(polys))
    mat = rep.matrix(g)
    dom = v.space.ring.domain
    out = []
    for u in range(v.space.rank):
        acc = v.space.ring.zero
        for t in range(v.space.rank):
            c = mat[u][t]
            if group.field.is_zero(c):
                continue
            acc = acc + polys[t].scale(_embed_scalar(dom, group.field, c))
        out.append(acc)
    return FreeVector(v.space, tuple(out))
