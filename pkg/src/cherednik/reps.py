"""Representations of G(m,r,n) used as lowest weights, and character tools.

Matrices are returned in column convention: rho(g) applied to basis vector
e_t is sum_u M[u][t] e_u.  Entries are group-field scalars.

Only the families the computations need are constructed: one-dimensional
characters, the dihedral two-dimensional family, the rank-3 families, Specht
modules pulled back through the permutation quotient, and pullbacks through
the entrywise q-th-power surjection G(m,r,n) -> G(r,r,n).
"""

from __future__ import annotations

from .errors import IncompatibleGroup, ModularCharacteristic, NotGStable, UnknownName
from .groups import GroupElement, GroupSpec
from .specht import specht_rep


class GradedRep:
    """A representation given by an element -> matrix rule, with caching."""

    def __init__(self, group: GroupSpec, name: str, dim: int, rule, labels=None, meta=None):
        self.group = group
        self.name = name
        self.dim = dim
        self._rule = rule
        self.labels = tuple(labels) if labels else tuple(f"e{i+1}" for i in range(dim))
        self.meta = dict(meta or {})
        self._cache = {}

    def matrix(self, g: GroupElement):
        key = g.key(self.group.m)
        got = self._cache.get(key)
        if got is None:
            got = self._rule(g)
            self._cache[key] = got
        return got

    def trace(self, g: GroupElement):
        M = self.matrix(g)
        t = self.group.field.zero
        for i in range(self.dim):
            t = self.group.field.add(t, M[i][i])
        return t

    def __repr__(self):
        return f"GradedRep({self.name}, dim={self.dim} on {self.group!r})"


def trivial_rep(group: GroupSpec) -> GradedRep:
    one = ((group.field.one,),)
    return GradedRep(group, "trivial", 1, lambda g: one)


def sign_rep(group: GroupSpec) -> GradedRep:
    """Sign of the underlying permutation (det of the monomial matrix for
    G(m,m,n), where the color product is trivial)."""
    f = group.field

    def rule(g):
        s = g.perm_sign()
        val = f.one if s == 1 else f.neg(f.one)
        if group.q > 1:
            # full determinant: sign(perm) * xi^{sum colors}
            val = f.mul(val, group.root(sum(g.colors)))
        return ((val,),)

    return GradedRep(group, "sign", 1, rule)


def dihedral_rho(group: GroupSpec, i: int) -> GradedRep:
    """The representation rho_i of G(m,m,2).

    i >= 1: two-dimensional, roots of unity act by their i-th power.
    i = 0: trivial.  Even m: rho_{-3} is the sign character and rho_{-1},
    rho_{-2} are the other two characters, fixed by the convention
    rho_{-1}(reflection with odd color) = +1 and
    rho_{-2}(reflection with even color) = +1.  Odd m: rho_{-1} is the sign.
    """
    if group.n != 2 or group.r != group.m:
        raise IncompatibleGroup("rho_i lives on the dihedral groups G(m,m,2)")
    m = group.m
    f = group.field
    even = m % 2 == 0
    if i == 0:
        return trivial_rep(group)
    if i < 0:
        if not even:
            if i == -1:
                rep = sign_rep(group)
                rep.name = "rho:-1"
                return rep
            raise UnknownName(f"rho_{i} does not exist for odd m")
        if i == -3:
            rep = sign_rep(group)
            rep.name = "rho:-3"
            return rep
        if i in (-1, -2):
            one, neg = f.one, f.neg(f.one)

            def rule(g, which=i):
                ell = g.colors[0]
                rot = one if ell % 2 == 0 else neg
                if g.perm[0] == 0:
                    return ((rot,),)
                # reflection with x -> xi^ell y
                if which == -1:
                    val = one if ell % 2 == 1 else neg
                else:
                    val = one if ell % 2 == 0 else neg
                return ((val,),)

            return GradedRep(group, f"rho:{i}", 1, rule,
                             meta={"convention": "rho_-1(odd reflection)=+1, rho_-2(even reflection)=+1"})
        raise UnknownName(f"rho_{i}")
    if not (1 <= i and (i < m / 2 if even else i <= (m - 1) // 2)):
        raise UnknownName(f"rho_{i} out of range for m={m}")
    zero = f.zero

    def rule2(g):
        ell = g.colors[0]
        if g.perm[0] == 0:  # rotation x -> xi^ell x, y -> xi^-ell y
            return ((group.root(i * ell), zero), (zero, group.root(-i * ell)))
        # reflection x -> xi^ell y: e1 -> xi^{i ell} e2, e2 -> xi^{-i ell} e1
        return ((zero, group.root(-i * ell)), (group.root(i * ell), zero))

    return GradedRep(group, f"rho:{i}", 2, rule2)


def dihedral_rep_names(m: int) -> list[str]:
    if m % 2 == 0:
        return [f"rho:{i}" for i in range(-3, m // 2)]
    return [f"rho:{i}" for i in range(-1, (m + 1) // 2)]


def all_dihedral_reps(group: GroupSpec) -> list[GradedRep]:
    """The complete irreducible list for G(m,m,2) in the paper's row order."""
    return [dihedral_rho(group, int(nm.split(":")[1])) for nm in dihedral_rep_names(group.m)]


def gamma0_rep(group: GroupSpec) -> GradedRep:
    """The two-dimensional representation of G(m,m,3): the standard summand
    of the permutation action on a1, a2, a3 with basis e1 = a1 - a3,
    e2 = a3 - a2; diagonal matrices act trivially."""
    if group.n != 3 or group.r != group.m:
        raise IncompatibleGroup("gamma_0 lives on G(m,m,3)")
    f = group.field

    def rule(g):
        # permutation matrix on a-coordinates, then change of basis
        # a_i -> a_{perm(i)}; e1 = a1 - a3, e2 = a3 - a2
        cols = []
        for t, expr in enumerate(((1, 0, -1), (0, -1, 1))):  # e1, e2 in a-coords
            img = [0, 0, 0]
            for j in range(3):
                if expr[j]:
                    img[g.perm[j]] += expr[j]
            # express img = c1 e1 + c2 e2 + c0 (a1+a2+a3); sum of coords is 0
            # a-coords of c1 e1 + c2 e2: (c1, -c2, c2 - c1)
            c1 = img[0]
            c2 = -img[1]
            cols.append((f.from_int(c1), f.from_int(c2)))
        return ((cols[0][0], cols[1][0]), (cols[0][1], cols[1][1]))

    return GradedRep(group, "gamma:0", 2, rule, labels=("e1", "e2"))


def gamma_i_rep(group: GroupSpec, i: int) -> GradedRep:
    """Three-dimensional gamma_i of G(m,m,3): permutations permute the basis
    w1, w2, w3 and a diagonal element multiplies w_j by the i-th power of its
    eigenvalue on x_j."""
    if group.n != 3 or group.r != group.m:
        raise IncompatibleGroup("gamma_i lives on G(m,m,3)")
    if not (1 <= i <= group.m - 1):
        raise UnknownName(f"gamma_{i} needs 1 <= i < m")
    f = group.field

    def rule(g):
        M = [[f.zero] * 3 for _ in range(3)]
        for t in range(3):
            M[g.perm[t]][t] = group.root(i * g.colors[t])
        return tuple(tuple(row) for row in M)

    return GradedRep(group, f"gamma:{i}", 3, rule, labels=("w1", "w2", "w3"))


def specht_pullback(group: GroupSpec, lam) -> GradedRep:
    """Specht module of the symmetric group pulled back through the
    permutation quotient G(m,r,n) -> Sigma_n."""
    S = specht_rep(lam, group.field)
    if S.nvars != group.n:
        raise IncompatibleGroup("partition size must equal n")
    name = "specht:" + ",".join(map(str, lam))
    return GradedRep(group, name, S.dim, lambda g: S.matrix(g.perm), labels=S.basis_labels)


def qpower_pullback(group: GroupSpec, inner) -> GradedRep:
    """Pull a representation of G(r,r,n) back through the entrywise
    q-th-power surjection."""
    if inner.group.m != group.r or inner.group.n != group.n:
        raise IncompatibleGroup("inner representation must live on G(r,r,n)")

    def rule(g):
        return inner.matrix(GroupElement(g.perm, tuple(c % group.r for c in g.colors)))

    return GradedRep(group, f"pullback:{inner.name}", inner.dim, rule, labels=inner.labels)


def builtin_rep(group: GroupSpec, name: str) -> GradedRep:
    """Resolve a representation by CLI string.

    Grammar: trivial | sign | rho:i | gamma:i | specht:a,b,... |
    pullback:<spec of a G(r,r,n) representation>.
    """
    name = name.strip()
    if name == "trivial":
        return trivial_rep(group)
    if name == "sign":
        return sign_rep(group)
    if name.startswith("rho:"):
        return dihedral_rho(group, int(name[4:]))
    if name.startswith("gamma:"):
        i = int(name[6:])
        return gamma0_rep(group) if i == 0 else gamma_i_rep(group, i)
    if name.startswith("specht:"):
        lam = tuple(int(x) for x in name[7:].split(","))
        return specht_pullback(group, lam)
    if name.startswith("pullback:"):
        sub = GroupSpec(group.r, group.r, group.n, field=group.field)
        inner = builtin_rep(sub, name[len("pullback:"):])
        return qpower_pullback(group, inner)
    raise UnknownName(name)


# ---------------------------------------------------------------------------
# characters
# ---------------------------------------------------------------------------

def _lift_centered(field, value, bound):
    """Lift a prime-subfield value to the centered integer range; the caller
    guarantees the true integer has absolute value <= bound < p/2."""
    if field.k > 1 and any(d for d in field.digits(value)[1:]):
        raise NotGStable("character inner product left the prime subfield")
    v = field.digits(value)[0] if field.k > 1 else value
    p = field.p
    out = v if v <= (p - 1) // 2 else v - p
    if abs(out) > bound:
        raise ModularCharacteristic(
            f"multiplicity lift |{out}| exceeds bound {bound}; p too small for this slice")
    return out


class SliceModule:
    """A G-stable subspace of a degree slice, presented by echelon rows.

    The entries may be field scalars or symbolic rational functions; traces
    come back as elements of the slice's coefficient domain.
    """

    def __init__(self, group, space, basis):
        self.group = group
        self.space = space
        self.basis = basis
        self.dom = space.ring.domain

    def trace(self, g: GroupElement):
        """Trace of g on the subspace; raises NotGStable if g does not
        preserve it.  Uses that rref rows have identity on pivot columns."""
        from .groups import act_vector
        dom = self.dom
        tr = dom.zero
        if self.basis.dim == 0:
            return tr
        for j, v in enumerate(self.basis.vectors()):
            gv = act_vector(self.group, g, v)
            row = gv.slice_coords(self.basis.degree)
            if not self.basis.contains_coords(row):
                raise NotGStable("group action leaves the subspace")
            tr = dom.add(tr, row[self.basis.pivots[j]])
        return tr

    def trace_as_field(self, g: GroupElement):
        """Trace lowered to the group field (symbolic traces of stable slices
        are constants)."""
        t = self.trace(g)
        if self.dom is self.group.field or self.dom == self.group.field:
            return t
        return t.constant_value()


def endomorphism_dim(group: GroupSpec, slicemod: SliceModule) -> int:
    """dim End_G of the subspace, by solving the commutant equations exactly
    over the coefficient domain (no modular lifting involved)."""
    from .linalg import kernel_basis
    from .groups import act_vector
    dom = slicemod.dom
    d = slicemod.basis.dim
    if d == 0:
        return 0
    mats = []
    vecs = slicemod.basis.vectors()
    piv = slicemod.basis.pivots
    for g in group.generators():
        cols = []
        for v in vecs:
            row = act_vector(group, g, v).slice_coords(slicemod.basis.degree)
            if not slicemod.basis.contains_coords(row):
                raise NotGStable("group action leaves the subspace")
            cols.append([row[c] for c in piv])
        mats.append(cols)  # cols[t][u] is entry M[u][t] of the generator
    rows = []
    for G in mats:
        for a in range(d):
            for b in range(d):
                # (X M - M X)[a][b] with M[c][b] = G[b][c], M[a][c] = G[c][a]
                row = [dom.zero] * (d * d)
                for c in range(d):
                    row[a * d + c] = dom.add(row[a * d + c], G[b][c])
                    row[c * d + b] = dom.sub(row[c * d + b], G[c][a])
                rows.append(row)
    return len(kernel_basis(dom, rows, d * d))


def character_multiplicities(group: GroupSpec, slicemod: SliceModule, candidates) -> dict:
    """Multiplicities of candidate irreducibles in a G-stable slice, plus the
    endomorphism-algebra dimension under key "endo_dim".

    Requires p coprime to |G| (ordinary character theory); the resulting
    multiplicity lifts are sanity-checked against the slice dimension.
    """
    f = group.field
    if group.order % f.p == 0:
        raise ModularCharacteristic(f"p = {f.p} divides |G| = {group.order}")
    classes = group.conjugacy_classes()
    data = [(rep, size, slicemod.trace_as_field(rep.inverse())) for rep, size in classes]
    out = {}
    dim_total = 0
    for cand in candidates:
        total = f.zero
        for rep, size, tr_v_inv in data:
            total = f.add(total, f.mul(f.from_int(size), f.mul(cand.trace(rep), tr_v_inv)))
        total = f.mul(total, f.inv(f.from_int(group.order)))
        mult = _lift_centered(f, total, (f.p - 1) // 2)
        out[cand.name] = mult
        dim_total += mult * cand.dim
    out["endo_dim"] = endomorphism_dim(group, slicemod)
    if dim_total > slicemod.basis.dim:
        raise ModularCharacteristic("multiplicity lifts exceed the slice dimension")
    return out
