"""Dunkl operators on Verma modules and the contravariant pairing.

The Verma module M(tau) = Sym(h*) (x) tau is a free module over the
polynomial ring with one basis vector per tau basis vector.  The operator
attached to the coordinate y_i acts by

    D_i(f (x) v) = hbar d_i f (x) v
                 - sum_s c_s (y_i, alpha_s) [(1-s)f / alpha_s] (x) s.v

with the sum over all reflections s; the divided difference is an exact
polynomial division (checked, so convention errors surface immediately).

Parameters c_s are constant on conjugacy classes of reflections.  They can be
symbolic (rational functions in named variables over the base field) or
specialized to seed-determined field values; symbolic names follow the
dihedral usage: the odd swap class is "c", the even one "d", an unsplit swap
class is "c", and the diagonal classes are "c1", "c2", ...
"""

from __future__ import annotations

from .errors import LengthMismatch, NonHomogeneous
from .groups import GroupSpec, _embed_scalar
from .poly import FreeSpace, FreeVector, PolyRing
from .ratfunc import FracField, draw_assignments


PARAM_NAMES = {"s": "c", "s-": "c", "s+": "d"}


def param_name(label: str) -> str:
    return PARAM_NAMES.get(label, label.replace("t", "c"))


class CherednikParams:
    """hbar together with one parameter value per reflection class."""

    def __init__(self, group: GroupSpec, hbar: int, values: dict, domain, mode: str, seeds=()):
        if hbar not in (0, 1):
            raise ValueError("hbar is 0 or 1 up to rescaling")
        labels = group.reflection_class_labels()
        if set(values) != set(labels):
            raise ValueError(f"parameter labels {sorted(values)} != classes {sorted(labels)}")
        self.group = group
        self.hbar = hbar
        self.values = dict(values)
        self.domain = domain
        self.mode = mode
        self.seeds = tuple(seeds)

    @classmethod
    def symbolic(cls, group: GroupSpec, hbar=0) -> "CherednikParams":
        labels = group.reflection_class_labels()
        names = tuple(param_name(l) for l in labels)
        K = FracField(group.field, tuple(sorted(set(names))))
        values = {l: K.var(param_name(l)) for l in labels}
        return cls(group, hbar, values, K, "symbolic")

    @classmethod
    def specialized(cls, group: GroupSpec, seed: int, hbar=0) -> "CherednikParams":
        labels = group.reflection_class_labels()
        names = sorted(set(param_name(l) for l in labels))
        assign = draw_assignments(group.field, names, seed)
        values = {l: assign[param_name(l)] for l in labels}
        return cls(group, hbar, values, group.field, "specialized", (seed,))

    def value(self, label):
        return self.values[label]

    def describe(self) -> dict:
        out = {"hbar": self.hbar, "mode": self.mode}
        if self.mode == "specialized":
            out["seeds"] = list(self.seeds)
            out["values"] = {l: int(v) for l, v in self.values.items()}
        else:
            out["values"] = {l: str(v) for l, v in self.values.items()}
        return out


class VermaSpace(FreeSpace):
    """Sym(h*) (x) tau with its group, representation and parameter data."""

    def __init__(self, group: GroupSpec, rep, params: CherednikParams):
        dom = params.domain
        names = tuple(f"x{i+1}" for i in range(group.n)) if group.n > 3 else ("x", "y", "z")[: group.n]
        ring = PolyRing(dom, names)
        super().__init__(ring, (0,) * rep.dim, labels=rep.labels, rep=rep)
        self.group = group
        self.params = params
        self._refl = group.reflections()
        self._touch = {i: [s for s in self._refl if s.a == i or s.b == i] for i in range(group.n)}
        self._rep_cache = {}

    def rep_matrix(self, refl):
        key = refl.element.key(self.group.m)
        got = self._rep_cache.get(key)
        if got is None:
            got = self.rep.matrix(refl.element)
            self._rep_cache[key] = got
        return got

    def embed(self, scalar):
        return _embed_scalar(self.ring.domain, self.group.field, scalar)

    def poly_tensor(self, f, t=0):
        """f (x) (t-th tau basis vector)."""
        return self.unit(t, f)


def dunkl_apply(space: VermaSpace, i: int, vec: FreeVector) -> FreeVector:
    """Apply D_{y_i} to a homogeneous vector of M(tau); degree drops by one.

    Degree-0 vectors map to zero.  Each divided difference is divided exactly
    by the root form, with the remainder checked.
    """
    group = space.group
    params = space.params
    dom = space.ring.domain
    f = group.field
    deg = vec.degree()
    if deg <= 0:
        return space.zero_vector()
    out = [space.ring.zero] * space.rank
    if params.hbar:
        for t in range(space.rank):
            out[t] = out[t] + vec.comps[t].deriv(i)
    from .groups import act_poly
    for refl in space._touch[i]:
        pair = refl.pairing_y(i, group)
        if f.is_zero(pair):
            continue
        c_s = params.value(refl.label)
        coef = dom.neg(dom.mul(c_s, space.embed(pair)))
        if dom.is_zero(coef):
            continue
        mat = space.rep_matrix(refl)
        quots = []
        for t in range(space.rank):
            ft = vec.comps[t]
            if ft.is_zero():
                quots.append(space.ring.zero)
                continue
            diff = ft - act_poly(group, refl.element, ft)
            if diff.is_zero():
                quots.append(space.ring.zero)
                continue
            if refl.b is None:
                quots.append(diff.divide_linear(refl.a))
            else:
                quots.append(diff.divide_linear(refl.a, refl.b, space.embed(group.root(refl.k))))
        for u in range(space.rank):
            acc = space.ring.zero
            for t in range(space.rank):
                muc = mat[u][t]
                if f.is_zero(muc):
                    continue
                q = quots[t]
                if q.is_zero():
                    continue
                acc = acc + q.scale(space.embed(muc))
            if not acc.is_zero():
                out[u] = out[u] + acc.scale(coef)
    return FreeVector(space, tuple(out))


def dunkl_word(space: VermaSpace, word, vec: FreeVector) -> FreeVector:
    for i in word:
        vec = dunkl_apply(space, i, vec)
    return vec


def beta_pairing(space: VermaSpace, vec: FreeVector, word, phi_index: int):
    """Contravariant pairing of vec against y_{w_1}...y_{w_d} (x) phi.

    Adjointness moves the dual variables onto vec as Dunkl operators (the
    conjugate parameters of the dual module enter only through this adjoint
    convention); the result is phi applied to the degree-0 component.
    """
    if vec.degree() != len(word):
        raise LengthMismatch(f"word length {len(word)} != degree {vec.degree()}")
    red = dunkl_word(space, list(word), vec)
    return red.comps[phi_index].constant_coeff()


def commutation_defect(space: VermaSpace, i: int, j: int, vec: FreeVector):
    """[D_i, x_j] v minus the right side of the defining relation; zero iff
    the relation holds on v."""
    group = space.group
    dom = space.ring.domain
    f = group.field
    xj = space.ring.var(j)
    lhs = dunkl_apply(space, i, FreeVector(space, tuple(xj * c for c in vec.comps)))
    Dv = dunkl_apply(space, i, vec)
    lhs = lhs - FreeVector(space, tuple(xj * c for c in Dv.comps))
    # hbar delta_ij v - sum_s c_s (y_i, alpha_s)(x_j, alpha_s^vee) s.v
    from .groups import act_vector
    rhs = space.zero_vector()
    if space.params.hbar and i == j:
        rhs = rhs + vec
    for refl in space._refl:
        pa = refl.pairing_y(i, group)
        pb = refl.covector_coeff(j, group)
        cc = f.mul(pa, pb)
        if f.is_zero(cc):
            continue
        coef = dom.neg(dom.mul(space.params.value(refl.label), space.embed(cc)))
        sv = act_vector(group, refl.element, vec)
        rhs = rhs + sv.scale(coef)
    return lhs - rhs


# ---------------------------------------------------------------------------
# fast slice matrices over a finite field (specialized parameters)
# ---------------------------------------------------------------------------

def dunkl_slice_matrices(space: VermaSpace, d: int):
    """Matrices of D_1..D_n from the degree-d slice to degree d-1.

    Returns a list of n matrices in the slice coordinate convention of
    FreeVector.slice_coords (component-major columns).  Fast path for
    specialized parameters over the field: matrices are assembled reflection
    by reflection as Kronecker blocks; the generic path loops over basis
    vectors with dunkl_apply.
    """
    from .gf import GF
    dom = space.ring.domain
    if isinstance(dom, GF):
        return _dunkl_matrices_numeric(space, d)
    return _dunkl_matrices_generic(space, d)


def _dunkl_matrices_generic(space: VermaSpace, d: int):
    from .linalg import Mat
    from .poly import monomials_of_degree
    monos = monomials_of_degree(space.ring.nvars, d)
    cols = []
    for t in range(space.rank):
        for e in monos:
            cols.append(space.unit(t, space.ring.monomial(e)))
    mats = []
    lower_dim = space.slice_dim(d - 1)
    for i in range(space.group.n):
        rows = [[space.ring.domain.zero] * len(cols) for _ in range(lower_dim)]
        for cidx, v in enumerate(cols):
            img = dunkl_apply(space, i, v)
            coords = img.slice_coords(d - 1)
            for ridx, val in enumerate(coords):
                rows[ridx][cidx] = val
        mats.append(Mat.from_rows(space.ring.domain, rows, len(cols)))
    return mats


def _divided_difference_rows(group, refl, monos_hi, idx_lo, n):
    """Sparse triples (row, col, scalar) of the map f -> (1-s)f/alpha_s
    between monomial slices, using the telescoping closed form for swaps."""
    f = group.field
    triples = []
    if refl.b is None:
        a, e = refl.a, refl.k
        for col, mono in enumerate(monos_hi):
            A = mono[a]
            if A == 0:
                continue
            c = f.sub(f.one, group.root(e * A))
            if f.is_zero(c):
                continue
            lo = list(mono)
            lo[a] -= 1
            triples.append((idx_lo[tuple(lo)], col, c))
        return triples
    a, b, k = refl.a, refl.b, refl.k
    for col, mono in enumerate(monos_hi):
        A, B = mono[a], mono[b]
        if A == B:
            continue
        lo = list(mono)
        if A > B:
            base = B
            length = A - B
            sign_root = f.one
        else:
            base = A
            length = B - A
            sign_root = f.neg(group.root(k * (A - B)))
        lo[a] = base
        lo[b] = base
        for j in range(length):
            e2 = list(lo)
            e2[a] += length - 1 - j
            e2[b] += j
            c = f.mul(sign_root, group.root(k * j))
            triples.append((idx_lo[tuple(e2)], col, c))
    return triples


def _dunkl_matrices_numeric(space: VermaSpace, d: int):
    import numpy as np
    from .linalg import Mat, encode_matrix
    from .poly import monomial_index, monomials_of_degree
    group = space.group
    f = group.field
    n = group.n
    monos_hi = monomials_of_degree(n, d)
    monos_lo = monomials_of_degree(n, d - 1)
    idx_lo = monomial_index(n, d - 1)
    K_hi, K_lo = len(monos_hi), len(monos_lo)
    r = space.rank
    mats = []
    for i in range(n):
        full = np.zeros((K_lo * r, K_hi * r), dtype=np.int64)
        if space.params.hbar:
            for col, mono in enumerate(monos_hi):
                if mono[i] == 0:
                    continue
                lo = list(mono)
                lo[i] -= 1
                c = f.from_int(mono[i])
                if c:
                    row = idx_lo[tuple(lo)]
                    for t in range(r):
                        pos = (t * K_lo + row, t * K_hi + col)
                        full[pos] = f.add(int(full[pos]), c)
        for refl in space._touch[i]:
            pair = refl.pairing_y(i, group)
            if f.is_zero(pair):
                continue
            coef = f.neg(f.mul(space.params.value(refl.label), pair))
            if f.is_zero(coef):
                continue
            triples = _divided_difference_rows(group, refl, monos_hi, idx_lo, n)
            if not triples:
                continue
            mat = space.rep_matrix(refl)
            for (row, col, c) in triples:
                cc = f.mul(coef, c)
                for u in range(r):
                    for t in range(r):
                        mut = mat[u][t]
                        if mut == 0:
                            continue
                        pos = (u * K_lo + row, t * K_hi + col)
                        full[pos] = f.add(int(full[pos]), f.mul(cc, mut))
        mats.append(Mat(f, encode_matrix(f, full), K_hi * r))
    return mats
