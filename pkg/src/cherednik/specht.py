"""Partitions, Young tableaux, Garnir polynomials and Specht modules.

The Specht module S_lambda is realized inside the polynomial ring as the span
of the Garnir polynomials of shape lambda; the ones indexed by standard
tableaux form a basis.  Symmetric-group matrices are obtained by permuting
variables in a basis polynomial and solving for its coordinates in the
standard basis, which works over any coefficient field (in small positive
characteristic the module may be reducible but the construction is still
valid).
"""

from __future__ import annotations

from functools import lru_cache

from .errors import ExpressionFailure, MalformedTableau, NotAPartition
from .linalg import Mat, slice_from_rows
from .poly import FreeSpace, PolyRing


def check_partition(lam) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if not lam or any(x <= 0 for x in lam) or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise NotAPartition(str(lam))
    return lam


def partition_n(lam) -> int:
    """n(lambda) = sum (i-1) lambda_i, the degree of the Garnir polynomials."""
    return sum(i * li for i, li in enumerate(lam))


def conjugate_partition(lam):
    lam = check_partition(lam)
    out = []
    j = 0
    while True:
        c = sum(1 for li in lam if li > j)
        if c == 0:
            return tuple(out)
        out.append(c)
        j += 1


def hooks(lam) -> list[int]:
    lam = check_partition(lam)
    conj = conjugate_partition(lam)
    out = []
    for i, li in enumerate(lam):
        for j in range(li):
            out.append((li - j) + (conj[j] - i) - 1)
    return out


@lru_cache(maxsize=None)
def standard_tableaux(lam) -> tuple:
    """All standard Young tableaux of the given shape, as row tuples with
    entries 1..n.  Generated by placing n, n-1, ... at removable corners."""
    lam = check_partition(lam)
    n = sum(lam)
    if n == 1:
        return (((1,),),)
    out = []
    for i, li in enumerate(lam):
        if li == 0:
            continue
        if i + 1 < len(lam) and lam[i + 1] == li:
            continue
        smaller = list(lam)
        smaller[i] -= 1
        if smaller[i] == 0:
            smaller.pop()
        for t in standard_tableaux(tuple(smaller)):
            rows = [list(r) for r in t]
            if i < len(rows):
                rows[i].append(n)
            else:
                rows.append([n])
            out.append(tuple(tuple(r) for r in rows))
    return tuple(out)


def tableau_columns(rows):
    ncols = max(len(r) for r in rows)
    cols = []
    for j in range(ncols):
        cols.append([r[j] for r in rows if len(r) > j])
    return cols


def garnir_polynomial(rows, ring: PolyRing):
    """Product over the columns of the tableau of all pairwise differences
    x_{a} - x_{b} (a above b in the column).  Entries are 1-based."""
    n = ring.nvars
    flat = [e for r in rows for e in r]
    if sorted(flat) != list(range(1, len(flat) + 1)) or len(flat) > n:
        raise MalformedTableau(str(rows))
    lens = [len(r) for r in rows]
    if any(lens[i] < lens[i + 1] for i in range(len(lens) - 1)):
        raise MalformedTableau("row lengths must be weakly decreasing")
    f = ring.one
    for col in tableau_columns(rows):
        for i in range(len(col)):
            for j in range(i + 1, len(col)):
                f = f * (ring.var(col[i] - 1) - ring.var(col[j] - 1))
    return f


class SpechtRep:
    """Specht module of the symmetric group inside n polynomial variables.

    matrix(g) accepts anything with a .perm attribute (monomial matrices act
    through their underlying permutation) or a bare permutation tuple.
    """

    def __init__(self, lam, field, name=None):
        self.lam = check_partition(lam)
        self.field = field
        n = sum(self.lam)
        self.nvars = n
        self.name = name or ("specht:" + ",".join(map(str, self.lam)))
        self.ring = PolyRing(field, tuple(f"x{i+1}" for i in range(n)))
        self.tableaux = standard_tableaux(self.lam)
        self.dim = len(self.tableaux)
        self.basis_labels = tuple("f[" + ";".join(",".join(map(str, r)) for r in t) + "]" for t in self.tableaux)
        self.degree = partition_n(self.lam)
        self.polys = [garnir_polynomial(t, self.ring) for t in self.tableaux]
        space = FreeSpace(self.ring, (0,))
        rows = [space.vector([f]).slice_coords(self.degree) for f in self.polys]
        self._basis = slice_from_rows(space, self.degree, rows)
        if self._basis.dim != self.dim:
            raise ExpressionFailure("standard Garnir polynomials are dependent")
        self._space = space
        self._raw = Mat.from_rows(field, rows)
        self._cache = {}

    def _coords_in_basis(self, poly):
        """Coordinates of poly in the raw Garnir basis.

        With R the rref of the raw basis and P its pivots, a vector v of the
        span satisfies v = b @ R with b = v[P], and raw = C @ R with
        C[i][j] = raw_i[P_j]; so the raw coordinates are b @ C^{-1}.
        """
        row = self._space.vector([poly]).slice_coords(self.degree)
        if not self._basis.contains_coords(row):
            raise ExpressionFailure("permuted Garnir polynomial left the span")
        b = [row[c] for c in self._basis.pivots]
        cinv = self._change
        out = []
        for j in range(self.dim):
            acc = self.field.zero
            for i in range(self.dim):
                acc = self.field.add(acc, self.field.mul(b[i], cinv[i][j]))
            out.append(acc)
        return out

    @property
    def _change(self):
        if not hasattr(self, "_change_cache"):
            raw = self._raw.row_list()
            C = [[raw[i][c] for c in self._basis.pivots] for i in range(self.dim)]
            self._change_cache = _invert_matrix(self.field, C)
        return self._change_cache

    def matrix(self, g):
        """Matrix of the permutation in the standard-tableau Garnir basis:
        column t holds the coordinates of g . f_t."""
        perm = g.perm if hasattr(g, "perm") else tuple(g)
        got = self._cache.get(perm)
        if got is not None:
            return got
        from .groups import GroupElement, act_poly
        cols = []
        sym = _sym_group(self.nvars, self.field)
        ge = GroupElement(perm, (0,) * self.nvars)
        for f in self.polys:
            pf = act_poly(sym, ge, f)
            cols.append(self._coords_in_basis(pf))
        mat = tuple(tuple(cols[t][u] for t in range(self.dim)) for u in range(self.dim))
        self._cache[perm] = mat
        return mat

    def __repr__(self):
        return f"SpechtRep({self.lam}, dim={self.dim})"


@lru_cache(maxsize=None)
def _sym_group(n, field):
    from .groups import GroupSpec
    return GroupSpec(1, 1, n, field=field)


def _invert_matrix(field, M):
    n = len(M)
    aug = [[M[i][j] for j in range(n)] + [field.one if i == j else field.zero for j in range(n)]
           for i in range(n)]
    R, piv = Mat.from_rows(field, aug).rref()
    if piv[:n] != list(range(n)):
        raise ExpressionFailure("singular basis-change matrix")
    rows = R.row_list()
    return [r[n:] for r in rows]


def specht_rep(lam, field) -> SpechtRep:
    """Specht representation with the standard-tableau Garnir basis."""
    return SpechtRep(lam, field)
