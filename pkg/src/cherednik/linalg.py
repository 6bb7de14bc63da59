"""Exact dense linear algebra over the scalar domains, plus graded slices.

Two engines sit behind one interface:

* finite fields: numpy.  A matrix over F_{p^k} is carried as an int64 array of
  digit planes with shape (k, rows, cols); for k = 1 the plane axis is kept,
  so there is a single code path, but the inner loops reduce to ordinary
  mod-p arithmetic.  Products use float64 BLAS (exact below 2^53, which holds
  at desk scale by a wide margin).
* rational-function fields: fraction-free forward elimination on Python rows,
  normalizing only in the final back-substitution.

Reduced row echelon form is canonical for a given subspace, which makes
degree slices comparable bit-for-bit across runs and generator orderings.
"""

from __future__ import annotations

import numpy as np

from .errors import InhomogeneousGenerator, MixedFields
from .gf import GF
from .poly import FreeVector, vector_from_coords
from .series import GradedSeries


# ---------------------------------------------------------------------------
# numeric engine: matrices over GF as digit planes (k, r, c)
# ---------------------------------------------------------------------------

def encode_matrix(field: GF, rows) -> np.ndarray:
    """Row list of encoded ints -> digit planes (k, r, c)."""
    M = np.asarray(rows, dtype=np.int64)
    if M.ndim == 1:
        M = M.reshape(1, -1)
    if M.size == 0:
        M = M.reshape(M.shape if M.ndim == 2 else (0, 0))
    planes = np.empty((field.k,) + M.shape, dtype=np.int64)
    t = M
    for i in range(field.k):
        planes[i] = t % field.p
        t = t // field.p
    return planes

def decode_matrix(field: GF, planes: np.ndarray) -> np.ndarray:
    out = np.zeros(planes.shape[1:], dtype=np.int64)
    for i in range(field.k - 1, -1, -1):
        out = out * field.p + planes[i]
    return out

def zeros(field: GF, r: int, c: int) -> np.ndarray:
    return np.zeros((field.k, r, c), dtype=np.int64)

def _scale_row(field, T, row, s_digits):
    # row: (k, c); s_digits: (k,)
    if field.k == 1:
        return (row * int(s_digits[0])) % field.p
    return np.einsum("i,jc,ijd->dc", s_digits, row, T) % field.p

def rref(field: GF, planes: np.ndarray):
    """In-place reduced row echelon form. Returns (planes, pivot_columns)."""
    k, r, c = planes.shape
    if r == 0 or c == 0:
        return planes, []
    p = field.p
    T = field.tensor() if k > 1 else None
    nz = planes.any(axis=0)  # (r, c) nonzero mask
    pivots = []
    row = 0
    for col in range(c):
        if row >= r:
            break
        cand = np.nonzero(nz[row:, col])[0]
        if cand.size == 0:
            continue
        pr = row + int(cand[0])
        if pr != row:
            planes[:, [row, pr]] = planes[:, [pr, row]]
            nz[[row, pr]] = nz[[pr, row]]
        piv = field.undigits(tuple(int(planes[i, row, col]) for i in range(k)))
        inv = field.inv(piv)
        planes[:, row, :] = _scale_row(field, T, planes[:, row, :], np.array(field.digits(inv), dtype=np.int64))
        factors = planes[:, :, col].copy()  # (k, r)
        factors[:, row] = 0
        if factors.any():
            if k == 1:
                f = factors[0].astype(np.float64)
                prow = planes[0, row, :].astype(np.float64)
                planes[0] = (planes[0] - np.outer(f, prow)) % p
            else:
                upd = np.einsum("ir,jc,ijd->drc", factors, planes[:, row, :], T)
                planes -= upd
                planes %= p
        nz = planes.any(axis=0)
        pivots.append(col)
        row += 1
    # sort rows are already in pivot order by construction
    return planes[:, :row, :], pivots

def kernel_planes(field: GF, planes: np.ndarray):
    """Canonical (rref) basis of the right kernel, as digit planes."""
    k, r, c = planes.shape
    R, piv = rref(field, planes.copy())
    free = [j for j in range(c) if j not in set(piv)]
    if not free:
        return zeros(field, 0, c)
    out = zeros(field, len(free), c)
    for idx, f in enumerate(free):
        out[0, idx, f] = 1 % field.p
        for ri, pc in enumerate(piv):
            # v[pc] = -R[ri, f]
            for i in range(k):
                out[i, idx, pc] = (-int(R[i, ri, f])) % field.p
    # re-echelonize so the result is canonical for the subspace
    out, _ = rref(field, out)
    return out

def matmul(field: GF, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    k = field.k
    p = field.p
    if A.shape[2] != B.shape[1]:
        raise ValueError("shape mismatch")
    if k == 1:
        prod = (A[0].astype(np.float64) @ B[0].astype(np.float64)) % p
        return prod.astype(np.int64)[None]
    T = field.tensor()
    out = np.zeros((k, A.shape[1], B.shape[2]), dtype=np.int64)
    for i in range(k):
        Ai = A[i].astype(np.float64)
        for j in range(k):
            prod = ((Ai @ B[j].astype(np.float64)) % p).astype(np.int64)
            for d in range(k):
                if T[i, j, d]:
                    out[d] += prod * int(T[i, j, d])
    return out % p

def reduce_rows(field: GF, V: np.ndarray, R: np.ndarray, pivots) -> np.ndarray:
    """Reduce each row of V modulo the rref R (rows spanning a subspace)."""
    if R.shape[1] == 0 or V.shape[1] == 0:
        return V
    coef = V[:, :, pivots]  # (k, v, npiv)
    return (V - matmul(field, coef, R)) % field.p


# ---------------------------------------------------------------------------
# generic engine: rows of domain elements (used for symbolic parameters)
# ---------------------------------------------------------------------------

def _rref_generic(dom, rows):
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    c = len(rows[0])
    pivots = []
    row = 0
    for col in range(c):
        if row >= len(rows):
            break
        pr = None
        for i in range(row, len(rows)):
            if not dom.is_zero(rows[i][col]):
                pr = i
                break
        if pr is None:
            continue
        rows[row], rows[pr] = rows[pr], rows[row]
        # forward: eliminate below, fraction-free style (cross-multiply)
        piv = rows[row][col]
        for i in range(row + 1, len(rows)):
            a = rows[i][col]
            if dom.is_zero(a):
                continue
            rows[i] = [dom.sub(dom.mul(piv, x), dom.mul(a, y))
                       for x, y in zip(rows[i], rows[row])]
        pivots.append(col)
        row += 1
    rows = rows[:row]
    # back substitution and normalization
    for ri in range(row - 1, -1, -1):
        col = pivots[ri]
        inv = dom.inv(rows[ri][col])
        rows[ri] = [dom.mul(inv, x) for x in rows[ri]]
        for up in range(ri):
            a = rows[up][col]
            if dom.is_zero(a):
                continue
            rows[up] = [dom.sub(x, dom.mul(a, y)) for x, y in zip(rows[up], rows[ri])]
    return rows, pivots

def _kernel_generic(dom, rows, ncols):
    R, piv = _rref_generic(dom, rows)
    free = [j for j in range(ncols) if j not in set(piv)]
    basis = []
    for f in free:
        v = [dom.zero] * ncols
        v[f] = dom.one
        for ri, pc in enumerate(piv):
            v[pc] = dom.neg(R[ri][f])
        basis.append(v)
    B, _ = _rref_generic(dom, basis)
    return B


# ---------------------------------------------------------------------------
# unified interface
# ---------------------------------------------------------------------------

def _is_numeric(dom):
    return isinstance(dom, GF)


class Mat:
    """A dense exact matrix tied to a scalar domain.

    Thin wrapper storing either digit planes (GF) or row lists (generic);
    all public linear algebra goes through this class.
    """

    def __init__(self, dom, data, ncols):
        self.dom = dom
        self.data = data
        self.ncols = ncols

    @classmethod
    def from_rows(cls, dom, rows, ncols=None):
        rows = list(rows)
        if ncols is None:
            if not rows:
                raise ValueError("need ncols for an empty matrix")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise MixedFields("ragged rows")
        if _is_numeric(dom):
            if rows:
                return cls(dom, encode_matrix(dom, rows), ncols)
            return cls(dom, zeros(dom, 0, ncols), ncols)
        return cls(dom, [list(r) for r in rows], ncols)

    @property
    def nrows(self):
        return self.data.shape[1] if _is_numeric(self.dom) else len(self.data)

    def rows_as_ints(self):
        """Row list of encoded field elements (numeric only)."""
        return decode_matrix(self.dom, self.data).tolist()

    def row_list(self):
        if _is_numeric(self.dom):
            return self.rows_as_ints()
        return [list(r) for r in self.data]

    def rref(self):
        if _is_numeric(self.dom):
            R, piv = rref(self.dom, self.data.copy())
            return Mat(self.dom, R, self.ncols), piv
        R, piv = _rref_generic(self.dom, self.data)
        return Mat(self.dom, R, self.ncols), piv

    def kernel(self):
        if _is_numeric(self.dom):
            K = kernel_planes(self.dom, self.data)
            return Mat(self.dom, K, self.ncols)
        K = _kernel_generic(self.dom, self.data, self.ncols)
        return Mat(self.dom, K, self.ncols)

    def rank(self):
        _, piv = self.rref()
        return len(piv)

    def __eq__(self, other):
        if not isinstance(other, Mat) or self.ncols != other.ncols:
            return False
        if _is_numeric(self.dom):
            return self.data.shape == other.data.shape and bool((self.data == other.data).all())
        return self.data == other.data


def kernel_basis(dom, rows, ncols=None):
    """Echelonized basis of the right kernel of a rectangular matrix.

    Rows may be any iterable of coefficient rows over one domain; rank plus
    nullity equals the column count.
    """
    M = Mat.from_rows(dom, rows, ncols)
    return M.kernel().row_list()


class SliceBasis:
    """Echelon basis of a homogeneous degree-d subspace of a free module."""

    def __init__(self, space, degree, mat: Mat, pivots):
        self.space = space
        self.degree = degree
        self.mat = mat
        self.pivots = list(pivots)
        npiv = set(self.pivots)
        self.nonpivots = [j for j in range(mat.ncols) if j not in npiv]

    @property
    def dim(self):
        return len(self.pivots)

    @property
    def ambient_dim(self):
        return self.mat.ncols

    @property
    def quotient_dim(self):
        return self.ambient_dim - self.dim

    def vectors(self):
        return [vector_from_coords(self.space, self.degree, row) for row in self.mat.row_list()]

    def reduce_coords(self, rows_mat: Mat) -> Mat:
        """Reduce row vectors modulo this subspace."""
        if self.dim == 0:
            return rows_mat
        if _is_numeric(self.mat.dom):
            red = reduce_rows(self.mat.dom, rows_mat.data, self.mat.data, self.pivots)
            return Mat(self.mat.dom, red, self.mat.ncols)
        dom = self.mat.dom
        out = []
        for row in rows_mat.data:
            row = list(row)
            for ri, pc in enumerate(self.pivots):
                a = row[pc]
                if dom.is_zero(a):
                    continue
                row = [dom.sub(x, dom.mul(a, y)) for x, y in zip(row, self.mat.data[ri])]
            out.append(row)
        return Mat(dom, out, self.mat.ncols)

    def contains_coords(self, row) -> bool:
        M = Mat.from_rows(self.mat.dom, [row], self.mat.ncols)
        red = self.reduce_coords(M)
        if _is_numeric(self.mat.dom):
            return not red.data.any()
        return all(self.mat.dom.is_zero(x) for x in red.data[0])

    def contains(self, vec: FreeVector) -> bool:
        if vec.is_zero():
            return True
        if vec.degree() != self.degree:
            return False
        return self.contains_coords(vec.slice_coords(self.degree))

    def project_coords(self, rows_mat: Mat) -> Mat:
        """Quotient coordinates (nonpivot columns after reduction)."""
        red = self.reduce_coords(rows_mat)
        if _is_numeric(self.mat.dom):
            return Mat(self.mat.dom, red.data[:, :, self.nonpivots], len(self.nonpivots))
        rows = [[r[j] for j in self.nonpivots] for r in red.data]
        return Mat(self.mat.dom, rows, len(self.nonpivots))

    def project_cols(self, M: Mat) -> Mat:
        """Compose the quotient projection with a map INTO this slice:
        columns of M are vectors in the ambient coordinates; the result has
        one row per quotient coordinate, Q M = M[np,:] - R[:,np]^T M[piv,:]."""
        dom = self.mat.dom
        if _is_numeric(dom):
            Dnp = M.data[:, self.nonpivots, :]
            if self.dim:
                RnpT = self.mat.data[:, :, self.nonpivots].transpose(0, 2, 1)
                Dpiv = M.data[:, self.pivots, :]
                Dnp = (Dnp - matmul(dom, RnpT, Dpiv)) % dom.p
            return Mat(dom, Dnp, M.ncols)
        rows = [list(M.data[j]) for j in self.nonpivots]
        if self.dim:
            for out_i, j in enumerate(self.nonpivots):
                for ri, pc in enumerate(self.pivots):
                    coef = self.mat.data[ri][j]
                    if dom.is_zero(coef):
                        continue
                    rows[out_i] = [dom.sub(x, dom.mul(coef, y))
                                   for x, y in zip(rows[out_i], M.data[pc])]
        return Mat(dom, rows, M.ncols)

    def __eq__(self, other):
        return (isinstance(other, SliceBasis) and self.degree == other.degree
                and self.pivots == other.pivots and self.mat == other.mat)


def empty_slice(space, dom, d):
    total = space.slice_dim(d)
    return SliceBasis(space, d, Mat.from_rows(dom, [], total), [])


def module_slice(space, generators, d) -> SliceBasis:
    """Degree-d slice of the submodule generated by homogeneous vectors.

    Each generator of degree e <= d is multiplied by all monomials of degree
    d - e and the resulting rows are echelonized.
    """
    from .poly import monomials_of_degree
    dom = space.ring.domain
    rows = []
    total = space.slice_dim(d)
    for g in generators:
        if g.is_zero():
            continue
        e = g.degree()
        for comp in g.comps:
            if not comp.is_homogeneous():
                raise InhomogeneousGenerator(str(g))
        if e > d:
            continue
        for mono in monomials_of_degree(space.ring.nvars, d - e):
            rows.append(g.shift(mono).slice_coords(d))
    M = Mat.from_rows(dom, rows, total)
    R, piv = M.rref()
    return SliceBasis(space, d, R, piv)


def slice_from_rows(space, d, rows) -> SliceBasis:
    dom = space.ring.domain
    M = Mat.from_rows(dom, rows, space.slice_dim(d))
    R, piv = M.rref()
    return SliceBasis(space, d, R, piv)


def quotient_hilbert(space, generators, dmax) -> GradedSeries:
    """Graded dimensions of (free module)/(submodule) up to degree dmax."""
    coeffs = []
    for d in range(dmax + 1):
        sl = module_slice(space, generators, d)
        coeffs.append(space.slice_dim(d) - sl.dim)
    return GradedSeries(coeffs)
