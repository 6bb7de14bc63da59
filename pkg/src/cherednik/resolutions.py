"""Degree-bounded minimal free resolutions, Betti tables, duality checks, and
matrix regular sequences.

Resolutions are computed by exact linear algebra, one homological level at a
time: minimal generators of a submodule are slice vectors modulo the action
of the variables on the previous slice; syzygies are kernels of the
evaluation map from the free cover.  Everything is bounded by an explicit
internal degree, with completeness certified by the Euler characteristic
identity against the quotient's Hilbert function.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dfield

from .errors import IncompleteTable, SizeMismatch
from .linalg import Mat, module_slice, quotient_hilbert
from .poly import FreeSpace, FreeVector, monomials_of_degree
from .series import GradedSeries, poly_mul, poly_trim


@dataclass
class BettiTable:
    entries: dict           # (homological degree i, internal degree j) -> rank
    degree_bound: int
    complete: bool
    generator_slices: dict = dfield(default_factory=dict)  # (i, j) -> list of vectors
    meta: dict = dfield(default_factory=dict)

    @property
    def pdim(self):
        return max((i for (i, j), v in self.entries.items() if v), default=0)

    def rank(self, i):
        return sum(v for (i2, j), v in self.entries.items() if i2 == i)

    def total_ranks(self):
        return [self.rank(i) for i in range(self.pdim + 1)]

    def alternating_sum(self):
        """sum_i (-1)^i sum_j beta_ij t^j as a coefficient list."""
        out = [0] * (max((j for (_, j) in self.entries), default=0) + 1)
        for (i, j), v in self.entries.items():
            out[j] += v if i % 2 == 0 else -v
        return poly_trim(out)

    def column_degrees(self, i):
        return sorted(j for (i2, j), v in self.entries.items() if i2 == i and v)

    def macaulay_layout(self) -> str:
        """Rows indexed by j - i, columns by homological degree."""
        if not self.entries:
            return "(empty)"
        cols = self.pdim + 1
        rows = sorted({j - i for (i, j), v in self.entries.items() if v})
        width = max(len(str(v)) for v in self.entries.values()) + 2
        lines = ["     " + "".join(f"{i:>{width}}" for i in range(cols))]
        for rr in rows:
            cells = []
            for i in range(cols):
                v = self.entries.get((i, rr + i), 0)
                cells.append(f"{v if v else '.':>{width}}")
            lines.append(f"{rr:>4}:" + "".join(cells))
        return "\n".join(lines)

    def to_json_obj(self):
        return {"betti": {f"{i},{j}": v for (i, j), v in sorted(self.entries.items()) if v},
                "degree_bound": self.degree_bound,
                "complete": self.complete,
                "total_ranks": self.total_ranks()}

    def to_json(self):
        return json.dumps(self.to_json_obj(), sort_keys=True)


def _minimal_new_generators(slices, d):
    """Rows of slices[d] that minimally extend (variables) * slices[d-1].

    Returns coordinate rows of representatives; their count is the graded
    Betti number at internal degree d of the module the slices present.
    """
    cur = slices[d]
    space = cur.space
    dom = space.ring.domain
    if cur.dim == 0:
        return []
    prev = slices.get(d - 1)
    if prev is None or prev.dim == 0:
        return cur.mat.row_list()
    rows = []
    nvars = space.ring.nvars
    for v in prev.vectors():
        for i in range(nvars):
            shifted = v.shift(tuple(1 if j == i else 0 for j in range(nvars)))
            rows.append(shifted.slice_coords(d))
    R, piv = Mat.from_rows(dom, rows, cur.ambient_dim).rref()
    carried = [list(r) for r in R.row_list()]
    carried_piv = list(piv)
    out = []
    for row in cur.mat.row_list():
        vec = list(row)
        for rr, pc in zip(carried, carried_piv):
            a = vec[pc]
            if not dom.is_zero(a):
                vec = [dom.sub(x, dom.mul(a, y)) for x, y in zip(vec, rr)]
        lead = next((c for c, x in enumerate(vec) if not dom.is_zero(x)), None)
        if lead is None:
            continue
        inv = dom.inv(vec[lead])
        carried.append([dom.mul(inv, x) for x in vec])
        carried_piv.append(lead)
        out.append(row)
    return out


def graded_betti(space: FreeSpace, generators, dmax: int, keep_generators=False) -> BettiTable:
    """Minimal free resolution of (free module)/(generated submodule), as
    graded Betti numbers beta_{ij} up to internal degree dmax.

    beta_0 comes from the basis degrees of the cover; beta_1 from minimal
    generators of the submodule; each further level resolves the syzygy
    kernel of the previous free cover, degree by degree with exact linear
    algebra.  The completeness flag requires the levels to stop on their own
    below the Auslander-Buchsbaum bound and the Euler characteristic identity
    to hold against the quotient's Hilbert function.
    """
    from .poly import vector_from_coords
    entries = {}
    gen_slices = {}
    for b in space.basis_degrees:
        entries[(0, b)] = entries.get((0, b), 0) + 1
    hs = quotient_hilbert(space, generators, dmax)
    level = 0
    cover = None  # free cover of the previous level (None = resolving U in F_0)
    exhausted = True
    while True:
        level += 1
        if level > space.ring.nvars + 1:
            exhausted = False
            break
        slices = {}
        if cover is None:
            degs = sorted({g.degree() for g in generators if not g.is_zero()})
            if not degs:
                break
            for d in range(min(degs), dmax + 1):
                slices[d] = module_slice(space, generators, d)
        else:
            lowest = min(cover.basis_degrees)
            for d in range(lowest, dmax + 1):
                slices[d] = _syzygy_slice(cover, d)
        mins = {}
        for d in sorted(slices):
            new = _minimal_new_generators(slices, d)
            if new:
                mins[d] = new
        if not mins:
            break
        host = space if cover is None else cover
        total_new = []
        for d, rows in sorted(mins.items()):
            entries[(level, d)] = entries.get((level, d), 0) + len(rows)
            vecs = [vector_from_coords(host, d, row) for row in rows]
            if keep_generators:
                gen_slices[(level, d)] = vecs
            total_new.extend(vecs)
        next_cover = FreeSpace(space.ring, tuple(v.degree() for v in total_new))
        next_cover.target_space = host
        next_cover.target_gens = total_new
        cover = next_cover
    euler_ok = _euler_identity(entries, hs, space.ring.nvars, dmax)
    return BettiTable(entries, dmax, bool(exhausted and euler_ok), gen_slices,
                      meta={"euler_ok": euler_ok})


def _syzygy_slice(cover: FreeSpace, d: int):
    """Degree-d kernel of the evaluation map from a free cover to its target
    module: cover slice columns are (generator, monomial) pairs."""
    from .linalg import SliceBasis, slice_from_rows
    gens = cover.target_gens
    dom = cover.ring.domain
    total, layout = cover.slice_layout(d)
    if total == 0:
        return slice_from_rows(cover, d, [])
    cols = []
    for (t, off, monos) in layout:
        for mono in monos:
            cols.append(gens[t].shift(mono).slice_coords(d))
    rows = [list(r) for r in zip(*cols)]
    M = Mat.from_rows(dom, rows, total) if rows else Mat.from_rows(dom, [], total)
    K = M.kernel()
    R, piv = K.rref()
    return SliceBasis(cover, d, R, piv)


def _euler_identity(entries, hs: GradedSeries, nvars, dmax) -> bool:
    """sum (-1)^i beta_ij t^j == HS(M) (1-t)^n, truncated at dmax."""
    alt = [0] * (dmax + 1)
    for (i, j), v in entries.items():
        if j <= dmax:
            alt[j] += v if i % 2 == 0 else -v
    poly = [1]
    for _ in range(nvars):
        poly = poly_mul(poly, [1, -1])
    ref = poly_mul(list(hs.coeffs[: dmax + 1]), poly)[: dmax + 1]
    ref = ref + [0] * (dmax + 1 - len(ref))
    return alt == ref


def minimal_generator_vectors(lmod) -> list:
    """Minimal generators of the kernel submodule of a computed LModule.

    All generators live in degrees <= top + 1: beyond the first degree with
    vanishing quotient the kernel is the whole slice and the variables
    already reach it.
    """
    from .poly import vector_from_coords
    slices = {d: lmod.j_slices[d] for d in range(len(lmod.j_slices))}
    out = []
    for d in sorted(slices):
        if slices[d].dim == 0:
            continue
        for row in _minimal_new_generators(slices, d):
            out.append(vector_from_coords(lmod.space, d, row))
    return out


def lmodule_betti(lmod, dmax: int, keep_generators=False) -> BettiTable:
    """Graded Betti table of L = M/J over the polynomial ring."""
    gens = minimal_generator_vectors(lmod)
    return graded_betti(lmod.space, gens, dmax, keep_generators=keep_generators)


def check_duality(table: BettiTable, codim: int) -> dict:
    """Gorenstein / level / palindromic flags at the supplied codimension.

    Gorenstein means the last free module has rank one; level means it is
    generated in a single degree; palindromic compares rank F_i with
    rank F_{c-i}.  The offending last column is included so a failed level
    check carries its counterexample.
    """
    if not table.complete:
        raise IncompleteTable("duality checks need a complete table")
    c = codim
    flags = {
        "pdim": table.pdim,
        "pdim_matches_codim": table.pdim == c,
        "gorenstein": table.rank(c) == 1,
        "level": len(table.column_degrees(c)) == 1,
        "palindromic": all(table.rank(i) == table.rank(c - i) for i in range(c + 1)),
        "last_column": {j: table.entries.get((c, j), 0) for j in table.column_degrees(c)},
    }
    return flags


# ---------------------------------------------------------------------------
# matrix regular sequences
# ---------------------------------------------------------------------------

def poly_matrix_mul(A, B):
    k = len(A)
    return [[_dotrow(A, B, i, j, k) for j in range(k)] for i in range(k)]


def _dotrow(A, B, i, j, k):
    acc = A[0][0].ring.zero
    for ell in range(k):
        acc = acc + A[i][ell] * B[ell][j]
    return acc


def poly_matrix_det(A):
    k = len(A)
    if k == 1:
        return A[0][0]
    if k == 2:
        return A[0][0] * A[1][1] - A[0][1] * A[1][0]
    ring = A[0][0].ring
    det = ring.zero
    for j in range(k):
        minor = [[A[r][c] for c in range(k) if c != j] for r in range(1, k)]
        term = A[0][j] * poly_matrix_det(minor)
        det = det + term if j % 2 == 0 else det - term
    return det


def matrix_entry_degree(A):
    degs = {f.homogeneous_degree() for row in A for f in row if not f.is_zero()}
    if len(degs) != 1:
        raise SizeMismatch("matrix entries must be homogeneous of one degree")
    return degs.pop()


def matrix_koszul_check(matrices, lmod=None, dmax=None) -> dict:
    """Diagnostics for a would-be matrix regular sequence.

    (a) pairwise commutativity; (b) whether the determinants form a regular
    sequence, decided by comparing the quotient's Hilbert function with the
    complete-intersection prediction (always coefficientwise <=, equal iff
    regular; a strict excess is a certificate of failure); (c) membership of
    all columns in the kernel module of lmod when given; (d) the predicted
    Koszul Hilbert series size * prod(1 - t^{d_i}) / (1-t)^n against lmod.
    """
    if not matrices:
        raise SizeMismatch("no matrices")
    size = len(matrices[0])
    ring = matrices[0][0][0].ring
    n = ring.nvars
    for A in matrices:
        if len(A) != size or any(len(row) != size for row in A):
            raise SizeMismatch("matrices must be square of equal size")
    commute = all(
        _matrices_equal(poly_matrix_mul(A, B), poly_matrix_mul(B, A))
        for ai, A in enumerate(matrices) for B in matrices[ai + 1:])
    entry_degs = [matrix_entry_degree(A) for A in matrices]
    dets = [poly_matrix_det(A) for A in matrices]
    det_degs = [size * e for e in entry_degs]
    ci_top = sum(e - 1 for e in det_degs) + 1
    bound = min(dmax, ci_top) if dmax is not None else ci_top
    det_space = FreeSpace(ring, (0,))
    det_gens = [det_space.vector([f]) for f in dets]
    qh = quotient_hilbert(det_space, det_gens, bound)
    ci_num = [1]
    for e in det_degs:
        ci_num = poly_mul(ci_num, [1] + [0] * (e - 1) + [-1])
    from .series import _expand_coeffs
    ci = _expand_coeffs(ci_num, [1] * n, bound)
    regular = None
    witness = None
    if qh.coeffs == ci[: bound + 1]:
        regular = bound >= ci_top
    else:
        regular = False
        witness = next(d for d in range(bound + 1) if qh.coeffs[d] != ci[d])
    out = {
        "size": size,
        "count": len(matrices),
        "entry_degrees": entry_degs,
        "commute": commute,
        "determinants_regular": regular,
        "regularity_witness_degree": witness,
        "checked_to_degree": bound,
    }
    if lmod is not None:
        cols_in_J = True
        for A in matrices:
            for j in range(size):
                comps = [A[u][j] for u in range(size)]
                vec = lmod.space.vector([_transfer(lmod.space.ring, f) for f in comps])
                if not lmod.contains(vec):
                    cols_in_J = False
        out["columns_in_kernel"] = cols_in_J
        pred = [size * c for c in ci_koszul_numerator(entry_degs)]
        hl = lmod.hilbert()
        from .series import _expand_coeffs as ec
        pred_series = ec(pred, [1] * n, hl.truncation)
        out["koszul_series_matches"] = hl.coeffs == pred_series[: hl.truncation + 1]
        out["koszul_series"] = pred_series[: hl.truncation + 1]
    return out


def ci_koszul_numerator(entry_degs):
    num = [1]
    for e in entry_degs:
        num = poly_mul(num, [1] + [0] * (e - 1) + [-1])
    return num


def _transfer(ring, f):
    return ring.from_terms(list(f.terms.items()))


def _matrices_equal(A, B):
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def regrouping_search(columns, size, ring, seed=0, tries=200):
    """Bounded randomized search for a regrouping of column generators into
    commuting square matrices with regular determinant sequence.

    The source leaves open whether such a regrouping exists; a failed search
    is not evidence of impossibility.  Columns are given as lists of length
    `size` of polynomials; they are partitioned into len(columns)/size
    matrices column by column.
    """
    import random as _random
    rng = _random.Random(seed)
    k = len(columns) // size
    if k * size != len(columns):
        raise SizeMismatch("column count must be a multiple of the size")
    best = None
    for trial in range(tries):
        perm = list(range(len(columns)))
        rng.shuffle(perm)
        mats = []
        ok = True
        for b in range(k):
            cols = [columns[perm[b * size + j]] for j in range(size)]
            try:
                A = [[cols[j][u] for j in range(size)] for u in range(size)]
                matrix_entry_degree(A)
            except SizeMismatch:
                ok = False
                break
            mats.append(A)
        if not ok:
            continue
        res = matrix_koszul_check(mats)
        if res["commute"] and res["determinants_regular"]:
            return {"found": True, "trial": trial, "permutation": perm}
        best = res
    return {"found": False, "tries": tries, "last": best}
