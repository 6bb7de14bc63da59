"""Rank-3 kernel generator matrices and the rank-4 fixture matrices.

For G(m,m,3) with the two-dimensional lowest weight, the six kernel
generators arrange into three commuting 2x2 matrices whose determinants form
a regular sequence; the package builds them for any m.  For G(2,2,4) on the
pulled-back Specht module of shape (3,1), the twelve generators in
characteristics 7 and 11 are fixed data (stored as JSON fixtures), and there
the matrices neither commute nor have regular determinants.
"""

from __future__ import annotations

import json
from importlib import resources

from .gf import GF
from .poly import PolyRing


def gamma0_matrices(m: int, ring: PolyRing):
    """The three 2x2 matrices whose columns generate the kernel for the
    two-dimensional lowest weight of G(m,m,3): diag(xyz), diag(x^m+y^m+z^m),
    and [[-x^m, y^m], [z^m, -x^m]]."""
    x, y, z = ring.gens()
    zero = ring.zero
    e1 = x * y * z
    e2 = x ** m + y ** m + z ** m
    mats = [
        [[e1, zero], [zero, e1]],
        [[e2, zero], [zero, e2]],
        [[-(x ** m), y ** m], [z ** m, -(x ** m)]],
    ]
    return mats


def gamma_i_generators(m: int, i: int, space):
    """The nine generators for the three-dimensional gamma_i lowest weight of
    G(m,m,3), 2 <= i <= m-1: coordinate multiples, opposite squarefree
    quadratics, and the three mixed (m-i)-th power relations."""
    ring = space.ring
    x, y, z = ring.gens()
    zero = ring.zero
    w = m - i
    gens = [
        (x, zero, zero), (zero, y, zero), (zero, zero, z),
        (y * z, zero, zero), (zero, x * z, zero), (zero, zero, x * y),
        (z ** w, zero, x ** w), (y ** w, x ** w, zero), (zero, z ** w, y ** w),
    ]
    return [space.vector(list(g)) for g in gens]


def load_fixture(name: str) -> dict:
    text = resources.files("cherednik.fixtures").joinpath(name).read_text()
    return json.loads(text)


def fixture_matrices(tag: str, ring: PolyRing):
    """Matrices for the G(2,2,4) Specht-(3,1) kernel in a fixed
    characteristic; tag is "g224-char7" or "g224-char11"."""
    data = load_fixture("g224_matrices.json")[tag]
    dom = ring.domain
    mats = []
    for mat in data["matrices"]:
        rows = []
        for row in mat:
            rows.append([_parse_poly(ring, entry) for entry in row])
        mats.append(rows)
    return mats


def _parse_poly(ring, terms):
    out = []
    for exps, coeff in terms:
        out.append((tuple(exps), ring.domain.from_int(coeff)))
    return ring.from_terms(out)
