"""Subspace-arrangement ideals and the kernel generator sets they conjecturally
or provably produce.

The coordinate rings here are quotients by:

* I(i, m): the ideal of the union of the subspaces where n - i of the
  coordinates have equal m-th powers.  It is generated by Garnir polynomials
  of shape (n-i-1, i+1) (or (i, i, 1) when n = 2i+1) with x -> x^m
  substituted, and has an explicit Cohen-Macaulay Hilbert series.
* T(i): all squarefree monomials of degree i.
* The kernel generator sets for G(m,m,n) lowest weights with trivial tau:
  differences of m-th powers plus squarefree monomials of degree p when
  p | n; elementary symmetric polynomials in the m-th powers plus squarefree
  monomials of degree i when n = i mod p.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield

from .dunkl import CherednikParams, VermaSpace, dunkl_apply
from .errors import OutOfRegime, UnsupportedCase
from .gf import GF, build_field
from .groups import GroupSpec
from .linalg import quotient_hilbert
from .poly import FreeSpace, Poly, PolyRing
from .series import GradedSeries, expand_rational, geometric, poly_mul, poly_substitute_power
from .specht import garnir_polynomial, standard_tableaux


def _binom(n, k):
    if k < 0 or n < 0 or k > n:
        return 0
    from math import comb
    return comb(n, k)


@dataclass
class ArrangementIdeal:
    kind: str
    n: int
    generators: list
    oracle: GradedSeries | None
    space: FreeSpace
    meta: dict = dfield(default_factory=dict)

    def computed_series(self, dmax: int) -> GradedSeries:
        return quotient_hilbert(self.space, self.generators, dmax)

    def oracle_series(self, dmax: int) -> GradedSeries:
        if self.oracle is None:
            raise UnsupportedCase("no closed-form oracle for this ideal")
        if self.oracle.closed is not None:
            return expand_rational(self.oracle.closed[0], self.oracle.closed[1], dmax)
        if self.oracle.truncation < dmax:
            raise UnsupportedCase("oracle truncation too short")
        return GradedSeries(self.oracle.coeffs[: dmax + 1])

    def oracle_matches(self, dmax: int) -> bool:
        return self.computed_series(dmax).coeffs == self.oracle_series(dmax).coeffs


def _poly_space(field: GF, n: int) -> FreeSpace:
    names = tuple(f"x{i+1}" for i in range(n)) if n > 3 else ("x", "y", "z")[:n]
    return FreeSpace(PolyRing(field, names), (0,))


def garnir_shape_for_flats(i: int, n: int):
    """Shape whose Garnir polynomials generate I(i, 1)."""
    if n >= 2 * i + 2:
        return (n - i - 1, i + 1)
    if n == 2 * i + 1:
        return (i, i, 1)
    raise OutOfRegime(f"need 2i < n, got i={i}, n={n}")


def ideal_I(i: int, m: int, n: int, field: GF) -> ArrangementIdeal:
    """I(i, m) with its closed-form Hilbert oracle.

    The numerator below the (1-t)^{i+1} denominator is
      sum_j C(n-i+j-2, j) t^{mj} (+ C(n-1, i-1) t^{m(i+1)} when n >= 2i+2)
    times the power-substitution factor (1 + t + ... + t^{m-1})^{n-i-1}
    (exponent i when n = 2i+1).
    """
    shape = garnir_shape_for_flats(i, n)
    space = _poly_space(field, n)
    gens = []
    for t in standard_tableaux(shape):
        f = garnir_polynomial(t, space.ring)
        gens.append(space.vector([f.substitute_power(m)]))
    if n >= 2 * i + 2:
        num = [0] * (m * (i + 1) + 1)
        for j in range(i + 1):
            num[m * j] = _binom(n - i + j - 2, j)
        num[m * (i + 1)] += _binom(n - 1, i - 1)
        geom_pow = n - i - 1
    else:
        num = [0] * (m * (i + 1) + 1)
        for j in range(i + 2):
            num[m * j] = _binom(n - i + j - 2, j)
        geom_pow = i
    for _ in range(geom_pow):
        num = poly_mul(num, geometric(m))
    oracle = expand_rational(num, [1] * (i + 1), len(num) + 6)
    return ArrangementIdeal(f"I({i},{m})", n, gens, oracle, space,
                            meta={"shape": shape, "codim": n - i - 1})


def squarefree_monomials(space: FreeSpace, i: int):
    import itertools
    out = []
    for comb_idx in itertools.combinations(range(space.ring.nvars), i):
        e = [0] * space.ring.nvars
        for j in comb_idx:
            e[j] = 1
        out.append(space.vector([space.ring.monomial(e)]))
    return out


def ideal_T(i: int, n: int, field: GF) -> ArrangementIdeal:
    """T(i): squarefree monomials of degree i; level algebra with linear
    resolution and Hilbert series sum_j C(n-i+j, n-i) t^j / (1-t)^{i-1}."""
    if not 1 <= i <= n:
        raise OutOfRegime(f"need 1 <= i <= n")
    space = _poly_space(field, n)
    gens = squarefree_monomials(space, i)
    num = [_binom(n - i + j, n - i) for j in range(i)]
    oracle = expand_rational(num, [1] * (i - 1), max(len(num) + 6, 12))
    return ArrangementIdeal(f"T({i})", n, gens, oracle, space,
                            meta={"codim": n - i + 1, "degree": _binom(n, i - 1)})


def elementary_symmetric(space: FreeSpace, j: int, power: int = 1) -> Poly:
    import itertools
    terms = []
    one = space.ring.domain.one
    for comb_idx in itertools.combinations(range(space.ring.nvars), j):
        e = [0] * space.ring.nvars
        for a in comb_idx:
            e[a] = power
        terms.append((tuple(e), one))
    return space.ring.from_terms(terms)


def power_differences(space: FreeSpace, m: int):
    """x_j^m - x_{j+1}^m for consecutive j (spans all differences)."""
    out = []
    ring = space.ring
    for j in range(ring.nvars - 1):
        e1 = [0] * ring.nvars
        e2 = [0] * ring.nvars
        e1[j] = m
        e2[j + 1] = m
        out.append(space.vector([ring.monomial(e1) - ring.monomial(e2)]))
    return out


def conjectured_J_generators(m: int, n: int, p: int, field: GF = None,
                             tau: str = "trivial") -> ArrangementIdeal:
    """Generator set for the kernel of the contravariant form on the trivial
    lowest weight of G(m,m,n) in characteristic p.

    p | n: differences of the m-th powers plus squarefree monomials of degree
    p (proved equal to the kernel); top degree (p-1)m.

    n = i mod p with 0 < i < p: e_1(x^m)..e_n(x^m) plus squarefree monomials
    of degree i (proved inside the kernel; equality known for i = 2), with
    closed-form oracle and socle dimension C(n-1, i-1).

    m = 1 (symmetric group): the flat ideal I(i, 1) generators together with
    the conjectural regular-sequence extras, flagged conjectural.
    """
    if tau != "trivial":
        raise UnsupportedCase("generator sets are only described for trivial tau")
    if field is None:
        field = build_field(p, max(m, 1))
    space = _poly_space(field, n)
    i = n % p
    if m == 1:
        gens = [g for g in ideal_I(i, 1, n, field).generators]
        extras = []
        ring = space.ring
        if i in (0, 1):
            extras.append(space.vector([elementary_symmetric(space, 1)]))
        if i == 1:
            e1 = [0] * n
            e1[n - 2] = p
            t1 = ring.monomial(e1)
            e2 = [0] * n
            e2[n - 2] = 1
            e2[n - 1] = p - 1
            t2 = ring.monomial(e2)
            e3 = [0] * n
            e3[n - 1] = p
            t3 = ring.monomial(e3)
            extras.append(space.vector([t1 - t2 + t3]))
        gens = gens + extras
        return ArrangementIdeal(f"J'(m=1,i={i})", n, gens, None, space,
                                meta={"conjectural": True, "extras": len(extras)})
    if i == 0:
        gens = power_differences(space, m) + squarefree_monomials(space, p)
        return ArrangementIdeal(f"J'(p|n)", n, gens, None, space,
                                meta={"top_degree": (p - 1) * m, "proved": True})
    gens = [space.vector([elementary_symmetric(space, j, power=m)]) for j in range(1, n + 1)]
    gens += squarefree_monomials(space, i)
    num = [_binom(n - i + j, n - i) for j in range(i)]
    for j in range(1, i):
        num = poly_mul(num, [1] + [0] * (j * m - 1) + [-1])
    top = m * i * (i - 1) // 2
    oracle = expand_rational(num, [1] * (i - 1), top + 4)
    return ArrangementIdeal(f"J'(n={i} mod p)", n, gens, oracle, space,
                            meta={"socle_dim": _binom(n - 1, i - 1),
                                  "top_degree": top,
                                  "proved_contained": True,
                                  "equality_proved": i == 2})


def power_substitute(ideal: ArrangementIdeal, m: int) -> ArrangementIdeal:
    """Substitute x -> x^m in the generators and transform the oracle by
    P(t) / (1-t)^d  ->  P(t^m)(1 + t + ... + t^{m-1})^{n-d} / (1-t)^d."""
    gens = [ideal.space.vector([f.substitute_power(m) for f in g.comps])
            for g in ideal.generators]
    oracle = None
    if ideal.oracle is not None and ideal.oracle.closed is not None:
        num, dens = ideal.oracle.closed
        if any(e != 1 for e in dens):
            raise UnsupportedCase("oracle denominator must be a power of 1-t")
        d = len(dens)
        num2 = poly_substitute_power(num, m)
        for _ in range(ideal.n - d):
            num2 = poly_mul(num2, geometric(m))
        oracle = expand_rational(num2, dens, max(len(num2) + 6, ideal.oracle.truncation))
    return ArrangementIdeal(f"{ideal.kind}^({m})", ideal.n, gens, oracle,
                            ideal.space, dict(ideal.meta))


def socle_specht_report(lmod, m: int, i: int) -> dict:
    """Identify the top-degree socle of A/J' with the i-1st exterior power of
    the reflection representation, realized as the hook Specht module
    S_(n-i+1, 1^[i-1]) through its first-column Garnir polynomials with
    x -> x^m substituted.

    Structural check (works in any characteristic): the twisted Garnir images
    span the socle slice and the group action on them matches the Specht
    matrices through the permutation quotient.
    """
    from .linalg import Mat
    from .specht import specht_rep
    group = lmod.group
    n = group.n
    shape = tuple([n - i + 1] + [1] * (i - 1))
    S = specht_rep(shape, group.field)
    space = lmod.space
    top = lmod.top_degree
    dom = space.ring.domain
    imgs = []
    for t in S.tableaux:
        f = garnir_polynomial(t, S.ring)
        moved = space.ring.from_terms([(e, c) for e, c in f.substitute_power(m).terms.items()])
        vec = space.unit(0, moved)
        imgs.append(vec)
    rows = [lmod.j_slices[top].project_coords(
        Mat.from_rows(dom, [v.slice_coords(top)])).row_list()[0] for v in imgs]
    rank = Mat.from_rows(dom, rows, lmod.dims[top]).rank()
    spans = rank == lmod.dims[top] == S.dim
    # equivariance against the Specht matrices
    from .groups import act_vector
    equivariant = True
    for g in group.generators():
        mat = S.matrix(g.perm)
        for t_idx in range(S.dim):
            gv = act_vector(group, g, imgs[t_idx])
            lhs = lmod.j_slices[top].project_coords(
                Mat.from_rows(dom, [gv.slice_coords(top)])).row_list()[0]
            rhs = [dom.zero] * lmod.dims[top]
            for u in range(S.dim):
                c = mat[u][t_idx]
                if group.field.is_zero(c):
                    continue
                for pos, val in enumerate(rows[u]):
                    rhs[pos] = dom.add(rhs[pos], dom.mul(val, space.embed(c)))
            if lhs != rhs:
                equivariant = False
    return {"shape": shape, "dim": S.dim, "socle_dim": lmod.dims[top],
            "spans": spans, "equivariant": equivariant,
            "match": bool(spans and equivariant)}


def verify_dunkl_kill(m: int, n: int, p: int, i: int, mode: str = "auto",
                      seeds=(1, 2, 3)) -> dict:
    """Apply every Dunkl operator of G(m,1,n) to every generator of I(i, m)
    and report whether all images vanish identically.

    Vanishing is the content of the congruence n = i mod p; the report
    records the congruence status and any nonzero residuals (running with a
    violated congruence is allowed and should produce residuals).
    """
    field = build_field(p, m)
    group = GroupSpec(m, 1, n, field=field)
    nclasses = len(group.reflection_class_labels())
    use_symbolic = mode == "symbolic" or (mode == "auto" and nclasses <= 3)
    ideal = ideal_I(i, m, n, field)
    congruence_ok = (n - i) % p == 0
    runs = []
    param_sets = ([CherednikParams.symbolic(group)] if use_symbolic
                  else [CherednikParams.specialized(group, s) for s in seeds])
    residuals = []
    for params in param_sets:
        from .reps import trivial_rep
        space = VermaSpace(group, trivial_rep(group), params)
        for gidx, g in enumerate(ideal.generators):
            vec = space.vector([space.ring.from_terms(
                [(e, space.embed(c)) for e, c in f.terms.items()]) for f in g.comps])
            for op in range(n):
                img = dunkl_apply(space, op, vec)
                if not img.is_zero():
                    residuals.append({"generator": gidx, "operator": op,
                                      "residual": str(img)})
        runs.append(params.mode)
    return {
        "group": {"m": m, "r": 1, "n": n},
        "p": p,
        "i": i,
        "congruence_ok": congruence_ok,
        "mode": "symbolic" if use_symbolic else "specialized",
        "generators": len(ideal.generators),
        "killed": not residuals,
        "residuals": residuals[:5],
        "match": (not residuals) == congruence_ok,
    }
