"""Reduction of G(m,r,n) lowest-weight modules to G(r,r,n).

For a representation pulled back through the entrywise q-th-power surjection
(q = m/r), the Hilbert series of the irreducible quotient for G(m,r,n) is
obtained from the G(r,r,n) one by substituting t^q and multiplying by
(1 + t + ... + t^{q-1})^n.  The module-level identity behind it,

    D_i(f'(x^q) (x) v) = q x_i^{q-1} g(x^q)   with   g = D'_i(f' (x) v),

holds once the swap-class parameters of the two groups are matched (the
diagonal classes act trivially on q-th powers and do not enter).
"""

from __future__ import annotations

import random

from .dunkl import CherednikParams, VermaSpace, dunkl_apply
from .errors import InvalidParameters
from .gf import build_field
from .groups import GroupSpec
from .lmodule import compute_L
from .poly import FreeVector
from .reps import builtin_rep, qpower_pullback
from .series import GradedSeries, geometric


def matched_subgroup_params(group: GroupSpec, subgroup: GroupSpec,
                            params: CherednikParams) -> CherednikParams:
    """Parameters for G(r,r,n) matching the swap classes of G(m,r,n).

    Both groups split their swap reflections into two classes exactly when
    n = 2 and r is even, so the labels transfer one for one.
    """
    labels = subgroup.reflection_class_labels()
    values = {}
    for lab in labels:
        if lab not in params.values:
            raise InvalidParameters(f"class {lab} missing from the larger group")
        values[lab] = params.values[lab]
    return CherednikParams(subgroup, params.hbar, values, params.domain,
                           params.mode, params.seeds)


def verify_degeneration(m: int, r: int, n: int, tau_name: str, p: int,
                        seed: int = 1, spot_checks: int = 20,
                        mode: str = "specialized") -> dict:
    """Check the degeneration identity for one (m, r, n, tau') instance.

    Computes both Hilbert series independently, compares against
    h1(t^q) * (1 + t + ... + t^{q-1})^n, and spot-checks the Dunkl
    substitution identity on random polynomials in q-th powers.
    """
    field = build_field(p, m)
    big = GroupSpec(m, r, n, field=field)
    small = GroupSpec(r, r, n, field=field)
    q = m // r
    tau_small = builtin_rep(small, tau_name)
    tau_big = qpower_pullback(big, tau_small)
    if mode == "symbolic":
        par_big = CherednikParams.symbolic(big)
    else:
        par_big = CherednikParams.specialized(big, seed)
    par_small = matched_subgroup_params(big, small, par_big)

    L_small = compute_L(small, tau_small, par_small)
    L_big = compute_L(big, tau_big, par_big)
    h1 = L_small.hilbert()
    h = L_big.hilbert()
    predicted = h1.substitute_power(q, N=h.truncation).mul_poly(
        _geom_power(q, n), N=h.truncation)
    series_match = h.coeffs == predicted.coeffs

    lemma_ok, lemma_fail = _spot_check_lemma(big, small, tau_big, tau_small,
                                             par_big, par_small, q, seed, spot_checks)
    return {
        "group": {"m": m, "r": r, "n": n},
        "p": p,
        "tau": tau_name,
        "q": q,
        "h1": h1.coeffs,
        "h": h.coeffs,
        "predicted": predicted.coeffs,
        "series_match": series_match,
        "lemma_checks": spot_checks,
        "lemma_ok": lemma_ok,
        "lemma_failures": lemma_fail,
        "match": bool(series_match and lemma_ok),
    }


def _geom_power(q, n):
    out = [1]
    from .series import poly_mul
    for _ in range(n):
        out = poly_mul(out, geometric(q))
    return out


def _spot_check_lemma(big, small, tau_big, tau_small, par_big, par_small,
                      q, seed, count) -> tuple[bool, list]:
    """Random f', v, i: D_i(f'(x^q) (x) v) == q x_i^{q-1} (D'_i(f' (x) v))(x^q)."""
    rng = random.Random(seed + 977)
    sp_big = VermaSpace(big, tau_big, par_big)
    sp_small = VermaSpace(small, tau_small, par_small)
    failures = []
    n = big.n
    f = big.field
    for trial in range(count):
        # random polynomial in <= 3 monomials of small degree
        terms = []
        for _ in range(rng.randrange(1, 4)):
            exps = tuple(rng.randrange(0, 3) for _ in range(n))
            coeff = f.from_int(rng.randrange(1, f.p))
            terms.append((exps, coeff))
        fprime = sp_small.ring.from_terms(terms)
        if fprime.is_zero() or not fprime.is_homogeneous():
            # keep only the top homogeneous part so degrees are well defined
            d = fprime.degree()
            fprime = sp_small.ring.from_terms(
                [(e, c) for e, c in fprime.terms.items() if sum(e) == d])
        if fprime.degree() <= 0:
            continue
        t = rng.randrange(tau_small.dim)
        i = rng.randrange(n)
        v_small = sp_small.unit(t, fprime)
        g = dunkl_apply(sp_small, i, v_small)
        # right side: q x_i^{q-1} g(x^q), transported to the big ring
        shift = tuple(q - 1 if j == i else 0 for j in range(n))
        rhs_comps = []
        for comp in g.comps:
            moved = sp_big.ring.from_terms(
                [(tuple(q * a for a in e), c) for e, c in comp.terms.items()])
            rhs_comps.append(moved.shift(shift).scale(f.from_int(q)))
        rhs = FreeVector(sp_big, tuple(rhs_comps))
        # left side
        fbig = sp_big.ring.from_terms(
            [(tuple(q * a for a in e), c) for e, c in fprime.terms.items()])
        lhs = dunkl_apply(sp_big, i, sp_big.unit(t, fbig))
        if not (lhs - rhs).is_zero():
            failures.append({"trial": trial, "i": i, "f": str(fprime)})
    return not failures, failures
