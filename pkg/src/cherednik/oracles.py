"""Closed-form Hilbert series for wreath products and invariant degrees.

These are the non-modular benchmark formulas: hook-product series for Specht
lowest weights of G(m,1,n) (with the p-th-power twist when hbar = 1), and the
invariant-degree product for the trivial lowest weight of any G(m,r,n).
"""

from __future__ import annotations

from .series import GradedSeries, expand_rational, poly_mul
from .specht import check_partition, hooks, partition_n, standard_tableaux


def pochhammer_t(n: int) -> list[int]:
    """(t)_n = (1-t)(1-t^2)...(1-t^n) as a coefficient list."""
    out = [1]
    for j in range(1, n + 1):
        factor = [1] + [0] * (j - 1) + [-1]
        out = poly_mul(out, factor)
    return out


def hook_product_poly(lam, scale: int = 1) -> list[int]:
    """H_lambda(t^scale) = prod over cells (1 - t^{scale * hook})."""
    out = [1]
    for h in hooks(lam):
        factor = [1] + [0] * (scale * h - 1) + [-1]
        out = poly_mul(out, factor)
    return out


def specht_dim(lam) -> int:
    return len(standard_tableaux(check_partition(lam)))


def lowest_degree(lam) -> int:
    """n(lambda), the degree where the Specht module first occurs."""
    return partition_n(check_partition(lam))


def wreath_hilbert(lam, m: int, n: int, hbar: int, p: int, N=None) -> GradedSeries:
    """Hilbert series of the irreducible lowest-weight module of G(m,1,n) at
    generic parameters, for the Specht pullback of shape lambda:
    dim(tau) H_lambda(t^m) / (1-t)^n, with m replaced by mp when hbar = 1.

    Valid when p does not divide m^n n!; the caller asserts that.
    """
    lam = check_partition(lam)
    if sum(lam) != n:
        raise ValueError("partition size must be n")
    scale = m * p if hbar else m
    num = [specht_dim(lam) * c for c in hook_product_poly(lam, scale)]
    if N is None:
        N = len(num) + 1
    return expand_rational(num, [1] * n, N)


def invariant_degree_hilbert(m: int, r: int, n: int, N=None) -> GradedSeries:
    """Hilbert series of the trivial lowest weight of G(m,r,n) at hbar = 0:
    (1-t^m)(1-t^{2m})...(1-t^{(n-1)m})(1-t^{nm/r}) / (1-t)^n.

    The last exponent uses the group parameter r (the source denotes it d
    without defining it; consistency with the dihedral series forces r).
    """
    if m % r:
        raise ValueError("r must divide m")
    num = [1]
    for j in range(1, n):
        num = poly_mul(num, [1] + [0] * (j * m - 1) + [-1])
    e = n * m // r
    num = poly_mul(num, [1] + [0] * (e - 1) + [-1])
    if N is None:
        N = len(num) + 1
    return expand_rational(num, [1] * n, N)
