"""Exact lowest-weight representations of rational Cherednik algebras of
G(m,r,n) in positive characteristic.

Everything is computed over explicit finite fields (or rational-function
parameter fields over them): Dunkl operators, the kernel of the contravariant
form degree by degree, irreducible quotients and their Hilbert series,
irreducibility certificates, subspace-arrangement generator sets, graded
minimal free resolutions, and dihedral transition matrices.
"""

from .gf import GF, build_field
from .groups import GroupSpec, GroupElement
from .dunkl import CherednikParams, VermaSpace, beta_pairing, dunkl_apply
from .lmodule import (LModule, certify_irreducible, compute_L, compute_L_generic,
                      kernel_via_gram, quotient_by_generators, socle_dims)
from .oracles import invariant_degree_hilbert, wreath_hilbert
from .reps import builtin_rep, character_multiplicities
from .series import GradedSeries, expand_rational
from .specht import garnir_polynomial, specht_rep, standard_tableaux

__version__ = "0.1.0"

__all__ = [
    "GF", "build_field", "GroupSpec", "GroupElement", "CherednikParams",
    "VermaSpace", "beta_pairing", "dunkl_apply", "LModule", "compute_L",
    "compute_L_generic", "certify_irreducible", "kernel_via_gram",
    "quotient_by_generators", "socle_dims", "invariant_degree_hilbert",
    "wreath_hilbert", "builtin_rep", "character_multiplicities",
    "GradedSeries", "expand_rational", "garnir_polynomial", "specht_rep",
    "standard_tableaux", "__version__",
]
