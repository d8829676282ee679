"""Exact Chevalley-Eilenberg cohomology of Lie algebras over the rationals.

Vectors and cochains are lists of fractions.Fraction (ints and "p/q" strings
are accepted as input). Cochain coordinates follow the lexicographic order of
strictly increasing index tuples, module index fastest.
"""

from ._liecohom import (
    InvariantSetup,
    LieAlgebra,
    NotACocycle,
    NotALieAlgebra,
    Representation,
    abelian,
    adjoint_rep,
    central_extension,
    cochain_dim,
    cohomology,
    heisenberg,
    hs_crosscheck,
    invariant_cohomology,
    is_coboundary,
    is_cocycle,
    parse_algebra,
    resolve,
    schrodinger,
    schrodinger_mod_center,
    serialize,
    sl2,
    trivial_rep,
    verify_paper,
)

__all__ = [
    "InvariantSetup",
    "LieAlgebra",
    "NotACocycle",
    "NotALieAlgebra",
    "Representation",
    "abelian",
    "adjoint_rep",
    "central_extension",
    "cochain_dim",
    "cohomology",
    "heisenberg",
    "hs_crosscheck",
    "invariant_cohomology",
    "is_coboundary",
    "is_cocycle",
    "levi_split",
    "parse_algebra",
    "resolve",
    "schrodinger",
    "schrodinger_mod_center",
    "serialize",
    "sl2",
    "trivial_rep",
    "verify_paper",
]


def levi_split(module):
    """Setup with sl2 = (e, f, h) as the first three basis elements and the rest as the ideal."""
    dim = module.algebra.dim
    return InvariantSetup(module, [0, 1, 2], list(range(3, dim)))
