"""facetor: exact bigraded Tor of Stanley-Reisner face rings.

Complements of simplicial complexes are presented as ordered sequences
of vertex subsets; the package computes the bigraded Tor of the
associated face ring through the exterior complex on the members,
equips it with its product, evaluates star/link and compression
calculus, derives graded cohomology of (generalized) moment-angle
complexes, and cross-checks everything against an independent reduced
simplicial cohomology oracle.
"""

from .bitsets import full_mask, mask_of, popcount, set_str, vertices
from .complexes import (
    Complement,
    SimplicialComplex,
    complement_from_complex,
    complex_from_complement,
    compress,
    equivalent,
    full_subcomplex,
    link,
    minimalize,
    star,
)
from .hochster import CochainComplex, baskakov_check, reduced_cohomology
from .linalg import (
    QQ,
    ZZ,
    CapabilityError,
    CoefficientSpec,
    HomologyGroup,
    Integers,
    Matrix,
    PrimeField,
    Rationals,
    homology_at,
    reduce_cycle,
    smith_normal_form,
)
from .moment_angle import PairSpec, link_cohomology, maz_cohomology, s2s1_poincare, star_tor
from .support import SupportFunction, char_fn, compress_fn, delta, mu
from .taylor import (
    TaylorComplex,
    boundary_matrices,
    chain_product,
    full_differential,
    reduced_differential,
    sigma_supports,
    taylor_complex,
)
from .tor import BigradedTor, TorClass, TorRing, tor_bigraded, zk_poincare

__version__ = "0.1.0"

__all__ = [
    "BigradedTor",
    "CapabilityError",
    "CochainComplex",
    "CoefficientSpec",
    "Complement",
    "HomologyGroup",
    "Integers",
    "Matrix",
    "PairSpec",
    "PrimeField",
    "QQ",
    "Rationals",
    "SimplicialComplex",
    "SupportFunction",
    "TaylorComplex",
    "TorClass",
    "TorRing",
    "ZZ",
    "baskakov_check",
    "boundary_matrices",
    "chain_product",
    "char_fn",
    "complement_from_complex",
    "complex_from_complement",
    "compress",
    "compress_fn",
    "delta",
    "equivalent",
    "full_differential",
    "full_mask",
    "full_subcomplex",
    "homology_at",
    "link",
    "link_cohomology",
    "mask_of",
    "maz_cohomology",
    "minimalize",
    "mu",
    "popcount",
    "reduce_cycle",
    "reduced_cohomology",
    "reduced_differential",
    "s2s1_poincare",
    "set_str",
    "sigma_supports",
    "smith_normal_form",
    "star",
    "star_tor",
    "taylor_complex",
    "tor_bigraded",
    "vertices",
    "zk_poincare",
]
