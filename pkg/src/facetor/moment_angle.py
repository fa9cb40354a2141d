"""Graded cohomology of generalized moment-angle complexes.

The input is a complement plus, for each vertex, the reduced Poincare
polynomials of a pair (X_i, A_i).  The answer is assembled face by
face: each face omega contributes the block homology of the
omega-compressed complement, shifted by |tau| - q and tensored with one
reduced X class per vertex of omega and one reduced A class per vertex
of tau.  Summation can be pruned to faces because compressing by a
non-face puts the empty set into the complement and kills every block;
a debug mode walks all of 2^[m] and asserts that vanishing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import full_mask, popcount, vertices
from .complexes import Complement, complex_from_complement, compress
from .linalg import CoefficientSpec, HomologyGroup, ZERO_GROUP, is_field
from .polynomials import Poly, monomial, padd, pmul, pscale
from .tor import BigradedTor, tor_bigraded

DegreeRank = tuple[int, int]


@dataclass(frozen=True)
class PairSpec:
    """Per-vertex reduced Poincare polynomials of (X_i, A_i), stored as
    tuples of (degree >= 1, rank >= 0) pairs."""

    x_polys: tuple[tuple[DegreeRank, ...], ...]
    a_polys: tuple[tuple[DegreeRank, ...], ...]

    def __post_init__(self) -> None:
        if len(self.x_polys) != len(self.a_polys):
            raise ValueError("X and A lists must have the same length")
        for side in (self.x_polys, self.a_polys):
            for poly in side:
                for deg, rank in poly:
                    if deg < 1:
                        raise ValueError(f"reduced degree must be >= 1, got {deg}")
                    if rank < 0:
                        raise ValueError(f"rank must be >= 0, got {rank}")

    @property
    def m(self) -> int:
        return len(self.x_polys)

    @classmethod
    def uniform(cls, m: int, x_poly, a_poly) -> "PairSpec":
        return cls((tuple(x_poly),) * m, (tuple(a_poly),) * m)

    @classmethod
    def spheres_s2_s1(cls, m: int) -> "PairSpec":
        """X_i a 2-sphere, A_i a circle."""
        return cls.uniform(m, ((2, 1),), ((1, 1),))

    @classmethod
    def disks_d2_s1(cls, m: int) -> "PairSpec":
        """X_i a disk (contractible), A_i a circle: the classical case."""
        return cls.uniform(m, (), ((1, 1),))

    def x_poly(self, i: int) -> Poly:
        return {deg: rank for deg, rank in self.x_polys[i] if rank}

    def a_poly(self, i: int) -> Poly:
        return {deg: rank for deg, rank in self.a_polys[i] if rank}


def maz_cohomology(
    P: Complement,
    pairs: PairSpec,
    coeff: CoefficientSpec,
    check_all_omega: bool = False,
) -> Poly:
    """Graded dimensions of the moment-angle cohomology, degree -> rank."""
    if not is_field(coeff):
        raise ValueError("graded dimensions need field coefficients")
    if pairs.m != P.m:
        raise ValueError(f"pair spec covers {pairs.m} vertices, ambient is {P.m}")
    K = complex_from_complement(P)
    if check_all_omega:
        omegas = list(range(1 << P.m))
    else:
        omegas = K.faces()
    acc: Poly = {}
    for omega in omegas:
        tor = tor_bigraded(compress(P, omega), coeff)
        if check_all_omega and not K.has_face(omega):
            assert not tor.entries, "nonzero block survived compression by a non-face"
            continue
        x_factor: Poly = {0: 1}
        for v in vertices(omega):
            x_factor = pmul(x_factor, pairs.x_poly(v - 1))
        if not x_factor:
            continue
        rest = full_mask(P.m) & ~omega
        for (q, tau), group in tor.entries.items():
            assert tau & ~rest == 0, "block support meets the compressed face"
            contrib = pscale(monomial(popcount(tau) - q), group.rank)
            contrib = pmul(contrib, x_factor)
            for v in vertices(tau):
                contrib = pmul(contrib, pairs.a_poly(v - 1))
            acc = padd(acc, contrib)
    return dict(sorted(acc.items()))


def s2s1_poincare(P: Complement, coeff: CoefficientSpec) -> Poly:
    """(S^2, S^1) graded dimensions straight from the degree rule
    2|omega| + 2|tau| - q; an independent path cross-checking
    maz_cohomology with the sphere pair spec."""
    if not is_field(coeff):
        raise ValueError("graded dimensions need field coefficients")
    K = complex_from_complement(P)
    acc: Poly = {}
    for omega in K.faces():
        tor = tor_bigraded(compress(P, omega), coeff)
        for (q, tau), group in tor.entries.items():
            deg = 2 * popcount(omega) + 2 * popcount(tau) - q
            acc = padd(acc, {deg: group.rank})
    return dict(sorted(acc.items()))


def star_tor(P: Complement, omega: int, coeff: CoefficientSpec) -> BigradedTor:
    """Bigraded Tor of the star of omega, via the compressed complement."""
    return tor_bigraded(compress(P, omega), coeff)


def link_cohomology(P: Complement, omega: int, n: int, coeff: CoefficientSpec) -> HomologyGroup:
    """Reduced cohomology of the link of omega in degree n, read off the
    ([m] minus omega)-supported blocks of the star's Tor."""
    sigma = full_mask(P.m) & ~omega
    q = popcount(sigma) - n - 1
    if q < 0:
        return ZERO_GROUP
    return star_tor(P, omega, coeff).group(q, sigma)
