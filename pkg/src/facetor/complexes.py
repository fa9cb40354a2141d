"""Simplicial complements and simplicial complexes, and the calculus
between them.

A complement is an ordered sequence of subsets of [m]; it presents the
square-free monomial ideal generated by its members.  The associated
complex has as faces exactly the subsets containing no member.  Order
and multiplicity of members are kept because downstream sign
conventions depend on generator positions.

Two degenerate complexes are distinguished: the VOID complex with no
faces at all (which arises when the empty set is a member of the
complement) and the EMPTY complex whose single face is the empty face.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bitsets import (
    bit_positions,
    check_ambient,
    check_subset,
    full_mask,
    mask_of,
    popcount,
    sort_key,
    subsets_of,
    vertices,
)

MAX_MEMBERS = 24


@dataclass(frozen=True)
class Complement:
    """Ordered sequence of vertex subsets over ambient [m]."""

    m: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        check_ambient(self.m)
        object.__setattr__(self, "members", tuple(self.members))
        for mem in self.members:
            check_subset(mem, self.m)

    @classmethod
    def from_vertex_lists(cls, m: int, lists: Iterable[Iterable[int]]) -> "Complement":
        check_ambient(m)
        return cls(m, tuple(mask_of(vs, m) for vs in lists))

    @property
    def s(self) -> int:
        return len(self.members)

    def member_vertex_lists(self) -> list[list[int]]:
        return [list(vertices(mem)) for mem in self.members]

    def __str__(self) -> str:
        from .bitsets import set_str

        return "{" + ", ".join(set_str(mem) for mem in self.members) + "}"


@dataclass(frozen=True)
class SimplicialComplex:
    """Simplicial complex over ambient [m], stored by its facets.

    facets == () encodes the VOID complex (no faces); facets == (0,)
    encodes the EMPTY complex whose only face is the empty face.
    Construction normalizes: duplicates and dominated facets are
    dropped and the rest sorted by (cardinality, lex).
    """

    m: int
    facets: tuple[int, ...]

    def __post_init__(self) -> None:
        check_ambient(self.m)
        for f in self.facets:
            check_subset(f, self.m)
        object.__setattr__(self, "facets", _maximal_antichain(self.facets))

    @classmethod
    def void(cls, m: int) -> "SimplicialComplex":
        return cls(m, ())

    @classmethod
    def empty(cls, m: int) -> "SimplicialComplex":
        return cls(m, (0,))

    @classmethod
    def full(cls, m: int) -> "SimplicialComplex":
        return cls(m, (full_mask(m),))

    @classmethod
    def from_facets(cls, m: int, facet_lists: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(m, tuple(mask_of(vs, m) for vs in facet_lists))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_complex(self) -> bool:
        return self.facets == (0,)

    def has_face(self, tau: int) -> bool:
        check_subset(tau, self.m)
        return any(tau & ~f == 0 for f in self.facets)

    def faces(self) -> list[int]:
        """All faces, sorted by (cardinality, lex).  Empty for VOID."""
        seen: set[int] = set()
        for f in self.facets:
            for sub in subsets_of(f):
                seen.add(sub)
        return sorted(seen, key=sort_key)

    def dim(self) -> int:
        """Top face dimension; -1 for EMPTY.  Undefined for VOID."""
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(popcount(f) for f in self.facets) - 1

    def facet_vertex_lists(self) -> list[list[int]]:
        return [list(vertices(f)) for f in self.facets]


def _maximal_antichain(masks: Sequence[int]) -> tuple[int, ...]:
    distinct = sorted(set(masks), key=sort_key, reverse=True)
    kept: list[int] = []
    for c in distinct:
        if not any(c & ~k == 0 for k in kept):
            kept.append(c)
    return tuple(sorted(kept, key=sort_key))


def _minimal_antichain(masks: Iterable[int]) -> list[int]:
    distinct = sorted(set(masks), key=sort_key)
    kept: list[int] = []
    for c in distinct:
        if not any(k & ~c == 0 for k in kept):
            kept.append(c)
    return kept


def minimal_transversals(sets: Sequence[int], m: int) -> list[int]:
    """Minimal hitting sets of a family of subsets of [m].

    Incremental construction: a transversal of the first k+1 sets is a
    transversal of the first k that already meets the new set, or such
    a transversal extended by one vertex of the new set; prune to the
    minimal elements after each step.  No transversal exists when some
    set is empty.
    """
    trans: list[int] = [0]
    for s in sets:
        if s == 0:
            return []
        cand: set[int] = set()
        for t in trans:
            if t & s:
                cand.add(t)
            else:
                for b in bit_positions(s):
                    cand.add(t | (1 << b))
        trans = _minimal_antichain(cand)
    return trans


def complex_from_complement(P: Complement) -> SimplicialComplex:
    """The complex whose faces are the subsets containing no member of P.

    A facet is the complement of a minimal transversal of P's members.
    An empty member kills every subset, giving the VOID complex.
    """
    full = full_mask(P.m)
    trans = minimal_transversals(P.members, P.m)
    return SimplicialComplex(P.m, tuple(full & ~t for t in trans))


def complement_from_complex(K: SimplicialComplex) -> Complement:
    """Minimal non-faces of K, sorted by (cardinality, lex).

    A subset is a non-face iff it meets the complement of every facet,
    so the minimal non-faces are the minimal transversals of the facet
    complements.
    """
    if K.is_void:
        raise ValueError(
            "void complex has no missing-face presentation; use Complement(m, (0,))"
        )
    full = full_mask(K.m)
    covers = [full & ~f for f in K.facets]
    members = minimal_transversals(covers, K.m)
    return Complement(K.m, tuple(sorted(members, key=sort_key)))


def minimalize(P: Complement) -> Complement:
    """Drop duplicate members and members containing another member."""
    return Complement(P.m, tuple(_minimal_antichain(P.members)))


def equivalent(P: Complement, Q: Complement) -> bool:
    """Do P and Q generate the same square-free monomial ideal?

    Containment criterion: every member of each must contain some
    member of the other.
    """
    if P.m != Q.m:
        raise ValueError(f"ambient mismatch: {P.m} != {Q.m}")
    return all(any(q & ~p == 0 for q in Q.members) for p in P.members) and all(
        any(p & ~q == 0 for p in P.members) for q in Q.members
    )


def compress(P: Complement, omega: int) -> Complement:
    """Remove omega from every member, preserving order and multiplicity."""
    check_subset(omega, P.m)
    return Complement(P.m, tuple(mem & ~omega for mem in P.members))


def full_subcomplex(K: SimplicialComplex, sigma: int) -> SimplicialComplex:
    """Faces of K contained in sigma.  Ambient m is kept, not relabeled."""
    if K.is_void:
        raise ValueError("full subcomplex of the void complex is undefined")
    check_subset(sigma, K.m)
    return SimplicialComplex(K.m, tuple(f & sigma for f in K.facets))


def star(K: SimplicialComplex, omega: int) -> SimplicialComplex:
    """Faces tau with tau | omega still a face.  VOID when omega is not a face."""
    if K.is_void:
        raise ValueError("star within the void complex is undefined")
    check_subset(omega, K.m)
    return SimplicialComplex(K.m, tuple(f for f in K.facets if omega & ~f == 0))


def link(K: SimplicialComplex, omega: int) -> SimplicialComplex:
    """Faces tau disjoint from omega with tau | omega a face."""
    if K.is_void:
        raise ValueError("link within the void complex is undefined")
    check_subset(omega, K.m)
    return SimplicialComplex(K.m, tuple(f & ~omega for f in K.facets if omega & ~f == 0))
