"""Shared fixtures-by-import: worked inputs and brute-force oracles.

The brute-force functions here deliberately avoid the library's clever
paths (transversal dualities, facet calculus) so tests compare two
independent routes to the same answer.
"""

from __future__ import annotations

from facetor import Complement, SimplicialComplex
from facetor.bitsets import sort_key

# pentagon-with-two-triangles complex on 5 vertices
FIG1 = Complement.from_vertex_lists(5, [[1, 5], [2, 4], [1, 2, 3], [3, 4, 5]])

# three disjoint missing edges on 6 vertices: the octahedron sphere
EX513 = Complement.from_vertex_lists(6, [[1, 2], [3, 4], [5, 6]])

# minimal 6-vertex triangulation of the real projective plane
RP2_FACETS = [
    [1, 2, 3],
    [1, 2, 4],
    [1, 3, 5],
    [1, 4, 6],
    [1, 5, 6],
    [2, 3, 6],
    [2, 4, 5],
    [2, 5, 6],
    [3, 4, 5],
    [3, 4, 6],
]


def rp2_complex() -> SimplicialComplex:
    return SimplicialComplex.from_facets(6, RP2_FACETS)


def brute_force_faces(P: Complement) -> list[int]:
    """Faces of the complex of P straight from the definition: subsets
    containing no member."""
    out = []
    for tau in range(1 << P.m):
        if not any(mem & ~tau == 0 for mem in P.members):
            out.append(tau)
    return sorted(out, key=sort_key)


def brute_force_minimal_nonfaces(K: SimplicialComplex) -> list[int]:
    """Minimal non-faces by scanning all of 2^[m]."""
    nonfaces = [tau for tau in range(1 << K.m) if not K.has_face(tau)]
    minimal = []
    for tau in nonfaces:
        proper_subsets_are_faces = True
        for b in range(K.m):
            if tau >> b & 1 and not K.has_face(tau & ~(1 << b)):
                proper_subsets_are_faces = False
                break
        if proper_subsets_are_faces:
            minimal.append(tau)
    return sorted(minimal, key=sort_key)


def brute_force_star(faces: list[int], omega: int) -> list[int]:
    face_set = set(faces)
    return sorted((t for t in faces if (t | omega) in face_set), key=sort_key)


def brute_force_link(faces: list[int], omega: int) -> list[int]:
    face_set = set(faces)
    return sorted(
        (t for t in faces if (t | omega) in face_set and t & omega == 0), key=sort_key
    )


def all_small_complements(m: int, max_s: int) -> list[Complement]:
    """Every complement with up to max_s distinct members over [m],
    members in canonical order (order is irrelevant to the identities
    these are used for)."""
    masks = list(range(1 << m))
    out = []
    for s in range(max_s + 1):
        for combo in combinations(masks, s):
            out.append(Complement(m, combo))
    return out


def bareiss_determinant(rows: list[list[int]]) -> int:
    """Fraction-free determinant, used as an independent unimodularity check."""
    n = len(rows)
    if n == 0:
        return 1
    a = [row.copy() for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def random_matrix(rng, max_dim: int = 12, lo: int = -9, hi: int = 9):
    from facetor.linalg import Matrix

    nr = rng.randint(0, max_dim)
    nc = rng.randint(0, max_dim)
    return Matrix(nr, nc, [[rng.randint(lo, hi) for _ in range(nc)] for _ in range(nr)])
