"""The bigraded exterior complex on a complement's members.

A generator is an s-bit mask selecting members; its total subset is the
union of the selected members and its bidegree is (popcount, total).
The reduced differential deletes one selected member at a time, keeps
only the terms whose total subset is unchanged, and signs the i-th
deletion (1-based, members in increasing position order) with (-1)^i.
The full differential on generators tensored with monomials keeps every
term, weighting it by the monomial on the lost vertices; it exists here
for cross-checks only.

Blocks are indexed by (homological degree q, total subset sigma); the
reduced differential preserves sigma, so each sigma slice is a finite
chain complex of free modules with integer matrices.
"""

from __future__ import annotations

from functools import lru_cache

from .bitsets import bit_positions, popcount, sort_key
from .complexes import Complement
from .linalg import CoefficientSpec, HomologyGroup, Matrix, ZERO_GROUP, homology_at

MAX_GENERATORS = 24

# chains are dicts generator-mask -> coefficient; monomial chains are
# dicts (generator-mask, exponent-tuple) -> coefficient

Chain = dict
MonomialChain = dict


def _index_key(u: int) -> tuple[int, ...]:
    return bit_positions(u)


class TaylorComplex:
    """All bigraded data derived from one complement."""

    def __init__(self, complement: Complement):
        if complement.s > MAX_GENERATORS:
            raise ValueError(
                f"{complement.s} members exceed the supported maximum {MAX_GENERATORS}"
            )
        self.complement = complement
        self.s = complement.s
        members = complement.members
        totals = [0] * (1 << self.s)
        for u in range(1, 1 << self.s):
            low = u & -u
            totals[u] = totals[u ^ low] | members[low.bit_length() - 1]
        self.totals = totals
        by_support: dict[int, dict[int, list[int]]] = {}
        for u in range(1 << self.s):
            sigma = totals[u]
            by_support.setdefault(sigma, {}).setdefault(popcount(u), []).append(u)
        for blocks in by_support.values():
            for gens in blocks.values():
                gens.sort(key=_index_key)
        self._by_support = by_support
        self._matrices: dict[tuple[int, int], Matrix] = {}

    def total_subset(self, u: int) -> int:
        return self.totals[u]

    def supports(self) -> list[int]:
        return sorted(self._by_support, key=sort_key)

    def generators(self, sigma: int, q: int) -> list[int]:
        return self._by_support.get(sigma, {}).get(q, [])

    def block_dims(self, sigma: int) -> dict[int, int]:
        return {q: len(g) for q, g in sorted(self._by_support.get(sigma, {}).items())}

    def max_degree(self, sigma: int) -> int:
        block = self._by_support.get(sigma)
        return max(block) if block else -1

    def reduced_differential(self, u: int) -> Chain:
        """d(u) as a chain; zero for the empty generator."""
        total = self.totals[u]
        out: Chain = {}
        for i, b in enumerate(bit_positions(u), start=1):
            v = u & ~(1 << b)
            if self.totals[v] == total:
                out[v] = out.get(v, 0) + (-1 if i % 2 else 1)
        return {v: c for v, c in out.items() if c}

    def boundary_matrix(self, sigma: int, q: int) -> Matrix:
        """Matrix of d on the (q, sigma) block, mapping into (q - 1, sigma)."""
        key = (sigma, q)
        cached = self._matrices.get(key)
        if cached is not None:
            return cached
        src = self.generators(sigma, q)
        dst = self.generators(sigma, q - 1) if q >= 1 else []
        index = {u: i for i, u in enumerate(dst)}
        M = Matrix(len(dst), len(src))
        for j, u in enumerate(src):
            for v, c in self.reduced_differential(u).items():
                M.rows[index[v]][j] = c
        self._matrices[key] = M
        return M

    def boundary_matrices(self, sigma: int) -> list[Matrix]:
        """Matrices of d for q = 1 .. top degree of the sigma block."""
        return [self.boundary_matrix(sigma, q) for q in range(1, self.max_degree(sigma) + 1)]

    def block_homology(self, sigma: int, q: int, coeff: CoefficientSpec) -> HomologyGroup:
        if q < 0 or not self.generators(sigma, q):
            return ZERO_GROUP
        return homology_at(
            self.boundary_matrix(sigma, q + 1), self.boundary_matrix(sigma, q), coeff
        )

    def chain_vector(self, chain: Chain, sigma: int, q: int) -> list[int]:
        gens = self.generators(sigma, q)
        index = {u: i for i, u in enumerate(gens)}
        vec = [0] * len(gens)
        for u, c in chain.items():
            if popcount(u) != q or self.totals[u] != sigma:
                raise ValueError("chain term outside the requested block")
            vec[index[u]] = c
        return vec

    def full_differential(self, t: MonomialChain) -> MonomialChain:
        """Differential on generators tensored with monomial exponent vectors."""
        m = self.complement.m
        out: MonomialChain = {}
        for (u, exps), coeff in t.items():
            total = self.totals[u]
            for i, b in enumerate(bit_positions(u), start=1):
                v = u & ~(1 << b)
                lost = total & ~self.totals[v]
                new_exps = tuple(
                    e + (1 if lost >> k & 1 else 0) for k, e in enumerate(exps)
                )
                if len(new_exps) != m:
                    raise ValueError("exponent vector does not match the ambient size")
                key = (v, new_exps)
                c = out.get(key, 0) + (-coeff if i % 2 else coeff)
                if c:
                    out[key] = c
                else:
                    out.pop(key, None)
        return out


@lru_cache(maxsize=256)
def taylor_complex(P: Complement) -> TaylorComplex:
    return TaylorComplex(P)


def sigma_supports(P: Complement) -> list[int]:
    """Distinct total subsets over all 2**s generators, sorted (card, lex)."""
    return taylor_complex(P).supports()


def reduced_differential(P: Complement, u: int) -> Chain:
    return taylor_complex(P).reduced_differential(u)


def boundary_matrices(P: Complement, sigma: int) -> list[Matrix]:
    return taylor_complex(P).boundary_matrices(sigma)


def full_differential(P: Complement, t: MonomialChain) -> MonomialChain:
    return taylor_complex(P).full_differential(t)


def generator_sign(u: int, v: int) -> int:
    """Koszul sign of merging two ordered generator monomials; 0 on overlap."""
    if u & v:
        return 0
    inversions = 0
    for b in bit_positions(v):
        inversions += popcount(u >> (b + 1))
    return -1 if inversions % 2 else 1


def chain_product(a: Chain, b: Chain) -> Chain:
    """Bilinear extension of the signed exterior product of generators."""
    out: Chain = {}
    for u, cu in a.items():
        for v, cv in b.items():
            sign = generator_sign(u, v)
            if sign:
                w = u | v
                c = out.get(w, 0) + sign * cu * cv
                if c:
                    out[w] = c
                else:
                    out.pop(w, None)
    return out
