"""Exact linear algebra over Z, Q, and F_p.

Smith normal form with explicit unimodular transforms, kernels and
ranks over fields, homology groups of chain complex slices with
representative cycles, and reduction of cycles to coordinates in a
chosen homology basis.  Everything is arbitrary-precision: Python ints
over Z and F_p, fractions.Fraction over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence


class CapabilityError(Exception):
    """The requested computation is outside the supported coefficient range."""


@dataclass(frozen=True)
class Rationals:
    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class Integers:
    def __str__(self) -> str:
        return "Z"


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self) -> None:
        p = self.p
        if not isinstance(p, int) or p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p!r} is not a prime")

    def __str__(self) -> str:
        return f"F{self.p}"


QQ = Rationals()
ZZ = Integers()

CoefficientSpec = Rationals | Integers | PrimeField


def is_field(coeff: CoefficientSpec) -> bool:
    return isinstance(coeff, (Rationals, PrimeField))


class Matrix:
    """Dense matrix with explicit shape (shape survives zero dimensions)."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            rows = [[0] * ncols for _ in range(nrows)]
        else:
            rows = [list(r) for r in rows]
            if len(rows) != nrows or any(len(r) != ncols for r in rows):
                raise ValueError("row data does not match the declared shape")
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        M = cls(n, n)
        for i in range(n):
            M.rows[i][i] = 1
        return M

    def copy(self) -> "Matrix":
        return Matrix(self.nrows, self.ncols, self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        out = Matrix(self.nrows, other.ncols)
        for i in range(self.nrows):
            srow = self.rows[i]
            orow = out.rows[i]
            for k in range(self.ncols):
                a = srow[k]
                if a:
                    brow = other.rows[k]
                    for j in range(other.ncols):
                        orow[j] += a * brow[j]
        return out

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols}, {self.rows!r})"


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(x, y, g) with x*a + y*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


class _SnfState:
    """Mutable SNF workspace tracking D = U M V together with the inverses.

    Tracking U or V can be switched off when a caller only needs one
    side; skipping the updates matters on the larger blocks.
    """

    def __init__(self, M: Matrix, track_u: bool = True, track_v: bool = True):
        self.nr = M.nrows
        self.nc = M.ncols
        self.d = [row.copy() for row in M.rows]
        ident_r = Matrix.identity(self.nr).rows
        ident_c = Matrix.identity(self.nc).rows
        self.u = [row.copy() for row in ident_r] if track_u else None
        self.uinv = [row.copy() for row in ident_r] if track_u else None
        self.v = [row.copy() for row in ident_c] if track_v else None
        self.vinv = [row.copy() for row in ident_c] if track_v else None

    # Row ops apply E on the left: D <- E D, U <- E U, Uinv <- Uinv E^-1.

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        self.d[i], self.d[j] = self.d[j], self.d[i]
        if self.u is not None:
            self.u[i], self.u[j] = self.u[j], self.u[i]
            for row in self.uinv:
                row[i], row[j] = row[j], row[i]

    def negate_row(self, i: int) -> None:
        self.d[i] = [-x for x in self.d[i]]
        if self.u is not None:
            self.u[i] = [-x for x in self.u[i]]
            for row in self.uinv:
                row[i] = -row[i]

    def combine_rows(self, i: int, j: int, x: int, y: int, z: int, w: int) -> None:
        """rows (i, j) <- (x ri + y rj, z ri + w rj); needs xw - yz == 1."""
        mats = (self.d, self.u) if self.u is not None else (self.d,)
        for mat in mats:
            ri, rj = mat[i], mat[j]
            mat[i] = [x * a + y * b for a, b in zip(ri, rj)]
            mat[j] = [z * a + w * b for a, b in zip(ri, rj)]
        # inverse of [[x, y], [z, w]] is [[w, -y], [-z, x]]
        if self.uinv is not None:
            for row in self.uinv:
                a, b = row[i], row[j]
                row[i] = w * a - z * b
                row[j] = -y * a + x * b

    # Column ops apply E on the right: D <- D E, V <- V E, Vinv <- E^-1 Vinv.

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        for row in self.d:
            row[i], row[j] = row[j], row[i]
        if self.v is not None:
            for row in self.v:
                row[i], row[j] = row[j], row[i]
            self.vinv[i], self.vinv[j] = self.vinv[j], self.vinv[i]

    def add_row_multiple(self, i: int, j: int, c: int) -> None:
        """row_i += c * row_j."""
        self.d[i] = [a + c * b for a, b in zip(self.d[i], self.d[j])]
        if self.u is not None:
            self.u[i] = [a + c * b for a, b in zip(self.u[i], self.u[j])]
            for row in self.uinv:
                row[j] -= c * row[i]

    def add_col_multiple(self, i: int, j: int, c: int) -> None:
        """col_i += c * col_j."""
        mats = (self.d, self.v) if self.v is not None else (self.d,)
        for mat in mats:
            for row in mat:
                row[i] += c * row[j]
        if self.vinv is not None:
            ri = self.vinv[i]
            rj = self.vinv[j]
            self.vinv[j] = [b - c * a for a, b in zip(ri, rj)]

    def _min_abs_position(self, k: int):
        """Least-|value| nonzero entry of the trailing submatrix,
        tie-break by (row, col); None when the submatrix is zero."""
        d = self.d
        best = None
        best_abs = None
        for i in range(k, self.nr):
            row = d[i]
            for j in range(k, self.nc):
                val = row[j]
                if val:
                    a = -val if val < 0 else val
                    if best_abs is None or a < best_abs:
                        best, best_abs = (i, j), a
                        if a == 1:
                            return best
        return best

    def _clear_position(self, k: int) -> None:
        """Zero out row k and column k beyond the (positive) pivot at
        (k, k), by balanced-remainder reduction: remainders stay at most
        half the pivot, and the smallest remainder is swapped into the
        pivot slot before the next round, so the pivot shrinks
        geometrically and entries never blow up."""
        d = self.d
        while True:
            pivot = d[k][k]
            dirty = False
            for i in range(k + 1, self.nr):
                b = d[i][k]
                if b:
                    q = (b + (pivot >> 1)) // pivot
                    if q:
                        self.add_row_multiple(i, k, -q)
                    if d[i][k]:
                        dirty = True
            for j in range(k + 1, self.nc):
                b = d[k][j]
                if b:
                    q = (b + (pivot >> 1)) // pivot
                    if q:
                        self.add_col_multiple(j, k, -q)
                    if d[k][j]:
                        dirty = True
            if not dirty:
                return
            best = None
            best_abs = None
            for i in range(k + 1, self.nr):
                val = d[i][k]
                if val:
                    a = -val if val < 0 else val
                    if best_abs is None or a < best_abs:
                        best, best_abs = ("r", i), a
            for j in range(k + 1, self.nc):
                val = d[k][j]
                if val:
                    a = -val if val < 0 else val
                    if best_abs is None or a < best_abs:
                        best, best_abs = ("c", j), a
            if best[0] == "r":
                self.swap_rows(k, best[1])
            else:
                self.swap_cols(k, best[1])
            if d[k][k] < 0:
                self.negate_row(k)

    def diagonalize(self) -> int:
        """Main elimination; returns the number of nonzero diagonal entries."""
        rank = 0
        for k in range(min(self.nr, self.nc)):
            pos = self._min_abs_position(k)
            if pos is None:
                break
            self.swap_rows(k, pos[0])
            self.swap_cols(k, pos[1])
            if self.d[k][k] < 0:
                self.negate_row(k)
            self._clear_position(k)
            rank += 1
        return rank

    def _clear_pair(self, i: int, j: int) -> None:
        """Rediagonalize the 2x2 corner after col_i += col_j put the
        (j, j) entry at (j, i): one gcd row combination plus one exact
        column clear."""
        d = self.d
        a, b = d[i][i], d[j][i]
        x, y, g = xgcd(a, b)
        self.combine_rows(i, j, x, y, -(b // g), a // g)
        if d[i][j]:
            self.add_col_multiple(j, i, -(d[i][j] // d[i][i]))

    def enforce_divisibility(self, rank: int) -> None:
        d = self.d
        for _ in range(rank * rank + 1):
            dirty = False
            for i in range(rank - 1):
                a, b = d[i][i], d[i + 1][i + 1]
                if b % a != 0:
                    dirty = True
                    self.add_col_multiple(i, i + 1, 1)
                    self._clear_pair(i, i + 1)
            if not dirty:
                return
        raise AssertionError("divisibility normalization did not converge")

    def normalize_signs(self, rank: int) -> None:
        for i in range(rank):
            if self.d[i][i] < 0:
                self.negate_row(i)


def _snf_state(M: Matrix, track_u: bool = True, track_v: bool = True) -> tuple[_SnfState, int]:
    st = _SnfState(M, track_u, track_v)
    rank = st.diagonalize()
    st.enforce_divisibility(rank)
    st.normalize_signs(rank)
    if __debug__:
        diag = [st.d[i][i] for i in range(rank)]
        assert all(d > 0 for d in diag)
        assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
    return st, rank


def smith_normal_form(M: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """(U, D, V) with U M V = D diagonal, d_1 | d_2 | ..., U and V unimodular."""
    st, _ = _snf_state(M)
    U = Matrix(M.nrows, M.nrows, st.u)
    D = Matrix(M.nrows, M.ncols, st.d)
    V = Matrix(M.ncols, M.ncols, st.v)
    if __debug__ and M.nrows <= 40 and M.ncols <= 40:
        assert (U @ M) @ V == D
        assert Matrix(M.nrows, M.nrows, st.uinv) @ U == Matrix.identity(M.nrows)
        assert V @ Matrix(M.ncols, M.ncols, st.vinv) == Matrix.identity(M.ncols)
    return U, D, V


def snf_diagonal(M: Matrix) -> list[int]:
    """Nonzero invariant factors of M, in divisibility order."""
    st, rank = _snf_state(M, track_u=False, track_v=False)
    return [st.d[i][i] for i in range(rank)]


@dataclass(frozen=True)
class HomologyGroup:
    """Finitely generated module: free rank, invariant factors > 1, and
    integer cycle vectors spanning the free part in the block basis."""

    rank: int
    torsion: tuple[int, ...] = ()
    representatives: tuple[tuple, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def signature(self) -> tuple:
        return (self.rank, self.torsion)

    def __str__(self) -> str:
        parts = ["Z" if self.rank == 1 else f"Z^{self.rank}"] if self.rank else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


ZERO_GROUP = HomologyGroup(0)


class _QOps:
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_int(c):
        return Fraction(c)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def inv(a):
        return 1 / a

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def is_zero(a):
        return a == 0


class _FpOps:
    def __init__(self, p: int):
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, c):
        return c % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def neg(self, a):
        return (-a) % self.p

    @staticmethod
    def is_zero(a):
        return a == 0


def _field_ops(coeff: CoefficientSpec):
    if isinstance(coeff, Rationals):
        return _QOps()
    if isinstance(coeff, PrimeField):
        return _FpOps(coeff.p)
    raise ValueError(f"{coeff} is not a field")


def _to_field_rows(M: Matrix, fo) -> list[list]:
    return [[fo.from_int(x) for x in row] for row in M.rows]


def _rref(rows: list[list], ncols: int, fo) -> tuple[list[list], list[tuple[int, int]]]:
    rows = [r.copy() for r in rows]
    pivots: list[tuple[int, int]] = []
    pr = 0
    for c in range(ncols):
        pv = None
        for r in range(pr, len(rows)):
            if not fo.is_zero(rows[r][c]):
                pv = r
                break
        if pv is None:
            continue
        rows[pr], rows[pv] = rows[pv], rows[pr]
        inv = fo.inv(rows[pr][c])
        rows[pr] = [fo.mul(x, inv) for x in rows[pr]]
        for r in range(len(rows)):
            if r != pr and not fo.is_zero(rows[r][c]):
                f = rows[r][c]
                prow = rows[pr]
                rows[r] = [fo.sub(x, fo.mul(f, y)) for x, y in zip(rows[r], prow)]
        pivots.append((pr, c))
        pr += 1
        if pr == len(rows):
            break
    return rows, pivots


def field_rank(M: Matrix, coeff: CoefficientSpec) -> int:
    fo = _field_ops(coeff)
    _, pivots = _rref(_to_field_rows(M, fo), M.ncols, fo)
    return len(pivots)


def _nullspace_columns(M: Matrix, fo) -> list[list]:
    """Canonical nullspace basis (one vector per free column of the RREF)."""
    rr, pivots = _rref(_to_field_rows(M, fo), M.ncols, fo)
    pivot_cols = {c for _, c in pivots}
    basis = []
    for f in range(M.ncols):
        if f in pivot_cols:
            continue
        v = [fo.zero] * M.ncols
        v[f] = fo.one
        for r, c in pivots:
            v[c] = fo.neg(rr[r][f])
        basis.append(v)
    return basis


def _solve_columns(a_rows: list[list], na: int, b_rows: list[list], nb: int, fo):
    """Solve A X = B columnwise; None if inconsistent.  Free variables are 0."""
    aug = [ar + br for ar, br in zip(a_rows, b_rows)]
    rr, pivots = _rref(aug, na + nb, fo)
    if any(c >= na for _, c in pivots):
        return None
    X = [[fo.zero] * nb for _ in range(na)]
    for r, c in pivots:
        for j in range(nb):
            X[c][j] = rr[r][na + j]
    return X


def _primitive_int_vector(vec: list, fo) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector, first nonzero > 0."""
    if isinstance(fo, _FpOps):
        return tuple(int(x) for x in vec)
    fracs = [Fraction(x) for x in vec]
    denom = 1
    for x in fracs:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    for x in ints:
        if x:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)


def _sign_normalized(vec: list[int]) -> tuple[int, ...]:
    for x in vec:
        if x:
            return tuple(-y for y in vec) if x < 0 else tuple(vec)
    return tuple(vec)


def _column_space_pivot_rows(X: list[list], ncols_x: int, k: int, fo) -> set[int]:
    """Leading coordinate positions of the column space of the k x n matrix X."""
    transposed = [[X[i][j] for i in range(k)] for j in range(ncols_x)]
    _, pivots = _rref(transposed, k, fo)
    return {c for _, c in pivots}


def homology_at(d_in: Matrix, d_out: Matrix, coeff: CoefficientSpec) -> HomologyGroup:
    """ker(d_out) / im(d_in) at the middle term of  . --d_in--> . --d_out--> .

    d_in has shape (n, b), d_out has shape (a, n).  Raises ValueError
    when the maps do not compose to zero.
    """
    if d_out.ncols != d_in.nrows:
        raise ValueError(f"shape mismatch: d_out is {d_out.nrows}x{d_out.ncols}, d_in is {d_in.nrows}x{d_in.ncols}")
    if not (d_out @ d_in).is_zero():
        raise ValueError("not a chain complex: d_out composed with d_in is nonzero")
    n = d_out.ncols
    if n == 0:
        return ZERO_GROUP
    if isinstance(coeff, Integers):
        return _homology_integers(d_in, d_out)
    return _homology_field(d_in, d_out, coeff)


def _homology_field(d_in: Matrix, d_out: Matrix, coeff: CoefficientSpec) -> HomologyGroup:
    fo = _field_ops(coeff)
    kernel = _nullspace_columns(d_out, fo)
    k = len(kernel)
    if k == 0:
        return ZERO_GROUP
    krows = [[kernel[j][i] for j in range(k)] for i in range(d_out.ncols)]
    X = _solve_columns(krows, k, _to_field_rows(d_in, fo), d_in.ncols, fo)
    if X is None:
        raise ValueError("not a chain complex: image does not lie in the kernel")
    pivot_rows = _column_space_pivot_rows(X, d_in.ncols, k, fo)
    reps = tuple(
        _primitive_int_vector(kernel[j], fo) for j in range(k) if j not in pivot_rows
    )
    return HomologyGroup(len(reps), (), reps)


def _homology_integers(d_in: Matrix, d_out: Matrix) -> HomologyGroup:
    n = d_out.ncols
    if d_out.is_zero():
        # kernel is everything; image coordinates are d_in itself
        k = n
        kernel_cols = None
        X = d_in
    else:
        st, rank_out = _snf_state(d_out, track_u=False)
        ker_positions = [j for j in range(n) if j >= rank_out]
        k = len(ker_positions)
        if k == 0:
            return ZERO_GROUP
        kernel_cols = [[st.v[i][j] for i in range(n)] for j in ker_positions]
        # coordinates of d_in columns in the kernel basis: the kernel rows
        # of Vinv @ d_in (the other rows must vanish by the chain condition)
        rows = []
        for j in range(n):
            vrow = st.vinv[j]
            row = [
                sum(vrow[i] * d_in.rows[i][c] for i in range(n) if vrow[i])
                for c in range(d_in.ncols)
            ]
            if j < rank_out:
                if any(row):
                    raise ValueError("not a chain complex: image does not lie in the kernel")
            else:
                rows.append(row)
        X = Matrix(k, d_in.ncols, rows)
    if X.ncols == 0 or X.is_zero():
        rank_in = 0
        torsion: tuple[int, ...] = ()
        uinv2 = None
    else:
        st2, rank_in = _snf_state(X, track_v=False)
        factors = [st2.d[i][i] for i in range(rank_in)]
        torsion = tuple(f for f in factors if f > 1)
        uinv2 = st2.uinv
    reps = []
    for j in range(rank_in, k):
        coeffs = [uinv2[t][j] for t in range(k)] if uinv2 is not None else None
        if kernel_cols is None:
            # kernel basis is the standard basis
            if coeffs is None:
                vec = [1 if i == j else 0 for i in range(n)]
            else:
                vec = coeffs
        else:
            vec = [0] * n
            if coeffs is None:
                vec = list(kernel_cols[j])
            else:
                for t, c in enumerate(coeffs):
                    if c:
                        col = kernel_cols[t]
                        for i in range(n):
                            vec[i] += c * col[i]
        reps.append(_sign_normalized(vec))
    return HomologyGroup(k - rank_in, torsion, tuple(reps))


def reduce_cycle(
    z: Sequence,
    group: HomologyGroup,
    boundaries: Matrix,
    coeff: CoefficientSpec,
) -> tuple:
    """Coordinates of the class of z in the group's representative basis.

    Solves z = sum(c_i rep_i) + boundary exactly; the representative
    part is unique because the representatives are independent modulo
    boundaries.  Over Z this is only defined in torsion-free blocks.
    """
    if isinstance(coeff, Integers) and group.torsion:
        raise CapabilityError("unsupported: ring reduction over Z with torsion")
    n = len(z)
    if boundaries.nrows != n:
        raise ValueError("boundary matrix does not match the chain length")
    fo = _field_ops(QQ if isinstance(coeff, Integers) else coeff)
    reps = group.representatives
    a_rows = [
        [fo.from_int(rep[i]) for rep in reps] + [fo.from_int(x) for x in boundaries.rows[i]]
        for i in range(n)
    ]
    b_rows = [[fo.from_int(z[i])] for i in range(n)]
    X = _solve_columns(a_rows, len(reps) + boundaries.ncols, b_rows, 1, fo)
    if X is None:
        raise ValueError("not a cycle: no expression in representatives modulo boundaries")
    coords = [X[i][0] for i in range(len(reps))]
    if isinstance(coeff, Integers):
        if any(c.denominator != 1 for c in coords):
            raise AssertionError("non-integral coordinates in a torsion-free block")
        return tuple(int(c) for c in coords)
    return tuple(coords)
