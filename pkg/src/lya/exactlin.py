"""Exact linear algebra over the rationals.

Deterministic Gaussian elimination, nullspaces, and canonically represented
subspaces (reduced row echelon bases).  Every value is immutable and every
function is pure, so results are reproducible bit for bit and safe to share
across threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import InputError

Scalar = Union[Fraction, int, str]
Vec = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x: Scalar) -> Fraction:
    """Coerce an int, exact string ("3", "-2/5"), or Fraction to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise InputError(f"not an exact rational: {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"cannot parse rational {x!r}: {exc}") from exc


def vec(entries: Iterable[Scalar]) -> Vec:
    return tuple(frac(x) for x in entries)


def vzero(n: int) -> Vec:
    return (ZERO,) * n


def vunit(n: int, i: int) -> Vec:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vscale(a: Scalar, v: Vec) -> Vec:
    a = frac(a)
    return tuple(a * x for x in v)


def vis_zero(v: Vec) -> bool:
    return all(x == 0 for x in v)


def vdot(u: Vec, v: Vec) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), ZERO)


@dataclass(frozen=True)
class Matrix:
    """Dense rational matrix; entries are a row-major tuple of row tuples."""

    rows: int
    cols: int
    entries: tuple[Vec, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise InputError(f"expected {self.rows} rows, got {len(self.entries)}")
        for r in self.entries:
            if len(r) != self.cols:
                raise InputError(f"expected {self.cols} columns, got {len(r)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: int | None = None) -> "Matrix":
        data = tuple(vec(r) for r in rows)
        if cols is None:
            if not data:
                raise InputError("column count required for a matrix with no rows")
            cols = len(data[0])
        return cls(len(data), cols, data)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(vunit(n, i) for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple(vzero(cols) for _ in range(rows)))

    def row(self, i: int) -> Vec:
        return self.entries[i]

    def col(self, j: int) -> Vec:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(self.col(j) for j in range(self.cols)))

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = [other.col(j) for j in range(other.cols)]
        data = tuple(tuple(vdot(r, c) for c in cols) for r in self.entries)
        return Matrix(self.rows, other.cols, data)

    def mul_vec(self, v: Sequence[Scalar]) -> Vec:
        w = vec(v)
        if len(w) != self.cols:
            raise InputError(f"vector length {len(w)} does not match {self.cols} columns")
        return tuple(vdot(r, w) for r in self.entries)

    def add(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("matrix shapes differ")
        return Matrix(self.rows, self.cols,
                      tuple(vadd(a, b) for a, b in zip(self.entries, other.entries)))

    def sub(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("matrix shapes differ")
        return Matrix(self.rows, self.cols,
                      tuple(vsub(a, b) for a, b in zip(self.entries, other.entries)))

    def scale(self, a: Scalar) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(vscale(a, r) for r in self.entries))

    def is_zero(self) -> bool:
        return all(vis_zero(r) for r in self.entries)

    def flatten(self) -> Vec:
        return tuple(itertools.chain.from_iterable(self.entries))


def rref(m: Matrix) -> Matrix:
    """Unique reduced row echelon form of ``m``, zero rows dropped."""
    rows = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    pr = 0
    for pc in range(ncols):
        piv = None
        for r in range(pr, nrows):
            if rows[r][pc] != 0:
                piv = r
                break
        if piv is None:
            continue
        rows[pr], rows[piv] = rows[piv], rows[pr]
        inv = rows[pr][pc]
        if inv != 1:
            rows[pr] = [x / inv for x in rows[pr]]
        for r in range(nrows):
            if r != pr and rows[r][pc] != 0:
                f = rows[r][pc]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[pr])]
        pr += 1
        if pr == nrows:
            break
    return Matrix(pr, ncols, tuple(tuple(r) for r in rows[:pr]))


def rank(m: Matrix) -> int:
    return rref(m).rows


def pivot_cols(rref_rows: Sequence[Vec]) -> tuple[int, ...]:
    """Pivot column of each row of a reduced-echelon row list."""
    out = []
    for r in rref_rows:
        for j, x in enumerate(r):
            if x != 0:
                out.append(j)
                break
    return tuple(out)


def nullspace(m: Matrix) -> "Subspace":
    """Canonical basis of the right kernel { v : m.v = 0 }."""
    r = rref(m)
    pivots = pivot_cols(r.entries)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    vectors = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for row_idx, p in enumerate(pivots):
            v[p] = -r.entries[row_idx][f]
        vectors.append(tuple(v))
    return Subspace.span(m.cols, vectors)


def solve(m: Matrix, b: Sequence[Scalar]) -> Vec | None:
    """One exact solution of m.x = b with free variables set to zero.

    Returns None when the system is inconsistent.
    """
    bv = vec(b)
    if len(bv) != m.rows:
        raise InputError(f"right-hand side length {len(bv)} does not match {m.rows} rows")
    aug = Matrix(m.rows, m.cols + 1,
                 tuple(row + (bv[i],) for i, row in enumerate(m.entries)))
    r = rref(aug)
    pivots = pivot_cols(r.entries)
    if m.cols in pivots:
        return None
    x = [ZERO] * m.cols
    for row_idx, p in enumerate(pivots):
        x[p] = r.entries[row_idx][m.cols]
    return tuple(x)


def invert(m: Matrix) -> Matrix | None:
    """Exact inverse of a square matrix, or None when singular."""
    if m.rows != m.cols:
        raise InputError("only square matrices can be inverted")
    n = m.rows
    aug = Matrix(n, 2 * n, tuple(m.entries[i] + vunit(n, i) for i in range(n)))
    r = rref(aug)
    if r.rows < n or pivot_cols(r.entries)[:n] != tuple(range(n)):
        return None
    return Matrix(n, n, tuple(row[n:] for row in r.entries))


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^ambient_dim held as its unique reduced-echelon basis.

    Equality of subspaces is therefore plain value equality.
    """

    ambient_dim: int
    basis: tuple[Vec, ...]

    def __post_init__(self):
        for r in self.basis:
            if len(r) != self.ambient_dim:
                raise InputError("basis vector length does not match ambient dimension")
        canon = rref(Matrix(len(self.basis), self.ambient_dim, self.basis)).entries
        if canon != self.basis:
            raise InputError("basis is not in reduced row echelon form")

    @classmethod
    def span(cls, ambient_dim: int, vectors: Sequence[Sequence[Scalar]]) -> "Subspace":
        rows = tuple(vec(v) for v in vectors)
        for r in rows:
            if len(r) != ambient_dim:
                raise InputError("spanning vector length does not match ambient dimension")
        canon = rref(Matrix(len(rows), ambient_dim, rows))
        return cls(ambient_dim, canon.entries)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(vunit(ambient_dim, i) for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return pivot_cols(self.basis)

    def reduce(self, v: Sequence[Scalar]) -> Vec:
        """Residue of v after elimination against the basis; zero iff v is a member."""
        w = list(vec(v))
        if len(w) != self.ambient_dim:
            raise InputError("vector length does not match ambient dimension")
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if c != 0:
                for j in range(self.ambient_dim):
                    w[j] -= c * row[j]
        return tuple(w)

    def contains_vector(self, v: Sequence[Scalar]) -> bool:
        return vis_zero(self.reduce(v))


def coordinates(s: Subspace, v: Sequence[Scalar]) -> Vec | None:
    """Coefficients of v in s's canonical basis, or None when v is outside s."""
    w = list(vec(v))
    if len(w) != s.ambient_dim:
        raise InputError("vector length does not match ambient dimension")
    coords = []
    for row, p in zip(s.basis, s.pivots):
        c = w[p]
        coords.append(c)
        if c != 0:
            for j in range(s.ambient_dim):
                w[j] -= c * row[j]
    if not vis_zero(tuple(w)):
        return None
    return tuple(coords)


def _check_same_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise InputError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same_ambient(a, b)
    return Subspace.span(a.ambient_dim, a.basis + b.basis)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked coefficient matrix.

    A vector in both spans is sum(x_i a_i) = sum(y_j b_j); solve for the
    coefficient pairs and map the x-part back through a's basis.
    """
    _check_same_ambient(a, b)
    n = a.ambient_dim
    p, q = a.dim, b.dim
    if p == 0 or q == 0:
        return Subspace.zero(n)
    m = Matrix(n, p + q, tuple(
        tuple(a.basis[i][row] for i in range(p)) + tuple(-b.basis[j][row] for j in range(q))
        for row in range(n)))
    ker = nullspace(m)
    vectors = []
    for k in ker.basis:
        w = vzero(n)
        for i in range(p):
            if k[i] != 0:
                w = vadd(w, vscale(k[i], a.basis[i]))
        vectors.append(w)
    return Subspace.span(n, vectors)


def subspace_contains(a: Subspace, item: Union[Subspace, Sequence[Scalar]]) -> bool:
    """Whether a vector or a whole subspace lies inside ``a``."""
    if isinstance(item, Subspace):
        _check_same_ambient(a, item)
        return all(a.contains_vector(v) for v in item.basis)
    return a.contains_vector(item)
