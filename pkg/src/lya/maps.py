"""Endomorphisms of an algebra: composition, homomorphism and automorphism
checks, inner derivations, and restriction to invariant subspaces.

A :class:`LinMap` stores the matrix of a linear self-map in the algebra's
fixed basis, column j being the image of basis vector j.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import InputError, InternalCheckError, MathError
from .exactlin import (
    Matrix,
    Scalar,
    Subspace,
    Vec,
    coordinates,
    invert,
    vadd,
    vec,
    vsub,
    vunit,
)
from .lyalg import LYAlgebra, binary_eval, ternary_eval, triple


@dataclass(frozen=True)
class LinMap:
    """Linear self-map in the fixed basis; column j is the image of e_j."""

    dim: int
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.rows != self.dim or self.matrix.cols != self.dim:
            raise InputError(f"matrix is not {self.dim}x{self.dim}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], dim: int | None = None) -> "LinMap":
        if dim is None:
            dim = len(rows)
        return cls(dim, Matrix.from_rows(rows, cols=dim))

    @classmethod
    def identity(cls, n: int) -> "LinMap":
        return cls(n, Matrix.identity(n))

    @classmethod
    def zero(cls, n: int) -> "LinMap":
        return cls(n, Matrix.zero(n, n))

    @classmethod
    def from_columns(cls, cols: Sequence[Vec]) -> "LinMap":
        n = len(cols)
        return cls(n, Matrix(n, n, tuple(tuple(col[i] for col in cols) for i in range(n))))

    @classmethod
    def unflatten(cls, n: int, flat: Sequence[Scalar]) -> "LinMap":
        entries = vec(flat)
        if len(entries) != n * n:
            raise InputError(f"expected {n * n} entries, got {len(entries)}")
        rows = tuple(entries[i * n:(i + 1) * n] for i in range(n))
        return cls(n, Matrix(n, n, rows))

    def apply(self, v: Sequence[Scalar]) -> Vec:
        return self.matrix.mul_vec(v)

    def flatten(self) -> Vec:
        return self.matrix.flatten()

    def add(self, other: "LinMap") -> "LinMap":
        return LinMap(self.dim, self.matrix.add(other.matrix))

    def sub(self, other: "LinMap") -> "LinMap":
        return LinMap(self.dim, self.matrix.sub(other.matrix))

    def scale(self, a: Scalar) -> "LinMap":
        return LinMap(self.dim, self.matrix.scale(a))

    def is_zero(self) -> bool:
        return self.matrix.is_zero()


def compose(f: LinMap, g: LinMap) -> LinMap:
    """f after g: the composite first applies g."""
    if f.dim != g.dim:
        raise InputError("cannot compose maps of different dimensions")
    return LinMap(f.dim, f.matrix.mul(g.matrix))


def commutator(f: LinMap, g: LinMap) -> LinMap:
    if f.dim != g.dim:
        raise InputError("cannot commutate maps of different dimensions")
    return LinMap(f.dim, f.matrix.mul(g.matrix).sub(g.matrix.mul(f.matrix)))


def _hom_defect(algebra: LYAlgebra, f: LinMap):
    """First basis tuple where f fails to preserve a product, or None."""
    n = algebra.dim
    images = [f.apply(vunit(n, i)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = f.apply(algebra.c[i][j])
            rhs = binary_eval(algebra.c, images[i], images[j])
            if lhs != rhs:
                return ("binary", (i, j), vsub(lhs, rhs))
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = f.apply(algebra.d[i][j][k])
        rhs = ternary_eval(algebra.d, images[i], images[j], images[k])
        if lhs != rhs:
            return ("ternary", (i, j, k), vsub(lhs, rhs))
    return None


def is_homomorphism(algebra: LYAlgebra, f: LinMap) -> bool:
    """Whether f preserves both products on every basis pair and triple."""
    if f.dim != algebra.dim:
        raise InputError("map dimension does not match algebra dimension")
    return _hom_defect(algebra, f) is None


@dataclass(frozen=True)
class AutCert:
    """An automorphism together with its exact inverse.

    Only :func:`certify_automorphism` (which also checks the homomorphism
    identities against a specific algebra) should build these.
    """

    map: LinMap
    inverse: LinMap

    def __post_init__(self):
        ident = Matrix.identity(self.map.dim)
        if self.map.matrix.mul(self.inverse.matrix) != ident \
                or self.inverse.matrix.mul(self.map.matrix) != ident:
            raise InputError("certificate inverse does not invert the map")


def certify_automorphism(algebra: LYAlgebra, f: LinMap) -> AutCert:
    """Certify f as an automorphism, computing its inverse exactly.

    Raises MathError when f is singular or fails to be a homomorphism,
    carrying the offending basis tuple as a witness.
    """
    if f.dim != algebra.dim:
        raise InputError("map dimension does not match algebra dimension")
    inv = invert(f.matrix)
    if inv is None:
        raise MathError("not invertible")
    defect = _hom_defect(algebra, f)
    if defect is not None:
        kind, indices, residual = defect
        raise MathError(
            f"not a homomorphism: {kind} product at basis tuple {indices}",
            witness={"kind": kind, "indices": list(indices),
                     "residual": [str(x) for x in residual]})
    return AutCert(map=f, inverse=LinMap(f.dim, inv))


def identity_cert(algebra: LYAlgebra) -> AutCert:
    ident = LinMap.identity(algebra.dim)
    return AutCert(map=ident, inverse=ident)


def satisfies_g_derivation(algebra: LYAlgebra, f: LinMap,
                           theta: LinMap, vartheta: LinMap) -> bool:
    """Direct evaluation of the twisted derivation identities on basis tuples.

    Used both as the defining test and as an independent soundness check for
    the nullspace solvers; it never touches an assembled constraint matrix.
    """
    n = algebra.dim
    if f.dim != n or theta.dim != n or vartheta.dim != n:
        raise InputError("map dimension does not match algebra dimension")
    fi = [f.apply(vunit(n, i)) for i in range(n)]
    ti = [theta.apply(vunit(n, i)) for i in range(n)]
    vi = [vartheta.apply(vunit(n, i)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = f.apply(algebra.c[i][j])
            rhs = vadd(binary_eval(algebra.c, fi[i], ti[j]),
                       binary_eval(algebra.c, vi[i], fi[j]))
            if lhs != rhs:
                return False
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = f.apply(algebra.d[i][j][k])
        rhs = ternary_eval(algebra.d, fi[i], ti[j], vi[k])
        rhs = vadd(rhs, ternary_eval(algebra.d, vi[i], fi[j], ti[k]))
        rhs = vadd(rhs, ternary_eval(algebra.d, ti[i], vi[j], fi[k]))
        if lhs != rhs:
            return False
    return True


def satisfies_derivation(algebra: LYAlgebra, f: LinMap) -> bool:
    ident = LinMap.identity(algebra.dim)
    return satisfies_g_derivation(algebra, f, ident, ident)


def inner_derivation(algebra: LYAlgebra, g: Sequence[Scalar], h: Sequence[Scalar]) -> LinMap:
    """The map sending x to the ternary product of (g, h, x).

    Such maps are always derivations; that consequence is re-verified here
    and a failure would indicate corrupted structure constants.
    """
    n = algebra.dim
    gv, hv = vec(g), vec(h)
    if len(gv) != n or len(hv) != n:
        raise InputError("vector length does not match algebra dimension")
    cols = [triple(algebra, gv, hv, vunit(n, k)) for k in range(n)]
    result = LinMap.from_columns(cols) if n else LinMap.zero(0)
    if not satisfies_derivation(algebra, result):
        raise InternalCheckError("inner map failed the derivation identities")
    return result


def restrict_map(f: LinMap, subspace: Subspace) -> LinMap:
    """Matrix of f on an invariant subspace, in the subspace's canonical basis."""
    if f.dim != subspace.ambient_dim:
        raise InputError("map dimension does not match ambient dimension")
    cols = []
    for b in subspace.basis:
        image = f.apply(b)
        coords = coordinates(subspace, image)
        if coords is None:
            raise MathError(
                "subspace is not invariant under the map",
                witness={"vector": [str(x) for x in b],
                         "image": [str(x) for x in image]})
        cols.append(coords)
    k = subspace.dim
    return LinMap(k, Matrix(k, k, tuple(tuple(col[i] for col in cols) for i in range(k))))
