"""Derivation-type solvers.

Each space of maps is computed as the exact nullspace of a linear system
over the n*n entries of the unknown matrix, assembled from the defining
identities on basis tuples.  Unknown entry (p, q) sits at flat index
p*n + q, matching :meth:`LinMap.flatten`.

The plain derivation solver and the twisted solver are written separately
on purpose: with identity twists they must produce the same space, which
the test batteries use as a duplicated-assembly oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InternalCheckError, MathError
from .exactlin import (
    Matrix,
    Subspace,
    Vec,
    coordinates,
    nullspace,
    solve,
    subspace_intersect,
    vadd,
    vis_zero,
    vscale,
    vunit,
    vzero,
)
from .lyalg import LYAlgebra, binary_eval, ternary_eval
from .maps import (
    AutCert,
    LinMap,
    identity_cert,
    satisfies_g_derivation,
)
from .structure import derived_algebra, is_subalgebra

ZERO = Fraction(0)


@dataclass(frozen=True)
class DerSpace:
    """Space of maps, flattened row-major into an n*n ambient space.

    ``theta``/``vartheta`` record the twist the basis elements satisfy;
    both None means the untwisted derivation identities.
    """

    space: Subspace
    theta: AutCert | None
    vartheta: AutCert | None

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def alg_dim(self) -> int:
        n = 0
        while n * n < self.space.ambient_dim:
            n += 1
        return n

    def maps(self) -> tuple[LinMap, ...]:
        n = self.alg_dim
        return tuple(LinMap.unflatten(n, row) for row in self.space.basis)

    def contains(self, f: LinMap) -> bool:
        return self.space.contains_vector(f.flatten())


def _idx(n: int, p: int, q: int) -> int:
    return p * n + q


def _derivation_rows(algebra: LYAlgebra) -> list[Vec]:
    """Untwisted assembly: binary pairs i<j, all ordered ternary triples."""
    n = algebra.dim
    c, d = algebra.c, algebra.d
    rows: list[Vec] = []
    for i in range(n):
        for j in range(i + 1, n):
            for l in range(n):
                row = [ZERO] * (n * n)
                for a in range(n):
                    row[_idx(n, l, a)] += c[i][j][a]
                    row[_idx(n, a, i)] -= c[a][j][l]
                    row[_idx(n, a, j)] -= c[i][a][l]
                rows.append(tuple(row))
    for i, j, k in itertools.product(range(n), repeat=3):
        for l in range(n):
            row = [ZERO] * (n * n)
            for a in range(n):
                row[_idx(n, l, a)] += d[i][j][k][a]
                row[_idx(n, a, i)] -= d[a][j][k][l]
                row[_idx(n, a, j)] -= d[i][a][k][l]
                row[_idx(n, a, k)] -= d[i][j][a][l]
            rows.append(tuple(row))
    return rows


def _twisted_rows(algebra: LYAlgebra, theta: LinMap, vartheta: LinMap) -> list[Vec]:
    """Twisted assembly over all ordered basis pairs and triples.

    The twisted identities are not alternating in the first two slots, so
    the diagonal tuples carry real constraints and are kept.
    """
    n = algebra.dim
    c, d = algebra.c, algebra.d
    t = [theta.apply(vunit(n, i)) for i in range(n)]
    v = [vartheta.apply(vunit(n, i)) for i in range(n)]
    # One-slot twisted contractions of the structure tensors.
    ct = [[binary_eval(c, vunit(n, a), t[j]) for j in range(n)] for a in range(n)]
    cv = [[binary_eval(c, v[i], vunit(n, a)) for a in range(n)] for i in range(n)]
    dtv = [[[ternary_eval(d, vunit(n, a), t[j], v[k]) for k in range(n)]
            for j in range(n)] for a in range(n)]
    dvt = [[[ternary_eval(d, v[i], vunit(n, b), t[k]) for k in range(n)]
            for b in range(n)] for i in range(n)]
    dtv2 = [[[ternary_eval(d, t[i], v[j], vunit(n, e)) for e in range(n)]
             for j in range(n)] for i in range(n)]
    rows: list[Vec] = []
    for i, j in itertools.product(range(n), repeat=2):
        for l in range(n):
            row = [ZERO] * (n * n)
            for a in range(n):
                row[_idx(n, l, a)] += c[i][j][a]
                row[_idx(n, a, i)] -= ct[a][j][l]
                row[_idx(n, a, j)] -= cv[i][a][l]
            rows.append(tuple(row))
    for i, j, k in itertools.product(range(n), repeat=3):
        for l in range(n):
            row = [ZERO] * (n * n)
            for a in range(n):
                row[_idx(n, l, a)] += d[i][j][k][a]
                row[_idx(n, a, i)] -= dtv[a][j][k][l]
                row[_idx(n, a, j)] -= dvt[i][a][k][l]
                row[_idx(n, a, k)] -= dtv2[i][j][a][l]
            rows.append(tuple(row))
    return rows


def _space_from_rows(n: int, rows: list[Vec]) -> Subspace:
    return nullspace(Matrix(len(rows), n * n, tuple(rows)))


def derivation_space(algebra: LYAlgebra) -> DerSpace:
    """All maps satisfying the derivation identities for both products."""
    n = algebra.dim
    space = _space_from_rows(n, _derivation_rows(algebra))
    result = DerSpace(space=space, theta=None, vartheta=None)
    ident = LinMap.identity(n)
    for f in result.maps():
        if not satisfies_g_derivation(algebra, f, ident, ident):
            raise InternalCheckError("derivation solver produced an unsound basis element")
    return result


def g_derivation_space(algebra: LYAlgebra, theta: AutCert, vartheta: AutCert) -> DerSpace:
    """Maps satisfying the identities twisted by the certified pair."""
    n = algebra.dim
    if theta.map.dim != n or vartheta.map.dim != n:
        raise MathError("automorphism dimension does not match the algebra")
    space = _space_from_rows(n, _twisted_rows(algebra, theta.map, vartheta.map))
    result = DerSpace(space=space, theta=theta, vartheta=vartheta)
    for f in result.maps():
        if not satisfies_g_derivation(algebra, f, theta.map, vartheta.map):
            raise InternalCheckError("twisted solver produced an unsound basis element")
    return result


def single_twist_space(algebra: LYAlgebra, theta: AutCert) -> DerSpace:
    """Twist only the first automorphism slot; the second stays the identity."""
    return g_derivation_space(algebra, theta, identity_cert(algebra))


def centroid(algebra: LYAlgebra) -> Subspace:
    """Maps commuting with left multiplication in both products.

    Members automatically satisfy the same identity in every other slot;
    that consequence is re-verified on the computed basis.
    """
    n = algebra.dim
    c, d = algebra.c, algebra.d
    rows: list[Vec] = []
    for i, j in itertools.product(range(n), repeat=2):
        for l in range(n):
            row = [ZERO] * (n * n)
            for a in range(n):
                row[_idx(n, a, i)] += c[a][j][l]
                row[_idx(n, l, a)] -= c[i][j][a]
            rows.append(tuple(row))
    for i, j, k in itertools.product(range(n), repeat=3):
        for l in range(n):
            row = [ZERO] * (n * n)
            for a in range(n):
                row[_idx(n, a, i)] += d[a][j][k][l]
                row[_idx(n, l, a)] -= d[i][j][k][a]
            rows.append(tuple(row))
    space = _space_from_rows(n, rows)
    units = [vunit(n, i) for i in range(n)]
    for flat in space.basis:
        f = LinMap.unflatten(n, flat)
        fu = [f.apply(u) for u in units]
        for i, j in itertools.product(range(n), repeat=2):
            want = f.apply(c[i][j])
            if binary_eval(c, units[i], fu[j]) != want:
                raise InternalCheckError("centroid member fails the right-slot identity")
        for i, j, k in itertools.product(range(n), repeat=3):
            want = f.apply(d[i][j][k])
            if ternary_eval(d, units[i], fu[j], units[k]) != want:
                raise InternalCheckError("centroid member fails the middle-slot identity")
            if ternary_eval(d, units[i], units[j], fu[k]) != want:
                raise InternalCheckError("centroid member fails the last-slot identity")
    return space


@dataclass(frozen=True)
class QuasiWitness:
    """Companion pair certifying quasi-derivation membership."""

    dprime: LinMap
    dprimeprime: LinMap


def is_quasi_derivation(algebra: LYAlgebra, d_map: LinMap) -> QuasiWitness | None:
    """Feasibility of the companion system for the given map.

    The unknowns are the two companion matrices; the right-hand side is the
    derivation-style sum for the queried map.  Free variables of a feasible
    system are zeroed, so the returned witness is canonical.
    """
    n = algebra.dim
    if d_map.dim != n:
        raise MathError("map dimension does not match the algebra")
    c, d = algebra.c, algebra.d
    units = [vunit(n, i) for i in range(n)]
    du = [d_map.apply(u) for u in units]
    unknowns = 2 * n * n
    rows: list[Vec] = []
    rhs: list[Fraction] = []
    for i, j in itertools.product(range(n), repeat=2):
        val = vadd(binary_eval(c, du[i], units[j]), binary_eval(c, units[i], du[j]))
        for l in range(n):
            row = [ZERO] * unknowns
            for a in range(n):
                row[_idx(n, l, a)] = c[i][j][a]
            rows.append(tuple(row))
            rhs.append(val[l])
    for i, j, k in itertools.product(range(n), repeat=3):
        val = ternary_eval(d, du[i], units[j], units[k])
        val = vadd(val, ternary_eval(d, units[i], du[j], units[k]))
        val = vadd(val, ternary_eval(d, units[i], units[j], du[k]))
        for l in range(n):
            row = [ZERO] * unknowns
            for a in range(n):
                row[n * n + _idx(n, l, a)] = d[i][j][k][a]
            rows.append(tuple(row))
            rhs.append(val[l])
    solution = solve(Matrix(len(rows), unknowns, tuple(rows)), rhs)
    if solution is None:
        return None
    return QuasiWitness(
        dprime=LinMap.unflatten(n, solution[: n * n]),
        dprimeprime=LinMap.unflatten(n, solution[n * n:]),
    )


def quasi_witness_satisfies(algebra: LYAlgebra, d_map: LinMap, witness: QuasiWitness) -> bool:
    """Re-check the companion identities by direct evaluation."""
    n = algebra.dim
    c, d = algebra.c, algebra.d
    units = [vunit(n, i) for i in range(n)]
    du = [d_map.apply(u) for u in units]
    for i, j in itertools.product(range(n), repeat=2):
        lhs = vadd(binary_eval(c, du[i], units[j]), binary_eval(c, units[i], du[j]))
        if lhs != witness.dprime.apply(c[i][j]):
            return False
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = ternary_eval(d, du[i], units[j], units[k])
        lhs = vadd(lhs, ternary_eval(d, units[i], du[j], units[k]))
        lhs = vadd(lhs, ternary_eval(d, units[i], units[j], du[k]))
        if lhs != witness.dprimeprime.apply(d[i][j][k]):
            return False
    return True


def stabilizer_derivations(algebra: LYAlgebra, theta: AutCert, h: Subspace) -> DerSpace:
    """Twisted derivations whose action keeps the subspace inside itself."""
    n = algebra.dim
    if h.ambient_dim != n:
        raise MathError("subspace ambient dimension does not match the algebra")
    if not is_subalgebra(algebra, h):
        raise MathError("subspace is not a subalgebra")
    for b in h.basis:
        if not h.contains_vector(theta.map.apply(b)):
            raise MathError("automorphism does not stabilize the subspace",
                            witness={"vector": [str(x) for x in b]})
    twisted = single_twist_space(algebra, theta)
    # Membership of D(b) in H is linear in D: the residue of D(b) after
    # elimination against H's basis must vanish coordinate by coordinate.
    pivot_of = {p: r for r, p in enumerate(h.pivots)}
    red = [[ZERO] * n for _ in range(n)]
    for l in range(n):
        red[l][l] = Fraction(1)
    for a, r in pivot_of.items():
        for l in range(n):
            red[l][a] -= h.basis[r][l]
    rows: list[Vec] = []
    for b in h.basis:
        for l in range(n):
            row = [ZERO] * (n * n)
            for p in range(n):
                if red[l][p] == 0:
                    continue
                for q in range(n):
                    if b[q] != 0:
                        row[_idx(n, p, q)] += red[l][p] * b[q]
            rows.append(tuple(row))
    if rows:
        stab = nullspace(Matrix(len(rows), n * n, tuple(rows)))
        space = subspace_intersect(twisted.space, stab)
    else:
        space = twisted.space
    result = DerSpace(space=space, theta=theta, vartheta=twisted.vartheta)
    ident = LinMap.identity(n)
    for f in result.maps():
        if not satisfies_g_derivation(algebra, f, theta.map, ident):
            raise InternalCheckError("stabilizer solver produced an unsound basis element")
        for b in h.basis:
            if not h.contains_vector(f.apply(b)):
                raise InternalCheckError("stabilizer solver produced a non-stabilizing map")
    return result


@dataclass(frozen=True)
class PartialMap:
    """Linear map defined on a subspace; columns are ambient images of the
    subspace's canonical basis vectors."""

    domain: Subspace
    matrix_on_domain: Matrix

    def apply(self, v: Sequence) -> Vec:
        coords = coordinates(self.domain, v)
        if coords is None:
            raise MathError("vector lies outside the map's domain")
        return self.matrix_on_domain.mul_vec(coords)


@dataclass(frozen=True)
class DhatClash:
    """A vanishing combination of products whose prescribed images differ.

    ``terms`` pairs each generator tag ("binary", i, j) or ("ternary",
    i, j, k) with its coefficient; the combination of generators is zero
    while the same combination of right-hand sides is ``mismatch``.
    """

    terms: tuple[tuple[tuple, Fraction], ...]
    mismatch: Vec


@dataclass(frozen=True)
class DhatResult:
    map: PartialMap | None
    clash: DhatClash | None

    @property
    def consistent(self) -> bool:
        return self.map is not None


def dhat_binary_rhs(algebra: LYAlgebra, d_map: LinMap, theta: LinMap,
                    g: Vec, h: Vec) -> Vec:
    """Prescribed image of the binary product of (g, h)."""
    val = vscale(2, d_map.apply(binary_eval(algebra.c, g, h)))
    val = vadd(val, binary_eval(algebra.c, d_map.apply(h), theta.apply(g)))
    val = vadd(val, binary_eval(algebra.c, theta.apply(h), d_map.apply(g)))
    return val


def dhat_ternary_rhs(algebra: LYAlgebra, d_map: LinMap, theta: LinMap,
                     g: Vec, h: Vec, i: Vec) -> Vec:
    """Prescribed image of the ternary product of (g, h, i)."""
    val = vscale(3, d_map.apply(ternary_eval(algebra.d, g, h, i)))
    val = vadd(val, ternary_eval(algebra.d, d_map.apply(g), theta.apply(h), i))
    val = vadd(val, ternary_eval(algebra.d, g, d_map.apply(h), theta.apply(i)))
    val = vadd(val, ternary_eval(algebra.d, theta.apply(g), h, d_map.apply(i)))
    return val


def dhat(algebra: LYAlgebra, d_map: LinMap, theta: AutCert) -> DhatResult:
    """Induced map on the derived algebra, when the prescriptions agree.

    The defining formulas only prescribe images of products, so the unknown
    map lives on the span of all products.  Consistency demands that every
    vanishing combination of products has vanishing prescribed image; the
    first violating combination is returned as a clash certificate.
    """
    n = algebra.dim
    if d_map.dim != n:
        raise MathError("map dimension does not match the algebra")
    w = derived_algebra(algebra)
    units = [vunit(n, i) for i in range(n)]
    gens: list[tuple[tuple, Vec, Vec]] = []
    for i in range(n):
        for j in range(i + 1, n):
            gens.append((("binary", i, j), algebra.c[i][j],
                         dhat_binary_rhs(algebra, d_map, theta.map, units[i], units[j])))
    for i, j, k in itertools.product(range(n), repeat=3):
        gens.append((("ternary", i, j, k), algebra.d[i][j][k],
                     dhat_ternary_rhs(algebra, d_map, theta.map, units[i], units[j], units[k])))
    if gens:
        gen_matrix = Matrix(n, len(gens), tuple(
            tuple(gen[1][row] for gen in gens) for row in range(n)))
        for lam in nullspace(gen_matrix).basis:
            mismatch = vzero(n)
            for coeff, (_, _, rhs) in zip(lam, gens):
                if coeff != 0:
                    mismatch = vadd(mismatch, vscale(coeff, rhs))
            if not vis_zero(mismatch):
                terms = tuple((gens[r][0], lam[r]) for r in range(len(gens)) if lam[r] != 0)
                return DhatResult(map=None, clash=DhatClash(terms=terms, mismatch=mismatch))
    m = w.dim
    rows: list[Vec] = []
    rhs_flat: list[Fraction] = []
    for _, gen_vec, gen_rhs in gens:
        coords = coordinates(w, gen_vec)
        if coords is None:
            raise InternalCheckError("product vector escaped the derived algebra")
        for l in range(n):
            row = [ZERO] * (n * m)
            for b in range(m):
                row[l * m + b] = coords[b]
            rows.append(tuple(row))
            rhs_flat.append(gen_rhs[l])
    solution = solve(Matrix(len(rows), n * m, tuple(rows)), rhs_flat)
    if solution is None:
        raise InternalCheckError("prescriptions passed the kernel test but did not solve")
    matrix = Matrix(n, m, tuple(tuple(solution[l * m + b] for b in range(m)) for l in range(n)))
    return DhatResult(map=PartialMap(domain=w, matrix_on_domain=matrix), clash=None)
