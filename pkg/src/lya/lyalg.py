"""Lie-Yamaguti algebras given by exact structure constants.

An algebra is a pair of tensors over a fixed basis: ``c[i][j]`` holds the
coordinates of the binary product of basis elements i and j, ``d[i][j][k]``
those of the ternary product.  Values of :class:`LYAlgebra` are always
axiom-valid; candidate tensors that may fail the axioms only ever exist as
raw nested tuples paired with an :class:`AxiomReport`.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass
from typing import Sequence

from .errors import AxiomError, InputError, MathError
from .exactlin import Scalar, Vec, frac, vadd, vec, vis_zero, vscale, vunit, vzero

Tensor3 = tuple[tuple[Vec, ...], ...]
Tensor4 = tuple[tuple[tuple[Vec, ...], ...], ...]

AXIOM_TAGS = ("LY1", "LY2", "LY3", "LY4", "LY5", "LY6")


def tensor3(data: Sequence[Sequence[Sequence[Scalar]]]) -> Tensor3:
    return tuple(tuple(vec(v) for v in row) for row in data)


def tensor4(data: Sequence[Sequence[Sequence[Sequence[Scalar]]]]) -> Tensor4:
    return tuple(tuple(tuple(vec(v) for v in plane) for plane in row) for row in data)


def zero_tensor3(n: int) -> Tensor3:
    return tuple(tuple(vzero(n) for _ in range(n)) for _ in range(n))


def zero_tensor4(n: int) -> Tensor4:
    return tuple(tuple(tuple(vzero(n) for _ in range(n)) for _ in range(n)) for _ in range(n))


def binary_eval(c: Tensor3, u: Vec, v: Vec) -> Vec:
    """Bilinear contraction of two coordinate vectors against ``c``."""
    n = len(c)
    out = vzero(n)
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in enumerate(v):
            if b == 0:
                continue
            out = vadd(out, vscale(a * b, c[i][j]))
    return out


def ternary_eval(d: Tensor4, u: Vec, v: Vec, w: Vec) -> Vec:
    """Trilinear contraction of three coordinate vectors against ``d``."""
    n = len(d)
    out = vzero(n)
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in enumerate(v):
            if b == 0:
                continue
            ab = a * b
            for k, e in enumerate(w):
                if e == 0:
                    continue
                out = vadd(out, vscale(ab * e, d[i][j][k]))
    return out


@dataclass(frozen=True)
class AxiomFailure:
    axiom: str
    indices: tuple[int, ...]
    residual: Vec


@dataclass(frozen=True)
class AxiomReport:
    passed: bool
    failures: tuple[AxiomFailure, ...]


def _tensor_shapes_ok(n: int, c, d) -> None:
    if len(c) != n or any(len(row) != n or any(len(v) != n for v in row) for row in c):
        raise InputError("binary tensor shape does not match dimension")
    if len(d) != n or any(
        len(row) != n or any(len(plane) != n or any(len(v) != n for v in plane) for plane in row)
        for row in d
    ):
        raise InputError("ternary tensor shape does not match dimension")


def check_axioms(n: int, c: Tensor3, d: Tensor4) -> AxiomReport:
    """Evaluate the six defining identities on all basis tuples.

    The two alternating conditions are checked directly on the tensors; the
    remaining identities are evaluated on every ordered tuple of basis
    indices, which is complete by multilinearity.
    """
    _tensor_shapes_ok(n, c, d)
    failures: list[AxiomFailure] = []

    def fail(tag: str, idx: tuple[int, ...], res: Vec) -> None:
        failures.append(AxiomFailure(tag, idx, res))

    for i in range(n):
        if not vis_zero(c[i][i]):
            fail("LY1", (i, i), c[i][i])
        for j in range(i + 1, n):
            res = vadd(c[i][j], c[j][i])
            if not vis_zero(res):
                fail("LY1", (i, j), res)
    for k in range(n):
        for i in range(n):
            if not vis_zero(d[i][i][k]):
                fail("LY2", (i, i, k), d[i][i][k])
            for j in range(i + 1, n):
                res = vadd(d[i][j][k], d[j][i][k])
                if not vis_zero(res):
                    fail("LY2", (i, j, k), res)

    idx = range(n)
    for g, h, i in itertools.product(idx, repeat=3):
        res = d[g][h][i]
        res = vadd(res, d[h][i][g])
        res = vadd(res, d[i][g][h])
        res = vadd(res, binary_eval(c, c[g][h], vunit(n, i)))
        res = vadd(res, binary_eval(c, c[h][i], vunit(n, g)))
        res = vadd(res, binary_eval(c, c[i][g], vunit(n, h)))
        if not vis_zero(res):
            fail("LY3", (g, h, i), res)

    for g, h, i, j in itertools.product(idx, repeat=4):
        res = ternary_eval(d, c[g][h], vunit(n, i), vunit(n, j))
        res = vadd(res, ternary_eval(d, c[h][i], vunit(n, g), vunit(n, j)))
        res = vadd(res, ternary_eval(d, c[i][g], vunit(n, h), vunit(n, j)))
        if not vis_zero(res):
            fail("LY4", (g, h, i, j), res)

    for g, h, i, j in itertools.product(idx, repeat=4):
        lhs = ternary_eval(d, vunit(n, g), vunit(n, h), c[i][j])
        rhs = binary_eval(c, d[g][h][i], vunit(n, j))
        rhs = vadd(rhs, binary_eval(c, vunit(n, i), d[g][h][j]))
        res = vadd(lhs, vscale(-1, rhs))
        if not vis_zero(res):
            fail("LY5", (g, h, i, j), res)

    for g, h, i, j, k in itertools.product(idx, repeat=5):
        lhs = ternary_eval(d, vunit(n, g), vunit(n, h), d[i][j][k])
        rhs = ternary_eval(d, d[g][h][i], vunit(n, j), vunit(n, k))
        rhs = vadd(rhs, ternary_eval(d, vunit(n, i), d[g][h][j], vunit(n, k)))
        rhs = vadd(rhs, ternary_eval(d, vunit(n, i), vunit(n, j), d[g][h][k]))
        res = vadd(lhs, vscale(-1, rhs))
        if not vis_zero(res):
            fail("LY6", (g, h, i, j, k), res)

    return AxiomReport(passed=not failures, failures=tuple(failures))


@dataclass(frozen=True)
class LYAlgebra:
    """Axiom-valid algebra; construction fails if any identity is violated."""

    dim: int
    labels: tuple[str, ...]
    c: Tensor3
    d: Tensor4

    def __post_init__(self):
        if len(self.labels) != self.dim:
            raise InputError("label count does not match dimension")
        report = check_axioms(self.dim, self.c, self.d)
        if not report.passed:
            raise AxiomError(report)

    @classmethod
    def from_tensors(cls, labels: Sequence[str], c, d) -> "LYAlgebra":
        labels = tuple(str(x) for x in labels)
        return cls(len(labels), labels, tensor3(c), tensor4(d))


def bracket(algebra: LYAlgebra, g: Sequence[Scalar], h: Sequence[Scalar]) -> Vec:
    """Binary product of two coordinate vectors."""
    gv, hv = vec(g), vec(h)
    if len(gv) != algebra.dim or len(hv) != algebra.dim:
        raise InputError("vector length does not match algebra dimension")
    return binary_eval(algebra.c, gv, hv)


def triple(algebra: LYAlgebra, g: Sequence[Scalar], h: Sequence[Scalar], i: Sequence[Scalar]) -> Vec:
    """Ternary product of three coordinate vectors."""
    gv, hv, iv = vec(g), vec(h), vec(i)
    if any(len(v) != algebra.dim for v in (gv, hv, iv)):
        raise InputError("vector length does not match algebra dimension")
    return ternary_eval(algebra.d, gv, hv, iv)


def _check_lie(n: int, c: Tensor3) -> None:
    for i in range(n):
        if not vis_zero(c[i][i]):
            raise MathError(f"bracket of basis element {i} with itself is nonzero",
                            witness={"indices": [i, i]})
        for j in range(n):
            if not vis_zero(vadd(c[i][j], c[j][i])):
                raise MathError(f"bracket is not antisymmetric at basis pair ({i}, {j})",
                                witness={"indices": [i, j]})
    for i, j, k in itertools.product(range(n), repeat=3):
        res = binary_eval(c, c[i][j], vunit(n, k))
        res = vadd(res, binary_eval(c, c[j][k], vunit(n, i)))
        res = vadd(res, binary_eval(c, c[k][i], vunit(n, j)))
        if not vis_zero(res):
            raise MathError(f"Jacobi identity fails at basis triple ({i}, {j}, {k})",
                            witness={"indices": [i, j, k], "residual": [str(x) for x in res]})


def from_lie(lie_tensor, labels: Sequence[str] | None = None) -> LYAlgebra:
    """Lift a Lie bracket tensor: ternary product is the iterated bracket."""
    c = tensor3(lie_tensor)
    n = len(c)
    _check_lie(n, c)
    if labels is None:
        labels = tuple(f"e{i + 1}" for i in range(n))
    d = tuple(
        tuple(
            tuple(binary_eval(c, c[i][j], vunit(n, k)) for k in range(n))
            for j in range(n))
        for i in range(n))
    return LYAlgebra.from_tensors(labels, c, d)


@dataclass(frozen=True)
class LeibnizAlgebra:
    """Left Leibniz algebra: a(bc) = (ab)c + b(ac) on all basis triples."""

    dim: int
    labels: tuple[str, ...]
    product: Tensor3

    def __post_init__(self):
        if len(self.labels) != self.dim:
            raise InputError("label count does not match dimension")
        p = self.product
        n = self.dim
        if len(p) != n or any(len(row) != n or any(len(v) != n for v in row) for row in p):
            raise InputError("product tensor shape does not match dimension")
        for a, b, c in itertools.product(range(n), repeat=3):
            lhs = binary_eval(p, vunit(n, a), p[b][c])
            rhs = vadd(binary_eval(p, p[a][b], vunit(n, c)),
                       binary_eval(p, vunit(n, b), p[a][c]))
            res = vadd(lhs, vscale(-1, rhs))
            if not vis_zero(res):
                raise MathError(
                    f"left Leibniz identity fails at basis triple ({a}, {b}, {c})",
                    witness={"indices": [a, b, c], "residual": [str(x) for x in res]})

    @classmethod
    def from_tensor(cls, labels: Sequence[str], product) -> "LeibnizAlgebra":
        labels = tuple(str(x) for x in labels)
        return cls(len(labels), labels, tensor3(product))


def from_leibniz(b: LeibnizAlgebra) -> LYAlgebra:
    """Skew-symmetrized half product plus minus-a-quarter iterated product."""
    n = b.dim
    p = b.product
    half = frac("1/2")
    quarter = frac("-1/4")
    c = tuple(
        tuple(vscale(half, vadd(p[i][j], vscale(-1, p[j][i]))) for j in range(n))
        for i in range(n))
    d = tuple(
        tuple(
            tuple(vscale(quarter, binary_eval(p, p[i][j], vunit(n, k))) for k in range(n))
            for j in range(n))
        for i in range(n))
    return LYAlgebra.from_tensors(b.labels, c, d)


def _unique_labels(first: Sequence[str], second: Sequence[str]) -> tuple[str, ...]:
    out = list(first)
    for lab in second:
        while lab in out:
            lab = lab + "'"
        out.append(lab)
    return tuple(out)


def direct_sum(a: LYAlgebra, b: LYAlgebra) -> LYAlgebra:
    """Block sum: products inside each summand, zero across blocks."""
    n, m = a.dim, b.dim
    total = n + m

    def embed_a(v: Vec) -> Vec:
        return v + vzero(m)

    def embed_b(v: Vec) -> Vec:
        return vzero(n) + v

    c = [[vzero(total) for _ in range(total)] for _ in range(total)]
    d = [[[vzero(total) for _ in range(total)] for _ in range(total)] for _ in range(total)]
    for i in range(n):
        for j in range(n):
            c[i][j] = embed_a(a.c[i][j])
            for k in range(n):
                d[i][j][k] = embed_a(a.d[i][j][k])
    for i in range(m):
        for j in range(m):
            c[n + i][n + j] = embed_b(b.c[i][j])
            for k in range(m):
                d[n + i][n + j][n + k] = embed_b(b.d[i][j][k])
    return LYAlgebra.from_tensors(_unique_labels(a.labels, b.labels), c, d)


def abelian(n: int) -> LYAlgebra:
    labels = tuple(f"a{i + 1}" for i in range(n))
    return LYAlgebra.from_tensors(labels, zero_tensor3(n), zero_tensor4(n))


def sl2_lie_tensor() -> Tensor3:
    """Chevalley basis (e, f, h): [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    n = 3
    c = [[list(vzero(n)) for _ in range(n)] for _ in range(n)]
    e, f, h = 0, 1, 2

    def put(i, j, target, coeff):
        c[i][j][target] = frac(coeff)
        c[j][i][target] = frac(-coeff)

    put(e, f, h, 1)
    put(h, e, e, 2)
    put(h, f, f, -2)
    return tensor3(c)


def heisenberg_tensor() -> Tensor3:
    """Basis (x, y, z) with [x,y] = z."""
    n = 3
    c = [[list(vzero(n)) for _ in range(n)] for _ in range(n)]
    c[0][1][2] = frac(1)
    c[1][0][2] = frac(-1)
    return tensor3(c)


def aff2_tensor() -> Tensor3:
    """Basis (e1, e2) with [e1,e2] = e1."""
    c = [[list(vzero(2)) for _ in range(2)] for _ in range(2)]
    c[0][1][0] = frac(1)
    c[1][0][0] = frac(-1)
    return tensor3(c)


def leibniz2() -> LeibnizAlgebra:
    """Two-dimensional left Leibniz algebra: x.x = z, all other products zero."""
    p = [[list(vzero(2)) for _ in range(2)] for _ in range(2)]
    p[0][0][1] = frac(1)
    return LeibnizAlgebra.from_tensor(("x", "z"), p)


CATALOG_NAMES = (
    "abelian1",
    "abelian2",
    "abelian3",
    "sl2",
    "h3",
    "aff2",
    "lts_sl2",
    "sl2_plus_ab1",
    "leibniz2",
)

_ABELIAN_RE = re.compile(r"^abelian\(?(\d+)\)?$")


@functools.lru_cache(maxsize=None)
def catalog(name: str) -> LYAlgebra:
    """Named desk-scale instances used throughout the test batteries."""
    m = _ABELIAN_RE.match(name)
    if m:
        return abelian(int(m.group(1)))
    if name == "sl2":
        return from_lie(sl2_lie_tensor(), labels=("e", "f", "h"))
    if name == "h3":
        return from_lie(heisenberg_tensor(), labels=("x", "y", "z"))
    if name == "aff2":
        return from_lie(aff2_tensor(), labels=("e1", "e2"))
    if name == "lts_sl2":
        base = catalog("sl2")
        return LYAlgebra.from_tensors(base.labels, zero_tensor3(3), base.d)
    if name == "sl2_plus_ab1":
        return direct_sum(catalog("sl2"), abelian(1))
    if name == "leibniz2":
        return from_leibniz(leibniz2())
    raise InputError(f"unknown catalog name {name!r}")
