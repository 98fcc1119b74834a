import random
from fractions import Fraction

import pytest

from lya.errors import InputError
from lya.exactlin import (
    Matrix,
    Subspace,
    coordinates,
    invert,
    nullspace,
    rank,
    rref,
    solve,
    subspace_contains,
    subspace_intersect,
    subspace_sum,
    vec,
    vunit,
)


def independent_rank(rows):
    """Rank oracle: forward elimination only, coded separately from rref."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def random_matrix(rng, rows, cols, span=6):
    return Matrix.from_rows(
        [[Fraction(rng.randint(-span, span), rng.choice([1, 1, 2, 3])) for _ in range(cols)]
         for _ in range(rows)],
        cols=cols,
    )


def test_rref_dependent_rows_collapse():
    m = Matrix.from_rows([[2, 4], [1, 2]])
    assert rref(m) == Matrix.from_rows([[1, 2]])


def test_rref_identity_fixed():
    assert rref(Matrix.identity(3)) == Matrix.identity(3)


def test_rref_zero_matrix_drops_all_rows():
    r = rref(Matrix.zero(2, 2))
    assert r.rows == 0 and r.cols == 2


def test_rref_idempotent_on_random_matrices():
    rng = random.Random(1234)
    for _ in range(40):
        m = random_matrix(rng, rng.randint(0, 8), rng.randint(1, 8))
        r = rref(m)
        assert rref(r) == r


def test_nullspace_line():
    s = nullspace(Matrix.from_rows([[1, 1]]))
    assert s.dim == 1
    assert s.basis == (vec([1, -1]),)


def test_nullspace_identity_trivial():
    assert nullspace(Matrix.identity(2)).dim == 0


def test_nullspace_rank_one_matrix():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6]])
    assert independent_rank(m.entries) == 1
    s = nullspace(m)
    assert s.dim == 3 - independent_rank(m.entries)


def test_nullspace_vectors_annihilate():
    rng = random.Random(99)
    for _ in range(30):
        m = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        s = nullspace(m)
        assert s.dim == m.cols - independent_rank(m.entries)
        for v in s.basis:
            assert all(x == 0 for x in m.mul_vec(v))


def test_solve_square():
    assert solve(Matrix.identity(2), [3, 5]) == vec([3, 5])


def test_solve_free_variable_zeroed():
    assert solve(Matrix.from_rows([[1, 1]]), [2]) == vec([2, 0])


def test_solve_inconsistent():
    assert solve(Matrix.from_rows([[1], [1]]), [1, 2]) is None


def test_solve_postconditions_random():
    rng = random.Random(7)
    for _ in range(40):
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        b = vec([rng.randint(-4, 4) for _ in range(m.rows)])
        x = solve(m, b)
        aug = Matrix(m.rows, m.cols + 1,
                     tuple(r + (b[i],) for i, r in enumerate(m.entries)))
        if x is None:
            assert independent_rank(aug.entries) > independent_rank(m.entries)
        else:
            assert m.mul_vec(x) == b
            assert independent_rank(aug.entries) == independent_rank(m.entries)


def test_invert_round_trip():
    m = Matrix.from_rows([[2, 1], [1, 1]])
    inv = invert(m)
    assert inv is not None
    assert m.mul(inv) == Matrix.identity(2)
    assert inv.mul(m) == Matrix.identity(2)


def test_invert_singular():
    assert invert(Matrix.from_rows([[1, 2], [2, 4]])) is None


def test_subspace_span_canonicalizes():
    s = Subspace.span(2, [[2, 2], [4, 4]])
    assert s.basis == (vec([1, 1]),)


def test_subspace_rejects_non_rref_basis():
    with pytest.raises(InputError):
        Subspace(2, (vec([2, 0]),))


def test_sum_of_axes_is_full_plane():
    a = Subspace.span(2, [vunit(2, 0)])
    b = Subspace.span(2, [vunit(2, 1)])
    assert subspace_sum(a, b) == Subspace.full(2)


def test_sum_idempotent():
    v = Subspace.span(3, [[1, 2, 3], [0, 1, 1]])
    assert subspace_sum(v, v) == v


def test_sum_of_two_lines():
    a = Subspace.span(3, [[1, 1, 0]])
    b = Subspace.span(3, [[1, -1, 0]])
    s = subspace_sum(a, b)
    assert independent_rank([[1, 1, 0], [1, -1, 0]]) == 2
    assert s == Subspace.span(3, [vunit(3, 0), vunit(3, 1)])


def test_intersect_self():
    v = Subspace.span(3, [[1, 0, 2], [0, 1, 5]])
    assert subspace_intersect(v, v) == v


def test_intersect_axes_trivial():
    a = Subspace.span(2, [vunit(2, 0)])
    b = Subspace.span(2, [vunit(2, 1)])
    assert subspace_intersect(a, b).dim == 0


def test_intersect_planes_in_q3():
    a = Subspace.span(3, [vunit(3, 0), vunit(3, 1)])
    b = Subspace.span(3, [vunit(3, 1), vunit(3, 2)])
    i = subspace_intersect(a, b)
    assert i == Subspace.span(3, [vunit(3, 1)])
    assert subspace_contains(a, i) and subspace_contains(b, i)
    assert a.dim + b.dim == subspace_sum(a, b).dim + i.dim


def test_grassmann_identity_random_subspaces():
    rng = random.Random(2024)
    for _ in range(25):
        a = Subspace.span(6, [[rng.randint(-3, 3) for _ in range(6)]
                              for _ in range(rng.randint(0, 4))])
        b = Subspace.span(6, [[rng.randint(-3, 3) for _ in range(6)]
                              for _ in range(rng.randint(0, 4))])
        s = subspace_sum(a, b)
        i = subspace_intersect(a, b)
        assert a.dim + b.dim == s.dim + i.dim
        assert subspace_contains(a, i) and subspace_contains(b, i)
        assert subspace_contains(s, a) and subspace_contains(s, b)


def test_contains_full_space():
    assert subspace_contains(Subspace.full(3), [5, -7, Fraction(1, 3)])


def test_contains_zero_space():
    assert not subspace_contains(Subspace.zero(2), vunit(2, 0))


def test_contains_scalar_multiple():
    s = Subspace.span(2, [[1, 1]])
    assert subspace_contains(s, [2, 2])


def test_dimension_mismatch_rejected():
    a = Subspace.full(2)
    b = Subspace.full(3)
    with pytest.raises(InputError):
        subspace_sum(a, b)
    with pytest.raises(InputError):
        subspace_intersect(a, b)
    with pytest.raises(InputError):
        subspace_contains(a, [1, 2, 3])


def test_coordinates_in_canonical_basis():
    s = Subspace.span(3, [[1, 0, 1], [0, 1, 2]])
    assert coordinates(s, [3, 4, 11]) == vec([3, 4])
    assert coordinates(s, [1, 0, 0]) is None


def test_empty_matrix_shapes():
    m = Matrix.zero(0, 3)
    assert rref(m).rows == 0
    assert nullspace(m) == Subspace.full(3)
    assert rank(m) == 0
