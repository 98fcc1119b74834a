import random
from fractions import Fraction

import pytest

from lya.errors import AxiomError, InputError, MathError
from lya.exactlin import vadd, vec, vscale, vunit, vzero
from lya.lyalg import (
    CATALOG_NAMES,
    LYAlgebra,
    LeibnizAlgebra,
    abelian,
    bracket,
    catalog,
    check_axioms,
    direct_sum,
    from_leibniz,
    from_lie,
    sl2_lie_tensor,
    tensor3,
    tensor4,
    triple,
    zero_tensor3,
    zero_tensor4,
)

E, F, H = 0, 1, 2  # sl2 basis order used by the catalog


def contraction_oracle_binary(c, g, h):
    """Scalar-by-scalar tensor contraction, coded independently of binary_eval."""
    n = len(c)
    return tuple(
        sum((g[i] * h[j] * c[i][j][k] for i in range(n) for j in range(n)), Fraction(0))
        for k in range(n))


def contraction_oracle_ternary(d, g, h, i):
    n = len(d)
    return tuple(
        sum((g[a] * h[b] * i[e] * d[a][b][e][k]
             for a in range(n) for b in range(n) for e in range(n)), Fraction(0))
        for k in range(n))


def rand_vec(rng, n):
    return vec([Fraction(rng.randint(-4, 4), rng.choice([1, 2, 3])) for _ in range(n)])


def test_sl2_bracket_h_e():
    a = catalog("sl2")
    assert bracket(a, vunit(3, H), vunit(3, E)) == vec([2, 0, 0])
    assert bracket(a, vunit(3, H), vunit(3, F)) == vec([0, -2, 0])
    assert bracket(a, vunit(3, E), vunit(3, F)) == vec([0, 0, 1])


def test_bracket_matches_contraction_oracle():
    rng = random.Random(5)
    for name in ("sl2", "aff2", "sl2_plus_ab1"):
        a = catalog(name)
        for _ in range(5):
            g, h = rand_vec(rng, a.dim), rand_vec(rng, a.dim)
            assert bracket(a, g, h) == contraction_oracle_binary(a.c, g, h)


def test_bracket_alternating():
    rng = random.Random(6)
    for name in CATALOG_NAMES:
        a = catalog(name)
        g = rand_vec(rng, a.dim)
        assert bracket(a, g, g) == vzero(a.dim)


def test_abelian_bracket_zero():
    a = abelian(3)
    assert bracket(a, vunit(3, 0), vunit(3, 1)) == vzero(3)


def test_sl2_triple_e_f_e():
    a = catalog("sl2")
    # {e,f,e} = [[e,f],e] = [h,e] = 2e
    assert triple(a, vunit(3, E), vunit(3, F), vunit(3, E)) == vec([2, 0, 0])
    assert triple(a, vunit(3, E), vunit(3, F), vunit(3, E)) == contraction_oracle_ternary(
        a.d, vunit(3, E), vunit(3, F), vunit(3, E))


def test_triple_alternating_in_first_two_slots():
    rng = random.Random(7)
    for name in CATALOG_NAMES:
        a = catalog(name)
        g, i = rand_vec(rng, a.dim), rand_vec(rng, a.dim)
        assert triple(a, g, g, i) == vzero(a.dim)


def test_lts_sl2_triple_e_f_h_vanishes():
    a = catalog("lts_sl2")
    # {e,f,h} = [[e,f],h] = [h,h] = 0 in the underlying Lie algebra
    assert triple(a, vunit(3, E), vunit(3, F), vunit(3, H)) == vzero(3)
    assert a.c == zero_tensor3(3)


def test_multilinearity_on_random_combinations():
    rng = random.Random(8)
    for name in ("sl2", "aff2", "sl2_plus_ab1", "leibniz2"):
        a = catalog(name)
        n = a.dim
        u, v, w = rand_vec(rng, n), rand_vec(rng, n), rand_vec(rng, n)
        s, t = Fraction(2, 3), Fraction(-5, 2)
        combo = vadd(vscale(s, u), vscale(t, v))
        assert bracket(a, combo, w) == vadd(vscale(s, bracket(a, u, w)),
                                            vscale(t, bracket(a, v, w)))
        assert triple(a, w, combo, u) == vadd(vscale(s, triple(a, w, u, u)),
                                              vscale(t, triple(a, w, v, u)))


def test_vector_length_mismatch_rejected():
    a = catalog("sl2")
    with pytest.raises(InputError):
        bracket(a, [1, 0], [0, 1, 0])
    with pytest.raises(InputError):
        triple(a, [1, 0, 0], [0, 1], [0, 0, 1])


def test_check_axioms_passes_on_catalog_and_constructions():
    for name in CATALOG_NAMES:
        a = catalog(name)
        assert check_axioms(a.dim, a.c, a.d).passed


def test_from_lie_recovers_binary_tensor():
    lie = sl2_lie_tensor()
    a = from_lie(lie, labels=("e", "f", "h"))
    assert a.c == lie


def test_from_lie_heisenberg_has_zero_ternary():
    a = catalog("h3")
    n = a.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                assert a.d[i][j][k] == vzero(n)


def test_from_lie_rejects_non_jacobi():
    # [e1,e2] = e1, [e1,e3] = e2, [e2,e3] = 0 fails Jacobi on (1,2,3)
    n = 3
    c = [[list(vzero(n)) for _ in range(n)] for _ in range(n)]
    c[0][1][0] = Fraction(1)
    c[1][0][0] = Fraction(-1)
    c[0][2][1] = Fraction(1)
    c[2][0][1] = Fraction(-1)
    with pytest.raises(MathError) as err:
        from_lie(c)
    assert "Jacobi" in str(err.value)


def test_from_lie_rejects_non_antisymmetric():
    c = [[[Fraction(1)]]]
    with pytest.raises(MathError):
        from_lie(c)


def test_leibniz2_collapses_to_abelian_like():
    a = catalog("leibniz2")
    assert a.c == zero_tensor3(2)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                assert a.d[i][j][k] == vzero(2)


def test_lie_algebra_viewed_as_leibniz():
    # A Lie bracket is a left Leibniz product; skew-symmetrizing an already
    # antisymmetric product returns it unchanged: (b - (-b))/2 = b.
    lie = sl2_lie_tensor()
    b = LeibnizAlgebra.from_tensor(("e", "f", "h"), lie)
    a = from_leibniz(b)
    assert a.c == lie
    assert check_axioms(a.dim, a.c, a.d).passed


def test_leibniz_identity_rejection():
    # x.x = x is not left Leibniz: x(xx) = x while (xx)x + x(xx) = 2x
    p = [[[Fraction(1)]]]
    with pytest.raises(MathError) as err:
        LeibnizAlgebra.from_tensor(("x",), p)
    assert "Leibniz" in str(err.value)


def test_zero_product_leibniz_gives_abelian():
    b = LeibnizAlgebra.from_tensor(("u", "v"), zero_tensor3(2))
    a = from_leibniz(b)
    assert a.c == zero_tensor3(2)


def test_direct_sum_blocks():
    a = catalog("sl2_plus_ab1")
    assert a.dim == 4
    # cross-block products vanish
    assert bracket(a, vunit(4, 0), vunit(4, 3)) == vzero(4)
    assert triple(a, vunit(4, 0), vunit(4, 1), vunit(4, 3)) == vzero(4)
    # sl2 block keeps its products
    assert bracket(a, vunit(4, E), vunit(4, F)) == vec([0, 0, 1, 0])


def test_direct_sum_of_abelians():
    s = direct_sum(abelian(1), abelian(2))
    assert s.c == zero_tensor3(3)


def test_direct_sum_with_zero_dim():
    a = catalog("sl2")
    s = direct_sum(a, abelian(0))
    assert s.c == a.c and s.d == a.d


def test_lts_sl2_cyclic_ternary_sum_vanishes():
    a = catalog("lts_sl2")
    n = a.dim
    for g in range(n):
        for h in range(n):
            for i in range(n):
                s = vadd(vadd(a.d[g][h][i], a.d[h][i][g]), a.d[i][g][h])
                assert s == vzero(n)


def test_catalog_unknown_name_rejected():
    with pytest.raises(InputError):
        catalog("so3")


def test_catalog_abelian_spelling_variants():
    assert catalog("abelian(3)") == catalog("abelian3")


def test_symmetrized_binary_fails_ly1():
    a = catalog("sl2")
    c = [[list(v) for v in row] for row in a.c]
    c[F][E] = [x for x in c[E][F]]  # symmetrize one pair
    report = check_axioms(3, tensor3(c), a.d)
    assert not report.passed
    assert any(f.axiom == "LY1" and f.indices == (E, F) for f in report.failures)


def test_single_sign_flip_in_ternary_fails_ly2():
    a = catalog("sl2")
    d = [[[list(v) for v in plane] for plane in row] for row in a.d]
    d[E][F][E] = [-x for x in d[E][F][E]]
    report = check_axioms(3, a.c, tensor4(d))
    assert not report.passed
    assert any(f.axiom == "LY2" and f.indices[:2] == (E, F) for f in report.failures)


def test_broken_jacobi_fails_ly3():
    # flip the sign of the [h,e] pair only; Jacobi on (e,f,h) then fails
    c = [[list(v) for v in row] for row in sl2_lie_tensor()]
    c[H][E] = [-x for x in c[H][E]]
    c[E][H] = [-x for x in c[E][H]]
    report = check_axioms(3, tensor3(c), zero_tensor4(3))
    assert not report.passed
    assert {f.axiom for f in report.failures} == {"LY3"}


def test_corrupted_ternary_entry_fails_higher_axiom():
    a = catalog("sl2")
    d = [[[list(v) for v in plane] for plane in row] for row in a.d]
    # keep the alternating symmetry so LY1/LY2 still hold
    d[E][F][H][0] += Fraction(1)
    d[F][E][H][0] -= Fraction(1)
    report = check_axioms(3, a.c, tensor4(d))
    assert not report.passed
    tags = {f.axiom for f in report.failures}
    assert tags and tags <= {"LY3", "LY4", "LY5", "LY6"}


def test_invalid_tensors_cannot_construct_algebra():
    a = catalog("sl2")
    c = [[list(v) for v in row] for row in a.c]
    c[F][E] = [x for x in c[E][F]]
    with pytest.raises(AxiomError) as err:
        LYAlgebra.from_tensors(a.labels, c, a.d)
    assert err.value.report.failures[0].axiom == "LY1"


def test_zero_dimensional_algebra():
    a = abelian(0)
    assert a.dim == 0
    assert check_axioms(0, (), ()).passed
