import random
from fractions import Fraction

import pytest

from lya.errors import InputError, MathError
from lya.exactlin import Subspace, vadd, vec, vscale, vunit, vzero
from lya.lyalg import CATALOG_NAMES, catalog
from lya.maps import (
    LinMap,
    certify_automorphism,
    commutator,
    compose,
    inner_derivation,
    is_homomorphism,
    restrict_map,
    satisfies_derivation,
)

E, F, H = 0, 1, 2


def ad(algebra, x):
    """Matrix of bracketing with x on the left, built column by column."""
    n = algebra.dim
    from lya.lyalg import bracket
    cols = [bracket(algebra, x, vunit(n, k)) for k in range(n)]
    return LinMap.from_columns(cols)


def chevalley_swap():
    # e <-> f, h -> -h in the catalog's (e, f, h) basis
    return LinMap.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, -1]])


def rand_vec(rng, n):
    return vec([Fraction(rng.randint(-3, 3), rng.choice([1, 2])) for _ in range(n)])


def test_compose_identity():
    f = LinMap.from_rows([[1, 2], [3, 4]])
    assert compose(LinMap.identity(2), f) == f
    assert compose(f, LinMap.identity(2)) == f


def test_compose_with_inverse_is_identity():
    a = catalog("sl2")
    cert = certify_automorphism(a, chevalley_swap())
    assert compose(cert.map, cert.inverse) == LinMap.identity(3)
    assert compose(cert.inverse, cert.map) == LinMap.identity(3)


def test_compose_applies_right_factor_first():
    a = catalog("sl2")
    ad_h, ad_e = ad(a, vunit(3, H)), ad(a, vunit(3, E))
    rng = random.Random(3)
    v = rand_vec(rng, 3)
    assert compose(ad_h, ad_e).apply(v) == ad_h.apply(ad_e.apply(v))


def test_commutator_self_and_identity_vanish():
    f = LinMap.from_rows([[1, 2], [0, 1]])
    assert commutator(f, f).is_zero()
    assert commutator(LinMap.identity(2), f).is_zero()


def test_sl2_commutator_of_ad_maps():
    a = catalog("sl2")
    ad_e, ad_f, ad_h = (ad(a, vunit(3, i)) for i in (E, F, H))
    # ad[e,f] = ad h since ad is a Lie homomorphism
    assert commutator(ad_e, ad_f) == ad_h


def test_identity_is_homomorphism():
    for name in CATALOG_NAMES:
        a = catalog(name)
        assert is_homomorphism(a, LinMap.identity(a.dim))


def test_doubling_is_not_homomorphism_on_sl2():
    a = catalog("sl2")
    assert not is_homomorphism(a, LinMap.identity(3).scale(2))


def test_chevalley_swap_is_homomorphism():
    a = catalog("sl2")
    assert is_homomorphism(a, chevalley_swap())


def test_certify_identity():
    for name in CATALOG_NAMES:
        a = catalog(name)
        cert = certify_automorphism(a, LinMap.identity(a.dim))
        assert cert.inverse == LinMap.identity(a.dim)


def test_certify_negated_identity_on_lts():
    a = catalog("lts_sl2")
    cert = certify_automorphism(a, LinMap.identity(3).scale(-1))
    assert cert.inverse == LinMap.identity(3).scale(-1)


def test_negated_identity_rejected_on_sl2():
    a = catalog("sl2")
    with pytest.raises(MathError) as err:
        certify_automorphism(a, LinMap.identity(3).scale(-1))
    assert "homomorphism" in str(err.value)
    assert err.value.witness["kind"] == "binary"


def test_singular_map_rejected():
    a = catalog("abelian2")
    with pytest.raises(MathError) as err:
        certify_automorphism(a, LinMap.zero(2))
    assert "invertible" in str(err.value)


def test_inner_derivation_of_equal_arguments_vanishes():
    rng = random.Random(11)
    for name in ("sl2", "lts_sl2", "sl2_plus_ab1"):
        a = catalog(name)
        g = rand_vec(rng, a.dim)
        assert inner_derivation(a, g, g).is_zero()


def test_inner_derivation_abelian_zero():
    a = catalog("abelian3")
    assert inner_derivation(a, vunit(3, 0), vunit(3, 1)).is_zero()


def test_sl2_inner_e_f_is_ad_h():
    a = catalog("sl2")
    d_ef = inner_derivation(a, vunit(3, E), vunit(3, F))
    assert d_ef == ad(a, vunit(3, H))
    assert d_ef.apply(vunit(3, E)) == vec([2, 0, 0])
    assert d_ef.apply(vunit(3, F)) == vec([0, -2, 0])
    assert d_ef.apply(vunit(3, H)) == vzero(3)


def test_inner_derivations_pass_derivation_identities():
    rng = random.Random(12)
    for name in CATALOG_NAMES:
        a = catalog(name)
        if a.dim == 0:
            continue
        for _ in range(3):
            g, h = rand_vec(rng, a.dim), rand_vec(rng, a.dim)
            assert satisfies_derivation(a, inner_derivation(a, g, h))


def test_inner_derivation_bilinear():
    rng = random.Random(13)
    a = catalog("sl2_plus_ab1")
    u, v, w = (rand_vec(rng, 4) for _ in range(3))
    s, t = Fraction(3, 2), Fraction(-2)
    combo = vadd(vscale(s, u), vscale(t, v))
    lhs = inner_derivation(a, combo, w)
    rhs = inner_derivation(a, u, w).scale(s).add(inner_derivation(a, v, w).scale(t))
    assert lhs == rhs
    lhs2 = inner_derivation(a, w, combo)
    rhs2 = inner_derivation(a, w, u).scale(s).add(inner_derivation(a, w, v).scale(t))
    assert lhs2 == rhs2


def test_restrict_identity():
    s = Subspace.span(3, [[1, 0, 2], [0, 1, 1]])
    assert restrict_map(LinMap.identity(3), s) == LinMap.identity(2)


def test_restrict_inner_derivation_to_line():
    a = catalog("sl2")
    d_ef = inner_derivation(a, vunit(3, E), vunit(3, F))
    line = Subspace.span(3, [vunit(3, E)])
    assert restrict_map(d_ef, line) == LinMap.from_rows([[2]])


def test_restrict_non_invariant_rejected():
    a = catalog("sl2")
    d_ef = inner_derivation(a, vunit(3, E), vunit(3, F))
    plane = Subspace.span(3, [[1, 1, 0]])  # d_ef maps e+f to 2e-2f, outside
    with pytest.raises(MathError) as err:
        restrict_map(d_ef, plane)
    assert err.value.witness is not None


def test_restrict_respects_composition():
    a = catalog("sl2")
    h_line = Subspace.span(3, [vunit(3, H)])
    f1 = inner_derivation(a, vunit(3, E), vunit(3, F))  # kills h
    f2 = LinMap.identity(3).scale(3)
    left = restrict_map(compose(f1, f2), h_line)
    right = compose(restrict_map(f1, h_line), restrict_map(f2, h_line))
    assert left == right


def test_restrict_to_zero_subspace():
    f = LinMap.from_rows([[1, 2], [3, 4]])
    r = restrict_map(f, Subspace.zero(2))
    assert r.dim == 0


def test_dimension_mismatch_rejected():
    a = catalog("sl2")
    with pytest.raises(InputError):
        is_homomorphism(a, LinMap.identity(2))
    with pytest.raises(InputError):
        compose(LinMap.identity(2), LinMap.identity(3))


def test_unflatten_round_trip():
    f = LinMap.from_rows([[1, 2], [3, 4]])
    assert LinMap.unflatten(2, f.flatten()) == f
