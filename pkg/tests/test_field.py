import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qmds.field import FieldError, field_for_q, field_from_moduli, make_field


def gauss_mul(x, y, p):
    """(a+bi)(c+di) over GF(p)[i]/(i^2+1), coordinates as pairs."""
    (a, b), (c, d) = x, y
    return ((a * c - b * d) % p, (a * d + b * c) % p)


def gauss_pow(x, e, p):
    r = (1, 0)
    for _ in range(e):
        r = gauss_mul(r, x, p)
    return r


# -- construction ------------------------------------------------------------

def test_gf9_presentation(gf9):
    assert gf9.q == 3 and gf9.order == 9
    assert gf9.base_modulus == (0, 1)
    assert gf9.ext_modulus == (1, 0, 1)  # i^2 + 1
    assert gf9.coeffs(gf9.g) == (1, 1)
    assert gf9.multiplicative_order(gf9.g) == 8


@pytest.mark.parametrize("p,m", [(3, 1), (11, 1), (2, 2), (3, 2), (2, 3), (3, 3), (7, 2), (83, 1)])
def test_primitive_element_has_full_order(p, m):
    F = make_field(p, m)
    assert F.multiplicative_order(F.g) == F.order - 1
    assert sorted(F.exp_table.tolist()) == list(range(1, F.order))


@pytest.mark.parametrize("p,m", [(2, 1), (4, 1), (9, 1), (3, 0)])
def test_make_field_rejects(p, m):
    with pytest.raises(FieldError):
        make_field(p, m)


def test_field_for_q_rejects_composite():
    with pytest.raises(FieldError):
        field_for_q(6)


def test_determinism_across_fresh_builds():
    a = make_field(3, 3)
    make_field.cache_clear()
    b = make_field(3, 3)
    assert a is not b
    assert a == b
    assert np.array_equal(a.exp_table, b.exp_table)
    assert a.canonical == b.canonical


def test_from_moduli_matches_canonical():
    F = make_field(5, 2)
    G = field_from_moduli(5, F.base_modulus, F.ext_modulus)
    assert F == G


@pytest.mark.parametrize("base,ext", [((1, 0, 1), (1, 0, 1)),   # x^2+1 has the root 2 over GF(5)
                                      ((0, 1), (0, 0, 1))])      # y^2 has the root 0
def test_from_moduli_rejects_reducible(base, ext):
    with pytest.raises(FieldError):
        field_from_moduli(5, base, ext)


def test_moduli_are_irreducible_by_root_search():
    for q in (4, 8, 9, 16, 25, 27, 49):
        F = field_for_q(q)
        c, b, _ = F.ext_modulus
        # no root of y^2 + b y + c in GF(q), using the top-field arithmetic
        assert all(F.add(F.add(F.mul(y, y), F.mul(b, y)), c) != 0 for y in range(F.q))


# -- arithmetic against the Gaussian-integer oracle ----------------------------

def test_hand_product_gf9(gf9):
    a = gf9.from_coeffs(1, 1)
    assert gf9.coeffs(gf9.mul(a, a)) == (0, 2)


@pytest.mark.parametrize("p", [3, 7, 11, 19, 23])
def test_multiplication_matches_gaussian_oracle(p):
    F = make_field(p, 1)
    assert F.ext_modulus == (1, 0, 1)
    for a, b in itertools.product(range(F.order), repeat=2):
        if (a * 7 + b) % 5:  # thin the grid
            continue
        assert F.coeffs(F.mul(a, b)) == gauss_mul(F.coeffs(a), F.coeffs(b), p)


def test_table_multiplication_matches_polynomial_multiplication():
    for q in (8, 9, 27, 49):
        F = field_for_q(q)
        rng = np.random.default_rng(q)
        for a, b in rng.integers(0, F.order, size=(300, 2)).tolist():
            assert F.mul(a, b) == F._raw_mul(a, b)


def test_identities(gf9):
    for a in range(9):
        assert gf9.add(a, 0) == a
        assert gf9.sub(a, a) == 0
        if a:
            assert gf9.mul(a, gf9.inv(a)) == 1
            assert gf9.div(a, a) == 1
            assert gf9.pow(a, -1) == gf9.inv(a)


def test_division_by_zero(gf9):
    with pytest.raises(ZeroDivisionError):
        gf9.div(1, 0)
    with pytest.raises(ZeroDivisionError):
        gf9.pow(0, -2)


def test_frobenius_gf9(gf9):
    a = gf9.from_coeffs(1, 1)
    assert gf9.coeffs(gf9.frobenius(a)) == gauss_pow((1, 1), 3, 3) == (1, 2)


def test_norm_gf9(gf9):
    a = gf9.from_coeffs(1, 1)
    assert gf9.norm(a) == 2 == gf9.from_coeffs(*gauss_pow((1, 1), 4, 3))
    assert gf9.norm(0) == 0 and gf9.norm(1) == 1


def test_root_of_unity_gf9(gf9):
    z = gf9.root_of_unity(4)
    assert gf9.coeffs(z) == (0, 2)
    assert gf9.pow(z, 4) == 1 and gf9.pow(z, 2) != 1
    assert gf9.root_of_unity(1) == 1
    with pytest.raises(FieldError):
        gf9.root_of_unity(3)


def test_root_of_unity_in_subfield():
    F = make_field(11, 1)
    z = F.root_of_unity(5)
    assert F.in_subfield(z)
    assert [F.pow(z, s) == 1 for s in range(1, 6)] == [False] * 4 + [True]


def test_solve_norm_gf9(gf9):
    x = gf9.solve_norm(2)
    assert gf9.norm(x) == 2
    brute = [y for y in gf9.elements() if gf9.coeffs(gf9.from_coeffs(*gauss_pow(gf9.coeffs(y), 4, 3))) == (2, 0)]
    assert x == brute[0] == gf9.from_coeffs(1, 1)
    assert gf9.norm(gf9.solve_norm(1)) == 1
    for bad in (0, 3, 5):
        with pytest.raises(FieldError):
            gf9.solve_norm(bad)


def test_element_encoding_roundtrip():
    F = make_field(3, 2)
    for a in range(F.order):
        assert F.from_digits(F.digits(a)) == a
        assert F.from_coeffs(*F.coeffs(a)) == a
    with pytest.raises(FieldError):
        F.from_digits((3, 0, 0, 0))


def test_canonical_order_is_lexicographic_degree0_first(gf9):
    order = [gf9.digits(a) for a in gf9.elements()]
    assert order == sorted(order)
    assert order[:4] == [(0, 0), (0, 1), (0, 2), (1, 0)]


# -- vectorised ops agree with scalar ops ------------------------------------

@pytest.mark.parametrize("q", [9, 16, 27])
def test_vectorised_ops(q):
    F = field_for_q(q)
    rng = np.random.default_rng(1)
    a, b = rng.integers(0, F.order, size=(2, 500))
    e = rng.integers(-5, 40, size=500)
    assert F.vadd(a, b).tolist() == [F.add(x, y) for x, y in zip(a.tolist(), b.tolist())]
    assert F.vmul(a, b).tolist() == [F.mul(x, y) for x, y in zip(a.tolist(), b.tolist())]
    assert F.vneg(a).tolist() == [F.neg(x) for x in a.tolist()]
    nz = np.where(a == 0, 1, a)
    assert F.vpow(nz, e).tolist() == [F.pow(x, y) for x, y in zip(nz.tolist(), e.tolist())]
    acc = 0
    for x in a.tolist():
        acc = F.add(acc, x)
    assert int(F.vsum(a)) == acc
    assert F.vsum(np.stack([a, b]), axis=1).tolist() == [acc, int(F.vsum(b))]


# -- properties ----------------------------------------------------------------

FIELDS = [field_for_q(q) for q in (3, 4, 5, 8, 9, 25, 27)]


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_field_axioms(F, data):
    el = st.integers(0, F.order - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_frobenius_and_norm_properties(F, data):
    el = st.integers(0, F.order - 1)
    a, b = data.draw(el), data.draw(el)
    fr = F.frobenius
    assert fr(a) == F.pow(a, F.q)
    assert fr(fr(a)) == a
    assert fr(F.add(a, b)) == F.add(fr(a), fr(b))
    assert fr(F.mul(a, b)) == F.mul(fr(a), fr(b))
    assert F.in_subfield(F.norm(a))
    assert F.norm(F.mul(a, b)) == F.mul(F.norm(a), F.norm(b))


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_norm_root_counts(q):
    F = field_for_q(q)
    for c in range(1, q):
        roots = [x for x in range(F.order) if F.pow(x, q + 1) == c]
        assert len(roots) == q + 1
        assert F.norm_roots(c) == sorted(roots, key=F.sort_key)
