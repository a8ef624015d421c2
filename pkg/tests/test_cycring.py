import cmath
import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from cyclorder.cyclopoly import cyclotomic_poly
from cyclorder.cycring import (
    CycInt,
    HBasisView,
    NotAUnitError,
    exact_divide,
    field_norm,
    from_h_basis,
    galois_conjugate,
    h_valuation,
    h_valuation_at_least,
    invert_unit,
    is_unit,
    minimal_poly,
    multiplication_matrix,
    normalized_norm,
    normalized_norm_from_minimal_poly,
    to_h_basis,
)
from cyclorder.factored import FactoredPositive, fp_mul
from cyclorder.polyalg import det_fraction

from conftest import cycint_pairs, cycints, embed

P = 5
z = CycInt.zeta(P)
h = CycInt.h(P)


def in_ideal_by_h_basis(x, k):
    """Oracle: x in (h)^k iff its first k h-basis coefficients are 0 mod p.

    The terms c_j h^j (j < p-1) have pairwise distinct valuations
    (p-1) v_p(c_j) + j, so the lowest of them decides.
    """
    c = to_h_basis(x).hcoeffs
    return all(cj % x.p == 0 for cj in c[:k])


def test_constructor_validates():
    with pytest.raises(ValueError):
        CycInt(5, [1, 2, 3])
    with pytest.raises(ValueError):
        CycInt(4, [1, 2, 3])
    with pytest.raises(ValueError):
        CycInt(2, [1])


def test_ring_examples():
    assert z * CycInt.zeta(P, 4) == CycInt.one(P)
    x = CycInt(P, [3, -1, 4, 1])
    assert (x + (-x)).is_zero()
    assert h * (1 + z) == CycInt.zeta(P, 2) - 1
    assert z**5 == 1


def test_conductor_mismatch():
    with pytest.raises(ValueError):
        CycInt.zeta(5) + CycInt.zeta(7)
    with pytest.raises(ValueError):
        CycInt.zeta(5) * CycInt.zeta(7)


def test_galois_examples():
    assert galois_conjugate(z, 2) == CycInt.zeta(P, 2)
    assert galois_conjugate(1 + z, 4) == 1 + CycInt.zeta(P, 4)
    prod = CycInt.one(P)
    for k in range(1, P):
        c = galois_conjugate(h, k)
        assert c == CycInt.zeta(P, k) - 1
        prod = prod * c
    assert prod == 5
    with pytest.raises(ValueError):
        galois_conjugate(z, 5)


def test_h_basis_examples():
    assert to_h_basis(z).hcoeffs == (1, 1, 0, 0)
    assert to_h_basis(CycInt.one(P)).hcoeffs == (1, 0, 0, 0)
    assert to_h_basis(z * z).hcoeffs == (1, 2, 1, 0)
    assert from_h_basis(HBasisView(P, (0, 1, 0, 0))) == h


def test_h_valuation_examples():
    assert h_valuation_at_least(h, 1)
    assert not h_valuation_at_least(h, 2)
    for p in (3, 5, 7, 11):
        assert h_valuation_at_least(CycInt.const(p, p), p - 1)
        for k in range(p):
            assert h_valuation_at_least(CycInt.zero(p), k)
    with pytest.raises(ValueError):
        h_valuation_at_least(h, P)


def test_unit_examples():
    assert is_unit(1 + z)
    assert not is_unit(h)
    assert not is_unit(CycInt.zero(P))
    assert invert_unit(CycInt.one(P)) == 1
    assert invert_unit(z) == CycInt.zeta(P, 4)
    inv = invert_unit(1 + z)
    assert (1 + z) * inv == 1
    with pytest.raises(NotAUnitError):
        invert_unit(h)


def test_norm_examples():
    assert abs(field_norm(h)) == 5
    assert field_norm(CycInt.const(P, 2)) == 16
    assert field_norm(CycInt.zero(P)) == 0


def test_minimal_poly_examples():
    assert minimal_poly(z) == cyclotomic_poly(5)
    assert minimal_poly(CycInt.const(P, 7)) == (-7, 1)
    # phi_5(X + 1) = X^4 + 5X^3 + 10X^2 + 10X + 5
    assert minimal_poly(h) == (5, 10, 10, 5, 1)
    # degree divides p - 1: zeta + zeta^-1 generates the real subfield
    assert len(minimal_poly(z + CycInt.zeta(P, 4))) - 1 == 2


def test_normalized_norm_examples():
    assert normalized_norm(h) == FactoredPositive({5: F(1, 4)})
    assert normalized_norm(z) == FactoredPositive.one()
    assert normalized_norm(CycInt.const(P, 6)) == FactoredPositive({2: 1, 3: 1})
    assert normalized_norm(CycInt.zero(P)).is_zero


def test_exact_divide():
    x = CycInt(7, [1, -2, 0, 3, 1, 1])
    y = CycInt(7, [2, 1, 0, 0, -1, 0])
    assert exact_divide(x * y, y) == x
    with pytest.raises(ArithmeticError):
        exact_divide(CycInt.one(7), CycInt.h(7))


@given(cycint_pairs())
def test_norm_resultant_equals_multiplication_determinant(pair):
    x, _ = pair
    assert field_norm(x) == det_fraction(multiplication_matrix(x))


@given(cycint_pairs(bound=5))
def test_norm_matches_numeric_conjugate_product(pair):
    x, _ = pair
    n = abs(field_norm(x))
    numeric = math.prod(abs(embed(x, k)) for k in range(1, x.p))
    assert numeric == pytest.approx(n, rel=1e-9, abs=1e-6)


@given(cycint_pairs())
def test_normalized_norm_multiplicative(pair):
    x, y = pair
    assert normalized_norm(x * y) == fp_mul(normalized_norm(x), normalized_norm(y))


@settings(max_examples=50)
@given(cycint_pairs())
def test_definition_form_agrees(pair):
    x, _ = pair
    assert normalized_norm_from_minimal_poly(x) == normalized_norm(x)


@given(cycint_pairs())
def test_h_basis_round_trip(pair):
    x, _ = pair
    assert from_h_basis(to_h_basis(x)) == x


@given(cycint_pairs(), st.integers(1, 6))
def test_galois_invariance_of_norm(pair, k):
    x, _ = pair
    if k % x.p:
        assert normalized_norm(galois_conjugate(x, k)) == normalized_norm(x)


@given(cycint_pairs(), st.integers(1, 6))
def test_galois_is_ring_automorphism(pair, k):
    x, y = pair
    if k % x.p == 0:
        return
    s = lambda t: galois_conjugate(t, k)  # noqa: E731
    assert s(x + y) == s(x) + s(y)
    assert s(x * y) == s(x) * s(y)


@given(cycint_pairs(bound=3), st.integers(1, 6), st.integers(1, 6))
def test_galois_composition(pair, k, l):
    x, _ = pair
    p = x.p
    if k % p and l % p:
        assert galois_conjugate(galois_conjugate(x, l), k) == galois_conjugate(x, (k * l) % p)
    assert galois_conjugate(x, 1) == x


@given(cycint_pairs())
def test_ideal_membership_matches_h_basis_oracle(pair):
    x, _ = pair
    for k in range(x.p):
        assert h_valuation_at_least(x, k) == in_ideal_by_h_basis(x, k)


@given(cycint_pairs(bound=6), st.integers(0, 3), st.integers(0, 3))
def test_valuation_additive(pair, a, b):
    x, y = pair
    p = x.p
    if x.is_zero() or y.is_zero() or a + b > p - 1:
        return
    # force tight valuations a and b by multiplying h-free parts by h^a, h^b
    hp = CycInt.h(p)
    xa, yb = x * hp**a, y * hp**b
    va, vb = h_valuation(xa), h_valuation(yb)
    if va == a and vb == b and a + b < p - 1:
        assert h_valuation(xa * yb) == a + b
        assert h_valuation_at_least(xa * yb, a + b)
        assert not h_valuation_at_least(xa * yb, a + b + 1)


@given(cycint_pairs(bound=4))
def test_unit_inverse(pair):
    x, _ = pair
    if is_unit(x):
        assert x * invert_unit(x) == 1
    else:
        with pytest.raises(NotAUnitError):
            invert_unit(x)
