from math import gcd

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cyclorder.cyclopoly import (
    cyclotomic_poly,
    degree,
    divisors,
    phi_at_one,
    poly_eval,
    poly_mul,
    totient,
)


def numeric_cyclotomic(n):
    """Coefficients of prod (X - w) over primitive n-th roots, rounded."""
    roots = [np.exp(2j * np.pi * k / n) for k in range(1, n + 1) if gcd(k, n) == 1]
    coeffs = np.poly(roots)[::-1]
    return tuple(int(round(c.real)) for c in coeffs)


def brute_totient(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@pytest.mark.parametrize(
    "n, expected",
    [(1, (-1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1))],
)
def test_cyclotomic_examples(n, expected):
    assert cyclotomic_poly(n) == expected


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclotomic_matches_numeric_root_product(n):
    assert cyclotomic_poly(n) == numeric_cyclotomic(n)


def test_cyclotomic_rejects_zero():
    with pytest.raises(ValueError):
        cyclotomic_poly(0)


@pytest.mark.parametrize("n, expected", [(9, 6), (1, 1), (12, 4)])
def test_totient_examples(n, expected):
    assert totient(n) == expected


def test_totient_rejects_zero():
    with pytest.raises(ValueError):
        totient(0)


@pytest.mark.parametrize("n, expected", [(9, 3), (12, 1), (2, 2)])
def test_phi_at_one_examples(n, expected):
    assert phi_at_one(n) == expected


@pytest.mark.parametrize("n", [0, 1, -3])
def test_phi_at_one_domain(n):
    with pytest.raises(ValueError):
        phi_at_one(n)


def test_phi_one_at_one_only_through_polynomial():
    assert poly_eval(cyclotomic_poly(1), 1) == 0


N_TEST = 400


def test_degree_equals_totient():
    for n in range(1, N_TEST + 1):
        assert degree(cyclotomic_poly(n)) == totient(n) == brute_totient(n)


def test_divisor_product_is_x_n_minus_one():
    for n in range(1, 150):
        prod = (1,)
        for d in divisors(n):
            prod = poly_mul(prod, cyclotomic_poly(d))
        assert prod == (-1,) + (0,) * (n - 1) + (1,)


def test_evaluation_at_one_matches_phi_at_one():
    for n in range(2, N_TEST + 1):
        assert poly_eval(cyclotomic_poly(n), 1) == phi_at_one(n)


@given(st.integers(1, 2000))
def test_totient_sum_over_divisors(n):
    assert sum(totient(d) for d in divisors(n)) == n


def test_cyclotomic_is_monic_and_canonical():
    for n in range(1, 100):
        f = cyclotomic_poly(n)
        assert f[-1] == 1
