import random

import pytest

from cyclorder.cycmatrix import congruent_mod_h_power, det, identity, mat_pow
from cyclorder.cycring import field_norm, h_valuation_at_least, is_unit
from cyclorder.generators import (
    TORSION_ORDERS,
    gen_h1_general,
    gen_h1_torsion,
    gen_torsion,
    gen_unipotent_h2,
    random_torsion_orders,
    torsion_block,
    unit_congruent_to_one,
)


@pytest.mark.parametrize("p", [5, 7, 11])
@pytest.mark.parametrize("level", [1, 2])
def test_unit_congruent_to_one(p, level):
    for seed in range(5):
        u = unit_congruent_to_one(p, seed, level)
        assert abs(field_norm(u)) == 1
        assert h_valuation_at_least(u - 1, level)
        assert u != 1


def test_no_such_unit_for_p3():
    with pytest.raises(ValueError):
        unit_congruent_to_one(3)


@pytest.mark.parametrize("p,d", [(3, 2), (5, 1), (5, 3), (7, 2)])
def test_family_shapes(p, d):
    I = identity(d, p)
    for seed in range(5):
        A = gen_unipotent_h2(p, d, seed)
        assert congruent_mod_h_power(A, I, 2) and is_unit(det(A))
        B = gen_h1_torsion(p, d, seed)
        assert congruent_mod_h_power(B, I, 1) and not B.is_identity()
        assert mat_pow(B, p).is_identity()
        C = gen_h1_general(p, d, seed)
        assert congruent_mod_h_power(C, I, 1) and not C.is_identity()


@pytest.mark.parametrize("p", [3, 5, 7])
def test_torsion_blocks_have_exact_order(p):
    for m in TORSION_ORDERS + (p, 2 * p):
        blk = torsion_block(p, m)
        assert mat_pow(blk, m).is_identity()
        for r in {2, 3, 5, 7} & {q for q in range(2, m + 1) if m % q == 0}:
            assert not mat_pow(blk, m // r).is_identity()


def test_generators_are_deterministic():
    assert gen_h1_general(5, 3, 42) == gen_h1_general(5, 3, 42)
    a = gen_torsion(5, 3, [2, 3], 9)
    b = gen_torsion(5, 3, [2, 3], 9)
    assert a == b and a[1] == 6


def test_random_orders_fit():
    rng = random.Random(1)
    for _ in range(200):
        p, d = rng.choice([3, 5, 7]), rng.randint(1, 3)
        orders = random_torsion_orders(p, d, rng)
        assert sum(torsion_block(p, m).d for m in orders) <= d
        gen_torsion(p, d, orders, rng)


def test_gen_torsion_rejects_oversize():
    with pytest.raises(ValueError):
        gen_torsion(3, 1, [12])
