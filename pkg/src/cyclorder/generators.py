"""Deterministic generators of test matrices over Z[zeta_p].

Every generator takes an integer seed and returns the same matrix for the
same arguments.  Conjugators are products of elementary matrices
I + c E_ij, so they and their inverses stay in GL_d(Z[zeta_p]).
"""

from __future__ import annotations

import random
from math import lcm
from typing import Sequence

from .cyclopoly import cyclotomic_poly, totient
from .cycmatrix import CycMatrix, companion_matrix, direct_sum, identity, mat_mul
from .cycring import CycInt, invert_unit, to_h_basis
from .numtheory import require_odd_prime

__all__ = [
    "random_cycint",
    "random_unimodular",
    "conjugate",
    "unit_congruent_to_one",
    "gen_unipotent_h2",
    "gen_h1_torsion",
    "gen_h1_general",
    "torsion_block",
    "gen_torsion",
    "random_torsion_orders",
    "TORSION_ORDERS",
]

TORSION_ORDERS = (2, 3, 4, 5, 6, 8, 10, 12)


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_cycint(rng: random.Random, p: int, bound: int = 2, density: float = 0.6) -> CycInt:
    return CycInt(p, [rng.randint(-bound, bound) if rng.random() < density else 0 for _ in range(p - 1)])


def _elementary(p: int, d: int, i: int, j: int, c: CycInt) -> CycMatrix:
    rows = [[CycInt.const(p, int(a == b)) for b in range(d)] for a in range(d)]
    rows[i][j] = c
    return CycMatrix(p, rows)


def random_unimodular(
    p: int, d: int, seed=0, steps: int = 3, bound: int = 1, integral: bool = False
) -> tuple[CycMatrix, CycMatrix]:
    """(B, B^-1) for a random product of ``steps`` elementary matrices.

    With ``integral`` the off-diagonal entries are rational integers, so B
    lies in GL_d(Z).  For d = 1 the identity is returned.
    """
    rng = _rng(seed)
    B = identity(d, p)
    Binv = identity(d, p)
    if d == 1:
        return B, Binv
    for _ in range(steps):
        i, j = rng.sample(range(d), 2)
        if integral:
            c = CycInt.const(p, rng.choice([k for k in range(-bound, bound + 1) if k]))
        else:
            c = random_cycint(rng, p, bound)
            if c.is_zero():
                c = CycInt.one(p)
        B = mat_mul(B, _elementary(p, d, i, j, c))
        Binv = mat_mul(_elementary(p, d, i, j, -c), Binv)
    return B, Binv


def conjugate(A: CycMatrix, B: CycMatrix, Binv: CycMatrix) -> CycMatrix:
    return mat_mul(mat_mul(B, A), Binv)


def _cyclotomic_unit(p: int, a: int) -> CycInt:
    # (zeta^a - 1) / (zeta - 1) = 1 + zeta + ... + zeta^(a-1)
    return CycInt.from_cyclic(p, [1] * a)


def unit_congruent_to_one(p: int, seed=0, level: int = 2) -> CycInt:
    """A unit of infinite order congruent to 1 modulo h^level (level 1 or 2).

    Built from a nonzero product of the cyclotomic units
    (zeta^a - 1)/(zeta - 1), 2 <= a <= (p-1)/2, which are multiplicatively
    independent; raising to p-1 makes it 1 mod h, and a power of zeta
    removes the linear h-term.  Needs p >= 5: Z[zeta_3] has no such unit.
    """
    require_odd_prime(p)
    if p < 5:
        raise ValueError("Z[zeta_3] has only finitely many units")
    rng = _rng(seed)
    gens = list(range(2, (p - 1) // 2 + 1))
    exps = [rng.randint(-1, 1) for _ in gens]
    if not any(exps):
        exps[rng.randrange(len(gens))] = rng.choice([-1, 1])
    u = CycInt.one(p)
    for a, e in zip(gens, exps):
        c = _cyclotomic_unit(p, a)
        u = u * (c ** e if e >= 0 else invert_unit(c) ** (-e))
    u = u ** (p - 1)
    if level >= 2:
        lin = to_h_basis(u).hcoeffs[1] % p
        u = u * CycInt.zeta(p, -lin)
    return u


def gen_unipotent_h2(p: int, d: int, seed=0, density: float = 0.5, bound: int = 3) -> CycMatrix:
    """A = I + h^2 M in GL_d(Z[zeta_p]).

    For d >= 2, M is a random strictly upper triangular integer matrix
    conjugated by an integral unimodular matrix (so still integral, no
    longer triangular); M = 0 is possible and then A = I.  For d = 1 the
    single entry is a unit congruent to 1 mod h^2 (p >= 5 only).
    """
    require_odd_prime(p)
    rng = _rng(seed)
    if d == 1:
        return CycMatrix(p, [[unit_congruent_to_one(p, rng, level=2)]])
    h2 = CycInt.h(p) ** 2
    M = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            if rng.random() < density:
                M[i][j] = rng.randint(-bound, bound)
    B, Binv = random_unimodular(p, d, rng, steps=rng.randint(0, 3), integral=True)
    Mc = conjugate(CycMatrix.from_integers(p, M), B, Binv)
    return CycMatrix(p, [[(1 if i == j else 0) + h2 * Mc[i, j] for j in range(d)] for i in range(d)])


def gen_h1_torsion(p: int, d: int, seed=0, exponents: Sequence[int] | None = None) -> CycMatrix:
    """diag(zeta^a_1, ..., zeta^a_d) conjugated by a unimodular matrix.

    Always congruent to I mod h; order p unless every a_i = 0.
    """
    require_odd_prime(p)
    rng = _rng(seed)
    if exponents is None:
        exponents = [rng.randrange(p) for _ in range(d)]
        if not any(exponents):
            exponents[rng.randrange(d)] = rng.randrange(1, p)
    D = CycMatrix.diag(p, [CycInt.zeta(p, a) for a in exponents])
    B, Binv = random_unimodular(p, d, rng, steps=rng.randint(1, 3))
    return conjugate(D, B, Binv)


def gen_h1_general(p: int, d: int, seed=0) -> CycMatrix:
    """A random A != I with A = I mod h, of order p or of infinite order.

    d >= 2: diag(zeta^a_i) (I + h N) with N strictly upper triangular,
    conjugated.  d = 1: zeta^a times a unit congruent to 1 mod h.
    """
    require_odd_prime(p)
    rng = _rng(seed)
    if d == 1:
        if p == 3 or rng.random() < 0.3:
            return CycMatrix(p, [[CycInt.zeta(p, rng.randrange(1, p))]])
        u = unit_congruent_to_one(p, rng, level=1)
        return CycMatrix(p, [[u * CycInt.zeta(p, rng.randrange(p))]])
    h = CycInt.h(p)
    while True:
        exps = [rng.randrange(p) for _ in range(d)]
        rows = []
        for i in range(d):
            row = []
            for j in range(d):
                if i == j:
                    row.append(CycInt.one(p))
                elif j > i and rng.random() < 0.6:
                    row.append(h * random_cycint(rng, p, 2))
                else:
                    row.append(CycInt.zero(p))
            rows.append(row)
        A = mat_mul(CycMatrix.diag(p, [CycInt.zeta(p, a) for a in exps]), CycMatrix(p, rows))
        if not A.is_identity():
            break
    B, Binv = random_unimodular(p, d, rng, steps=rng.randint(1, 3))
    return conjugate(A, B, Binv)


def torsion_block(p: int, m: int) -> CycMatrix:
    """Smallest block of exact order m built from zeta_p and companion matrices.

    m = 1, 2, p, 2p give 1x1 blocks; m = p*k with p not dividing k uses
    zeta * companion(phi_k); anything else is companion(phi_m).
    """
    if m < 1:
        raise ValueError("order must be positive")
    if m == 1:
        return identity(1, p)
    if m == p:
        return CycMatrix(p, [[CycInt.zeta(p)]])
    if m == 2 * p:
        return CycMatrix(p, [[-CycInt.zeta(p)]])
    if m % p == 0 and (m // p) % p != 0:
        C = companion_matrix(cyclotomic_poly(m // p), p)
        return C.scale(CycInt.zeta(p))
    return companion_matrix(cyclotomic_poly(m), p)


def gen_torsion(
    p: int, d: int, orders: Sequence[int], seed=0, conjugated: bool = True
) -> tuple[CycMatrix, int]:
    """Direct sum of torsion blocks (padded with 1s to size d), conjugated.

    Returns the matrix and its order, the lcm of the requested orders.
    """
    require_odd_prime(p)
    for m in orders:
        if totient(m) > d * (p - 1):
            raise ValueError(f"order {m} has totient above d(p-1) = {d * (p - 1)}")
    blocks = [torsion_block(p, m) for m in orders]
    size = sum(b.d for b in blocks)
    if size > d:
        raise ValueError(f"blocks need dimension {size} > d = {d}")
    blocks += [identity(1, p)] * (d - size)
    A = direct_sum(blocks)
    if conjugated:
        B, Binv = random_unimodular(p, d, _rng(seed), steps=3)
        A = conjugate(A, B, Binv)
    return A, lcm(*orders) if orders else 1


def random_torsion_orders(p: int, d: int, rng: random.Random, pool: Sequence[int] = TORSION_ORDERS) -> list[int]:
    """Random multiset of orders from ``pool`` whose blocks fit in dimension d."""
    rng = _rng(rng)
    orders: list[int] = []
    room = d
    for _ in range(d):
        fits = [m for m in pool if torsion_block(p, m).d <= room and totient(m) <= d * (p - 1)]
        if not fits:
            break
        m = rng.choice(fits)
        orders.append(m)
        room -= torsion_block(p, m).d
        if room == 0 or rng.random() < 0.3:
            break
    return orders
