"""Deciding whether a matrix over Z[zeta_p] has finite or infinite order.

``classify_order`` tries the two congruence criteria first:

* A != I and A = I mod h^2  ->  infinite order;
* A != I and A = I mod h    ->  order exactly p, or infinite (one power decides).

Everything else goes to ``exact_order_oracle``, which needs no criterion.  A
torsion element of GL_d(Z[zeta_p]) is diagonalizable with root-of-unity
eigenvalues, each of degree at most d(p-1) over Q, so its order divides
E = lcm{m : totient(m) <= d(p-1)}.  The oracle first reduces modulo a few
large rational primes q (A^E != I mod q proves infinite order), then
recovers the order m of A mod q and checks A^m = I exactly.  The kernel of
reduction mod q (q odd, q != p) is torsion-free, so a finite-order A has
the same order mod q as over Z[zeta_p]; if A^m != I exactly, A has
infinite order.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .cyclopoly import totient
from .cycmatrix import (
    CycMatrix,
    NotInvertibleError,
    congruent_mod_h_power,
    conjugation_embedding,
    det,
    mat_pow,
)
from .cycring import is_unit, multiplication_matrix
from .factored import fp_divides, fp_pow, norm_of_root_of_unity_minus_one
from .numtheory import factorint, lcm_all, require_odd_prime, screening_primes

__all__ = [
    "GroupMode",
    "Kind",
    "Rule",
    "OrderVerdict",
    "divisibility_obstruction",
    "torsion_exponent_bound",
    "exact_order_oracle",
    "classify_order",
]

DEFAULT_SCREENING_PRIMES = 3


class GroupMode(str, enum.Enum):
    GL = "gl"
    PGL = "pgl"


class Kind(str, enum.Enum):
    IDENTITY = "identity"
    FINITE = "finite"
    INFINITE = "infinite"


class Rule(str, enum.Enum):
    IDENTITY_TEST = "identity-test"
    CRITERION_H2 = "criterion-h2"
    CRITERION_H1_POWER_TEST = "criterion-h1-power-test"
    ORACLE_EXPONENT_BOUND = "oracle-exponent-bound"
    MODULAR_WITNESS = "modular-witness"


@dataclass(frozen=True)
class OrderVerdict:
    kind: Kind
    rule: Rule
    order: int | None = None
    p: int | None = None
    d: int | None = None
    mode: GroupMode = GroupMode.GL
    exponent_bound: int | None = None
    exponent_tested: int | None = None
    screening_primes: tuple[int, ...] = ()
    witness_prime: int | None = None
    peak_bits: int = 0
    embedded_dim: int | None = None

    def __post_init__(self):
        if self.kind is Kind.FINITE and self.order == 1:
            raise ValueError("order 1 must be reported as identity")
        if self.kind is Kind.FINITE and not self.order:
            raise ValueError("finite verdict needs an order")
        if self.rule is Rule.CRITERION_H2 and self.kind is not Kind.INFINITE:
            raise ValueError("criterion-h2 only ever proves infinite order")
        if self.rule is Rule.CRITERION_H1_POWER_TEST:
            if not (self.kind is Kind.INFINITE or (self.kind is Kind.FINITE and self.order == self.p)):
                raise ValueError("criterion-h1-power-test yields order p or infinite")

    @property
    def is_finite(self) -> bool:
        return self.kind is not Kind.INFINITE

    @property
    def finite_order(self) -> int | None:
        """1 for identity, m for Finite(m), None for infinite."""
        if self.kind is Kind.IDENTITY:
            return 1
        return self.order

    def same_class(self, other: OrderVerdict) -> bool:
        """Same kind and order, ignoring which rule decided it."""
        return self.kind == other.kind and self.finite_order == other.finite_order

    def label(self) -> str:
        if self.kind is Kind.FINITE:
            return f"Finite({self.order})"
        return self.kind.value.capitalize()

    def certificate(self) -> dict:
        """Canonical certificate; integers are written as decimal strings."""
        s = lambda v: None if v is None else str(v)  # noqa: E731
        return {
            "kind": self.kind.value,
            "order": s(self.finite_order),
            "rule": self.rule.value,
            "p": s(self.p),
            "d": s(self.d),
            "mode": self.mode.value,
            "embedded_dim": s(self.embedded_dim),
            "exponent_bound": s(self.exponent_bound),
            "exponent_tested": s(self.exponent_tested),
            "screening_primes": [str(q) for q in self.screening_primes],
            "witness_prime": s(self.witness_prime),
            "peak_bits": str(self.peak_bits),
        }

    def to_json(self) -> str:
        return json.dumps(self.certificate(), indent=2) + "\n"


def divisibility_obstruction(p: int, n: int) -> bool:
    """Whether N(zeta_p - 1)^2 divides N(u_n - 1), u_n a primitive n-th root.

    True would mean the norm argument fails to exclude u_n as an eigenvalue
    of a matrix congruent to I mod h^2; it is False for every n >= 2.
    """
    require_odd_prime(p)
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    lhs = fp_pow(norm_of_root_of_unity_minus_one(p), 2)
    return fp_divides(lhs, norm_of_root_of_unity_minus_one(n))


def _totient_search_limit(bound: int) -> int:
    # totient(m) >= sqrt(m/2) for every m >= 1, so totient(m) <= B forces m <= 2 B^2
    return 2 * bound * bound + 2


@lru_cache(maxsize=None)
def torsion_exponent_bound(d: int, p: int) -> int:
    """lcm of every m with totient(m) <= d(p-1); finite orders divide it."""
    if d < 1:
        raise ValueError("d must be positive")
    require_odd_prime(p)
    bound = d * (p - 1)
    return lcm_all(m for m in range(1, _totient_search_limit(bound) + 1) if totient(m) <= bound)


class _ModularImage:
    """A reduced mod q, as a d(p-1) x d(p-1) matrix over F_q (regular representation)."""

    def __init__(self, A: CycMatrix, q: int):
        p, d = A.p, A.d
        n = d * (p - 1)
        big = np.zeros((n, n), dtype=np.int64)
        k = p - 1
        for i in range(d):
            for j in range(d):
                blk = multiplication_matrix(A.rows[i][j])
                big[i * k : (i + 1) * k, j * k : (j + 1) * k] = np.array(
                    [[c % q for c in row] for row in blk], dtype=np.int64
                )
        self.q = q
        self.n = n
        self.mat = big
        self.eye = np.eye(n, dtype=np.int64)

    def _mul(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        return (X @ Y) % self.q

    def power(self, e: int) -> np.ndarray:
        result = self.eye
        base = self.mat
        while e:
            if e & 1:
                result = self._mul(result, base)
            e >>= 1
            if e:
                base = self._mul(base, base)
        return result

    def is_identity_power(self, e: int) -> bool:
        return bool(np.array_equal(self.power(e), self.eye))

    def order_dividing(self, E: int) -> int:
        """Order of the image, given that it divides E."""
        m = E
        for r, a in factorint(E).items():
            for _ in range(a):
                if self.is_identity_power(m // r):
                    m //= r
                else:
                    break
        return m


def _screen_bits(n: int) -> int:
    # keep n * q^2 below 2^63 so int64 matrix products cannot overflow
    return min(30, (62 - max(1, math.ceil(math.log2(n)))) // 2)


def exact_order_oracle(A: CycMatrix, n_screen: int = DEFAULT_SCREENING_PRIMES) -> OrderVerdict:
    """Ground-truth order of A in GL_d(Z[zeta_p]), independent of the criteria."""
    if not is_unit(det(A)):
        raise NotInvertibleError("determinant is not a unit; A is not in GL_d(Z[zeta_p])")
    p, d = A.p, A.d
    if A.is_identity():
        return OrderVerdict(Kind.IDENTITY, Rule.IDENTITY_TEST, p=p, d=d, peak_bits=A.bit_length())
    E = torsion_exponent_bound(d, p)
    n = d * (p - 1)
    primes = screening_primes(max(1, n_screen), _screen_bits(n), avoid=p)
    images = []
    for q in primes:
        img = _ModularImage(A, q)
        if not img.is_identity_power(E):
            return OrderVerdict(
                Kind.INFINITE,
                Rule.MODULAR_WITNESS,
                p=p,
                d=d,
                exponent_bound=E,
                exponent_tested=E,
                screening_primes=tuple(primes),
                witness_prime=q,
                peak_bits=A.bit_length(),
            )
        images.append(img)
    m = images[0].order_dividing(E)
    stats: dict = {}
    Am = mat_pow(A, m, stats)
    common = dict(
        p=p,
        d=d,
        exponent_bound=E,
        exponent_tested=m,
        screening_primes=tuple(primes),
        peak_bits=stats["peak_bits"],
    )
    if Am.is_identity():
        return OrderVerdict(Kind.FINITE, Rule.ORACLE_EXPONENT_BOUND, order=m, **common)
    return OrderVerdict(Kind.INFINITE, Rule.ORACLE_EXPONENT_BOUND, **common)


def _classify_gl(A: CycMatrix, n_screen: int) -> OrderVerdict:
    p, d = A.p, A.d
    if A.is_identity():
        return OrderVerdict(Kind.IDENTITY, Rule.IDENTITY_TEST, p=p, d=d, peak_bits=A.bit_length())
    I = CycMatrix.scalar(p, d, 1)
    if congruent_mod_h_power(A, I, 2):
        return OrderVerdict(Kind.INFINITE, Rule.CRITERION_H2, p=p, d=d, peak_bits=A.bit_length())
    if congruent_mod_h_power(A, I, 1):
        stats: dict = {}
        Ap = mat_pow(A, p, stats)
        kw = dict(p=p, d=d, exponent_tested=p, peak_bits=stats["peak_bits"])
        if Ap.is_identity():
            return OrderVerdict(Kind.FINITE, Rule.CRITERION_H1_POWER_TEST, order=p, **kw)
        return OrderVerdict(Kind.INFINITE, Rule.CRITERION_H1_POWER_TEST, **kw)
    return exact_order_oracle(A, n_screen)


def classify_order(
    A: CycMatrix,
    mode: GroupMode | str = GroupMode.GL,
    n_screen: int = DEFAULT_SCREENING_PRIMES,
) -> OrderVerdict:
    """Order of A in GL_d or PGL_d of Z[zeta_p], with the rule that decided it.

    PGL mode classifies the conjugation embedding of A in GL_{d^2}; scalar
    matrices are reported as the identity.
    """
    mode = GroupMode(mode)
    if not is_unit(det(A)):
        raise NotInvertibleError("determinant is not a unit; A is not in GL_d(Z[zeta_p])")
    if mode is GroupMode.GL:
        return _classify_gl(A, n_screen)
    if A.is_scalar():
        return OrderVerdict(
            Kind.IDENTITY, Rule.IDENTITY_TEST, p=A.p, d=A.d, mode=mode,
            embedded_dim=A.d * A.d, peak_bits=A.bit_length(),
        )
    v = _classify_gl(conjugation_embedding(A), n_screen)
    return replace(v, d=A.d, mode=mode, embedded_dim=A.d * A.d)


def obstruction_exponents(p: int, n: int) -> tuple[Fraction, Fraction]:
    """(v_p of N(zeta_p - 1)^2, v_p of N(u_n - 1))."""
    lhs = fp_pow(norm_of_root_of_unity_minus_one(p), 2)
    rhs = norm_of_root_of_unity_minus_one(n)
    return lhs.valuation(p), rhs.valuation(p)
