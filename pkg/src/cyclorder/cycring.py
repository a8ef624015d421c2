"""Exact arithmetic in Z[zeta_p] for an odd prime p.

Elements are stored in the power basis 1, zeta, ..., zeta^(p-2), which is a
free Z-basis, so the coefficient tuple is canonical.  ``h`` always denotes
zeta - 1, the generator of the unique prime ideal above p; (h)^(p-1) = (p).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .cyclopoly import CycPoly, cyclotomic_poly, normalize
from .factored import FactoredPositive, fp_of_integer, fp_pow
from .numtheory import require_odd_prime
from .polyalg import charpoly_integer, resultant, squarefree_part

__all__ = [
    "CycInt",
    "HBasisView",
    "NotAUnitError",
    "add",
    "sub",
    "mul",
    "neg",
    "galois_conjugate",
    "to_h_basis",
    "from_h_basis",
    "h_valuation_at_least",
    "h_valuation",
    "is_unit",
    "invert_unit",
    "exact_divide",
    "exact_divider",
    "field_norm",
    "multiplication_matrix",
    "minimal_poly",
    "normalized_norm",
    "normalized_norm_from_minimal_poly",
]


class NotAUnitError(ArithmeticError):
    """Raised when an element that must be a unit of Z[zeta_p] is not."""


@lru_cache(maxsize=None)
def _checked_prime(p: int) -> int:
    return require_odd_prime(p)


def _reduce_cyclic(vals: list[int], p: int) -> tuple[int, ...]:
    # vals has length p and represents an element modulo zeta^p - 1
    top = vals[p - 1]
    if top:
        return tuple(v - top for v in vals[: p - 1])
    return tuple(vals[: p - 1])


class CycInt:
    """An element of Z[zeta_p] with exact integer coefficients."""

    __slots__ = ("p", "coeffs", "_hash")

    def __init__(self, p: int, coeffs: Iterable[int]):
        p = _checked_prime(p)
        c = tuple(int(x) for x in coeffs)
        if len(c) != p - 1:
            raise ValueError(f"expected {p - 1} coefficients for p={p}, got {len(c)}")
        self.p = p
        self.coeffs = c
        self._hash = None

    @classmethod
    def _raw(cls, p: int, coeffs: tuple[int, ...]) -> CycInt:
        obj = cls.__new__(cls)
        obj.p = p
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    # constructors
    @classmethod
    def const(cls, p: int, c: int) -> CycInt:
        p = _checked_prime(p)
        return cls._raw(p, (int(c),) + (0,) * (p - 2))

    @classmethod
    def zero(cls, p: int) -> CycInt:
        return cls.const(p, 0)

    @classmethod
    def one(cls, p: int) -> CycInt:
        return cls.const(p, 1)

    @classmethod
    def zeta(cls, p: int, k: int = 1) -> CycInt:
        """zeta_p ** k for any integer k."""
        p = _checked_prime(p)
        vals = [0] * p
        vals[k % p] = 1
        return cls._raw(p, _reduce_cyclic(vals, p))

    @classmethod
    def h(cls, p: int) -> CycInt:
        return cls.zeta(p) - cls.one(p)

    @classmethod
    def from_cyclic(cls, p: int, vals: Sequence[int]) -> CycInt:
        """Element sum vals[i] zeta^i for arbitrary length ``vals``."""
        p = _checked_prime(p)
        acc = [0] * p
        for i, v in enumerate(vals):
            acc[i % p] += v
        return cls._raw(p, _reduce_cyclic(acc, p))

    @classmethod
    def parse(cls, p: int, text: str) -> CycInt:
        """Parse a comma-separated list of p-1 decimal integers."""
        parts = [t.strip() for t in text.split(",")]
        try:
            vals = [int(t) for t in parts]
        except ValueError as exc:
            raise ValueError(f"bad coefficient list {text!r}: {exc}") from None
        return cls(p, vals)

    # predicates
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def bit_length(self) -> int:
        return max(abs(c).bit_length() for c in self.coeffs)

    # arithmetic
    def _check(self, other: CycInt) -> None:
        if other.p != self.p:
            raise ValueError(f"conductor mismatch: {self.p} vs {other.p}")

    def _coerce(self, other) -> CycInt:
        if isinstance(other, CycInt):
            self._check(other)
            return other
        if isinstance(other, int):
            return CycInt.const(self.p, other)
        return NotImplemented

    def __add__(self, other) -> CycInt:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycInt._raw(self.p, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other) -> CycInt:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycInt._raw(self.p, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other) -> CycInt:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self) -> CycInt:
        return CycInt._raw(self.p, tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> CycInt:
        if isinstance(other, int):
            return CycInt._raw(self.p, tuple(a * other for a in self.coeffs))
        if not isinstance(other, CycInt):
            return NotImplemented
        self._check(other)
        p = self.p
        acc = [0] * p
        b = [(j, y) for j, y in enumerate(other.coeffs) if y]
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in b:
                    k = i + j
                    if k >= p:
                        k -= p
                    acc[k] += x * y
        return CycInt._raw(p, _reduce_cyclic(acc, p))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CycInt:
        if e < 0:
            return invert_unit(self) ** (-e)
        result = CycInt.one(self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, CycInt):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.p, self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"CycInt({self.p}, {list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def add(x: CycInt, y: CycInt) -> CycInt:
    return x + y


def sub(x: CycInt, y: CycInt) -> CycInt:
    return x - y


def mul(x: CycInt, y: CycInt) -> CycInt:
    return x * y


def neg(x: CycInt) -> CycInt:
    return -x


def galois_conjugate(x: CycInt, k: int) -> CycInt:
    """Apply the automorphism zeta -> zeta^k."""
    p = x.p
    if k % p == 0:
        raise ValueError(f"k={k} is divisible by p={p}; not a Galois automorphism")
    vals = [0] * p
    for i, c in enumerate(x.coeffs):
        vals[(i * k) % p] += c
    return CycInt._raw(p, _reduce_cyclic(vals, p))


@dataclass(frozen=True)
class HBasisView:
    """Coefficients of an element in the basis 1, h, h^2, ..., h^(p-2)."""

    p: int
    hcoeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.hcoeffs) != self.p - 1:
            raise ValueError(f"expected {self.p - 1} h-coefficients, got {len(self.hcoeffs)}")


def to_h_basis(x: CycInt) -> HBasisView:
    n = x.p - 1
    a = x.coeffs
    return HBasisView(x.p, tuple(sum(a[i] * comb(i, j) for i in range(j, n)) for j in range(n)))


def from_h_basis(v: HBasisView) -> CycInt:
    n = v.p - 1
    c = v.hcoeffs
    # h^j = sum_i C(j, i) (-1)^(j-i) zeta^i
    return CycInt(
        v.p,
        (sum(c[j] * comb(j, i) * (-1) ** (j - i) for j in range(i, n)) for i in range(n)),
    )


@lru_cache(maxsize=None)
def _h_power(p: int, e: int) -> CycInt:
    return CycInt.h(p) ** e


def h_valuation_at_least(x: CycInt, k: int) -> bool:
    """Whether x lies in the ideal (zeta_p - 1)^k, for 0 <= k <= p-1.

    x is in (h)^k exactly when x * h^(p-1-k) is in (h)^(p-1) = (p), i.e.
    when every coefficient of that product is divisible by p.
    """
    p = x.p
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k > p - 1:
        raise ValueError(f"k={k} exceeds the supported range 0..{p - 1}")
    if k == 0:
        return True
    y = x * _h_power(p, p - 1 - k)
    return all(c % p == 0 for c in y.coeffs)


def h_valuation(x: CycInt, cap: int | None = None) -> int:
    """Largest k <= cap (default p-1) with x in (h)^k."""
    cap = x.p - 1 if cap is None else min(cap, x.p - 1)
    k = 0
    while k < cap and h_valuation_at_least(x, k + 1):
        k += 1
    return k


def _conjugate_product(x: CycInt) -> CycInt:
    """Product of sigma_k(x) over k = 2..p-1."""
    out = CycInt.one(x.p)
    for k in range(2, x.p):
        out = out * galois_conjugate(x, k)
    return out


def field_norm(x: CycInt) -> int:
    """Norm from Q(zeta_p) to Q, i.e. det of multiplication by x, with sign.

    Computed as the resultant of Phi_p and the polynomial representing x.
    """
    return resultant(cyclotomic_poly(x.p), normalize(x.coeffs))


def is_unit(x: CycInt) -> bool:
    return abs(field_norm(x)) == 1


def invert_unit(x: CycInt) -> CycInt:
    n = field_norm(x)
    if abs(n) != 1:
        raise NotAUnitError(f"{x} has norm {n}, not a unit")
    inv = _conjugate_product(x) * n
    if not (x * inv).is_one():
        raise ArithmeticError("unit inverse failed verification")
    return inv


def exact_divider(y: CycInt):
    """Return a function computing x / y exactly for the fixed divisor y.

    Dividing by y is multiplying by the product of its other conjugates and
    then dividing the coefficients by the rational norm; the conjugate
    product is computed once.
    """
    if y.is_zero():
        raise ZeroDivisionError("division by zero in Z[zeta_p]")
    if y.is_rational():
        conj = None
        n = y.coeffs[0]
    else:
        conj = _conjugate_product(y)
        n = (y * conj).coeffs[0]

    def divide(x: CycInt) -> CycInt:
        num = x if conj is None else x * conj
        if any(c % n for c in num.coeffs):
            raise ArithmeticError(f"{y} does not divide {x}")
        return CycInt._raw(x.p, tuple(c // n for c in num.coeffs))

    return divide


def exact_divide(x: CycInt, y: CycInt) -> CycInt:
    """x / y in Z[zeta_p]; raises if y does not divide x."""
    return exact_divider(y)(x)


def multiplication_matrix(x: CycInt) -> list[list[int]]:
    """Integer matrix of t -> x*t in the power basis (column i = x * zeta^i)."""
    p = x.p
    cols = [(x * CycInt.zeta(p, i)).coeffs for i in range(p - 1)]
    return [[cols[j][i] for j in range(p - 1)] for i in range(p - 1)]


def minimal_poly(x: CycInt) -> CycPoly:
    """Monic minimal polynomial of x over Q.

    The characteristic polynomial of multiplication by x is a power of the
    minimal polynomial; its squarefree part is the answer.
    """
    return squarefree_part(charpoly_integer(multiplication_matrix(x)))


def normalized_norm(x: CycInt) -> FactoredPositive:
    """|N(x)| ** (1/(p-1)) as an exact factored value (zero for x = 0)."""
    n = abs(field_norm(x))
    if n == 0:
        return FactoredPositive.zero()
    return fp_pow(fp_of_integer(n), Fraction(1, x.p - 1))


def normalized_norm_from_minimal_poly(x: CycInt) -> FactoredPositive:
    """Same value computed from |mu(0)| ** (1/deg mu), mu the minimal polynomial."""
    mu = minimal_poly(x)
    c0 = abs(mu[0])
    if c0 == 0:
        return FactoredPositive.zero()
    return fp_pow(fp_of_integer(c0), Fraction(1, len(mu) - 1))
