"""The monoid of positive reals generated by rational powers of integers.

Every such number is a finite product of primes raised to rational
exponents, and that factorization is unique, so a value is stored as its
exponent map.  Zero is kept as a separate absorbing element.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

from .cyclopoly import phi_at_one, totient
from .numtheory import factorint, isprime

__all__ = [
    "FactoredPositive",
    "fp_mul",
    "fp_pow",
    "fp_divides",
    "fp_of_integer",
    "norm_of_root_of_unity_minus_one",
]


class FactoredPositive:
    __slots__ = ("_zero", "_exps")

    def __init__(self, exponents: Mapping[int, Fraction | int] | None = None, *, zero: bool = False):
        if zero:
            if exponents:
                raise ValueError("the zero element carries no exponents")
            self._zero = True
            self._exps: tuple[tuple[int, Fraction], ...] = ()
            return
        items = []
        for q, e in (exponents or {}).items():
            q = int(q)
            e = Fraction(e)
            if not isprime(q):
                raise ValueError(f"{q} is not prime")
            if e != 0:
                items.append((q, e))
        self._zero = False
        self._exps = tuple(sorted(items))

    @classmethod
    def zero(cls) -> FactoredPositive:
        return cls(zero=True)

    @classmethod
    def one(cls) -> FactoredPositive:
        return cls()

    @property
    def is_zero(self) -> bool:
        return self._zero

    @property
    def exponents(self) -> dict[int, Fraction]:
        return dict(self._exps)

    def valuation(self, q: int) -> Fraction:
        """Exponent of the prime ``q`` (0 when absent)."""
        if self._zero:
            raise ValueError("valuation of zero is undefined")
        return dict(self._exps).get(q, Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactoredPositive):
            return NotImplemented
        return self._zero == other._zero and self._exps == other._exps

    def __hash__(self) -> int:
        return hash((self._zero, self._exps))

    def __mul__(self, other: FactoredPositive) -> FactoredPositive:
        return fp_mul(self, other)

    def __pow__(self, q) -> FactoredPositive:
        return fp_pow(self, q)

    def __repr__(self) -> str:
        return f"FactoredPositive({str(self)!r})"

    def __str__(self) -> str:
        if self._zero:
            return "0"
        if not self._exps:
            return "1"
        parts = []
        for q, e in self._exps:
            exp = str(e.numerator) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"
            parts.append(f"{q}^{{{exp}}}")
        return " * ".join(parts)

    @classmethod
    def parse(cls, text: str) -> FactoredPositive:
        """Inverse of ``str``; also accepts bare primes and ``q^a/b``."""
        text = text.strip()
        if text == "0":
            return cls.zero()
        if text == "1":
            return cls.one()
        exps: dict[int, Fraction] = {}
        for factor in text.split("*"):
            m = _FACTOR_RE.fullmatch(factor.strip())
            if m is None:
                raise ValueError(f"cannot parse factor {factor.strip()!r}")
            q = int(m.group("base"))
            e = Fraction(m.group("exp1") or m.group("exp2") or "1")
            if q in exps:
                raise ValueError(f"prime {q} repeated")
            exps[q] = e
        return cls(exps)


_FACTOR_RE = re.compile(r"(?P<base>\d+)(?:\^(?:\{(?P<exp1>-?\d+(?:/\d+)?)\}|(?P<exp2>-?\d+(?:/\d+)?)))?")


def fp_mul(x: FactoredPositive, y: FactoredPositive) -> FactoredPositive:
    if x.is_zero or y.is_zero:
        return FactoredPositive.zero()
    exps = x.exponents
    for q, e in y.exponents.items():
        exps[q] = exps.get(q, 0) + e
    return FactoredPositive(exps)


def fp_pow(x: FactoredPositive, q) -> FactoredPositive:
    """Raise ``x`` to a rational power.

    Negative powers are only allowed on nonzero values; they leave the
    monoid and are meant for ratio comparisons.
    """
    q = Fraction(q)
    if x.is_zero:
        if q <= 0:
            raise ValueError("0 raised to a non-positive power")
        return x
    return FactoredPositive({r: e * q for r, e in x.exponents.items()})


def fp_divides(x: FactoredPositive, y: FactoredPositive) -> bool:
    """Whether ``x`` divides ``y``: every prime exponent of x is at most y's."""
    if x.is_zero:
        raise ValueError("divisibility by zero is undefined")
    if y.is_zero:
        return True
    ye = y.exponents
    xe = x.exponents
    return all(xe.get(q, 0) <= ye.get(q, 0) for q in set(xe) | set(ye))


def fp_of_integer(n: int) -> FactoredPositive:
    if n < 1:
        raise ValueError("fp_of_integer needs n >= 1; use FactoredPositive.zero() for 0")
    return FactoredPositive(factorint(n))


def norm_of_root_of_unity_minus_one(n: int) -> FactoredPositive:
    """Normalized norm of u - 1 for a primitive n-th root of unity u.

    Equals phi_n(1) ** (1 / totient(n)), i.e. q^(1/totient(n)) when n is a
    power of the prime q and 1 otherwise.
    """
    if n < 2:
        raise ValueError(f"needs n >= 2, got {n}")
    return fp_pow(fp_of_integer(phi_at_one(n)), Fraction(1, totient(n)))
