"""Rational-integer helpers: factorization, primality, prime-power detection."""

from __future__ import annotations

from functools import lru_cache
from math import lcm

from sympy import factorint as _sympy_factorint
from sympy import isprime as _sympy_isprime
from sympy import prevprime


def isprime(n: int) -> bool:
    return bool(_sympy_isprime(n))


@lru_cache(maxsize=4096)
def _factor_cached(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((int(q), int(e)) for q, e in _sympy_factorint(n).items()))


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer as ``{prime: exponent}``.

    Deterministic: trial division, Pollard rho/p-1 and a BPSW primality test
    (all provided by sympy).  Keys come back in ascending order.
    """
    if n < 1:
        raise ValueError(f"factorint needs a positive integer, got {n}")
    if n < (1 << 64):
        return dict(_factor_cached(n))
    return dict(sorted((int(q), int(e)) for q, e in _sympy_factorint(n).items()))


def prime_power_base(n: int) -> int | None:
    """Return q if n = q^k for a prime q and k >= 1, else None."""
    if n < 2:
        return None
    f = factorint(n)
    if len(f) == 1:
        return next(iter(f))
    return None


def require_odd_prime(p: int) -> int:
    if not isinstance(p, int) or p < 3 or not isprime(p):
        raise ValueError(f"conductor must be an odd prime, got {p!r}")
    return p


def lcm_all(values) -> int:
    out = 1
    for v in values:
        out = lcm(out, v)
    return out


def screening_primes(count: int, bits: int, avoid: int) -> list[int]:
    """``count`` distinct primes just below 2**bits, skipping ``avoid``."""
    out: list[int] = []
    q = 1 << bits
    while len(out) < count:
        q = int(prevprime(q))
        if q != avoid:
            out.append(q)
    return out
