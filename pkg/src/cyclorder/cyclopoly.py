"""Cyclotomic polynomials, Euler's totient and the value of phi_n at 1.

Polynomials are plain tuples of Python ints, lowest degree first.  The zero
polynomial is the empty tuple; there are never trailing zeros.
"""

from __future__ import annotations

import threading
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .numtheory import factorint, prime_power_base

CycPoly = tuple  # tuple[int, ...]


def normalize(coeffs: Iterable[int]) -> CycPoly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f: Sequence[int]) -> int:
    """Degree of ``f``; -1 for the zero polynomial."""
    return len(f) - 1


def poly_add(f: Sequence[int], g: Sequence[int]) -> CycPoly:
    n = max(len(f), len(g))
    return normalize(
        (f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)
    )


def poly_sub(f: Sequence[int], g: Sequence[int]) -> CycPoly:
    return poly_add(f, [-c for c in g])


def poly_mul(f: Sequence[int], g: Sequence[int]) -> CycPoly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return normalize(out)


def poly_divmod_monic(f: Sequence[int], g: Sequence[int]) -> tuple[CycPoly, CycPoly]:
    """Division with remainder by a monic integer polynomial."""
    if not g or g[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(f)
    dg = len(g) - 1
    if len(rem) <= dg:
        return (), normalize(rem)
    quo = [0] * (len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if c:
            quo[i - dg] = c
            for j in range(dg + 1):
                rem[i - dg + j] -= c * g[j]
    return normalize(quo), normalize(rem[:dg])


def poly_eval(f: Sequence[int], x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def divisors(n: int) -> list[int]:
    divs = [1]
    for q, e in factorint(n).items():
        divs = [d * q**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def totient(n: int) -> int:
    """Euler's phi, from the prime factorization of ``n``."""
    if n < 1:
        raise ValueError(f"totient needs n >= 1, got {n}")
    out = 1
    for q, e in factorint(n).items():
        out *= q ** (e - 1) * (q - 1)
    return out


_cache: dict[int, CycPoly] = {1: (-1, 1)}
_cache_lock = threading.Lock()


def _times_binomial(f: list[int], d: int) -> list[int]:
    # f * (X^d - 1)
    out = [0] * (len(f) + d)
    for i, c in enumerate(f):
        out[i + d] += c
        out[i] -= c
    return out


def _over_binomial(f: list[int], d: int) -> list[int]:
    # exact quotient f / (X^d - 1): f_i = q_{i-d} - q_i
    q = [0] * (len(f) - d)
    for i in range(len(q)):
        q[i] = (q[i - d] if i >= d else 0) - f[i]
    return q


def _squarefree_cyclotomic(primes: Sequence[int]) -> list[int]:
    # phi_m for m = prod(primes), via the Moebius product of (X^e - 1)^mu(m/e);
    # the numerator factors go first so every division is exact
    m = 1
    for q in primes:
        m *= q
    num, den = [], []
    for mask in range(1 << len(primes)):
        e = m
        for k, q in enumerate(primes):
            if mask >> k & 1:
                e //= q
        (num if bin(mask).count("1") % 2 == 0 else den).append(e)
    f = [1]
    for e in num:
        f = _times_binomial(f, e)
    for e in den:
        f = _over_binomial(f, e)
    return f


def cyclotomic_poly(n: int) -> CycPoly:
    """The n-th cyclotomic polynomial.

    phi_n(X) = phi_r(X^(n/r)) with r the radical of n, and phi_r is the
    product of (X^e - 1)^mu(r/e) over e | r.  Results are cached per process.
    """
    if n < 1:
        raise ValueError(f"cyclotomic_poly needs n >= 1, got {n}")
    with _cache_lock:
        hit = _cache.get(n)
    if hit is not None:
        return hit
    primes = sorted(factorint(n))
    rad = 1
    for q in primes:
        rad *= q
    base = _squarefree_cyclotomic(primes)
    step = n // rad
    coeffs = [0] * ((len(base) - 1) * step + 1)
    for i, c in enumerate(base):
        coeffs[i * step] = c
    quo = normalize(coeffs)
    with _cache_lock:
        _cache[n] = quo
    return quo


def phi_at_one(n: int) -> int:
    """phi_n(1): the prime q when n is a power of q, otherwise 1."""
    if n < 2:
        raise ValueError(f"phi_at_one is defined for n >= 2, got {n}")
    base = prime_power_base(n)
    return base if base is not None else 1


def is_monic(f: Sequence[int]) -> bool:
    return bool(f) and f[-1] == 1


def content(f: Sequence[int]) -> int:
    return reduce(gcd, f, 0)
