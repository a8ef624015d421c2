"""Integer polynomial algorithms used by the norm computations.

Polynomials are tuples of ints, lowest degree first (see ``cyclopoly``).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .cyclopoly import CycPoly, content, normalize


def _lc(f: Sequence[int]) -> int:
    return f[-1]


def _deg(f: Sequence[int]) -> int:
    return len(f) - 1


def pseudo_remainder(f: Sequence[int], g: Sequence[int]) -> CycPoly:
    """R with lc(g)^(deg f - deg g + 1) * f = g*Q + R, deg R < deg g."""
    df, dg = _deg(f), _deg(g)
    if dg < 0:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    if df < dg:
        return normalize(f)
    lc = _lc(g)
    rem = list(f)
    for i in range(df, dg - 1, -1):
        c = rem[i]
        rem = [lc * r for r in rem]
        if c:
            for j in range(dg + 1):
                rem[i - dg + j] -= c * g[j]
        rem.pop()
    return normalize(rem)


def resultant(f: Sequence[int], g: Sequence[int]) -> int:
    """Resultant of two integer polynomials by the subresultant PRS.

    Integer-only: every division in the sequence is exact.
    """
    A, B = normalize(f), normalize(g)
    if not A or not B:
        return 0
    a, b = content(A), content(B)
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    A = tuple(c // a for c in A)
    B = tuple(c // b for c in B)
    t = a ** _deg(B) * b ** _deg(A)
    s = 1
    if _deg(A) < _deg(B):
        A, B = B, A
        if _deg(A) % 2 and _deg(B) % 2:
            s = -s
    g_, h = 1, 1
    while _deg(B) > 0:
        delta = _deg(A) - _deg(B)
        if _deg(A) % 2 and _deg(B) % 2:
            s = -s
        R = pseudo_remainder(A, B)
        A = B
        div = g_ * h**delta
        if any(c % div for c in R):
            raise ArithmeticError("non-exact division in subresultant PRS")
        B = tuple(c // div for c in R)
        if not B:
            return 0
        g_ = _lc(A)
        if delta > 0:
            num = g_**delta
            den = h ** (delta - 1)
            if num % den:
                raise ArithmeticError("non-exact division in subresultant PRS")
            h = num // den
    # B is a nonzero constant here
    dA = _deg(A)
    if dA == 0:
        return s * t
    num = _lc(B) ** dA
    den = h ** (dA - 1)
    if num % den:
        raise ArithmeticError("non-exact division in subresultant PRS")
    return s * t * (num // den)


def sylvester_resultant(f: Sequence[int], g: Sequence[int]) -> int:
    """Resultant as the Sylvester determinant; slow, used as a check."""
    f, g = normalize(f), normalize(g)
    if not f or not g:
        return 0
    m, n = _deg(f), _deg(g)
    if m == 0 and n == 0:
        return 1
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    rows = []
    fr = list(reversed(f))
    gr = list(reversed(g))
    for i in range(n):
        rows.append([0] * i + fr + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gr + [0] * (size - n - 1 - i))
    return det_fraction(rows)


def det_fraction(rows: list[list[int]]) -> int:
    """Determinant of an integer matrix by Gaussian elimination over Q."""
    M = [[Fraction(x) for x in row] for row in rows]
    n = len(M)
    sign = 1
    out = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            sign = -sign
        out *= M[col][col]
        for r in range(col + 1, n):
            factor = M[r][col] / M[col][col]
            if factor:
                for c in range(col, n):
                    M[r][c] -= factor * M[col][c]
    val = sign * out
    assert val.denominator == 1
    return int(val)


def charpoly_integer(M: list[list[int]]) -> CycPoly:
    """Characteristic polynomial det(X I - M) of a square integer matrix.

    Faddeev-LeVerrier recurrence; the division by k at step k is exact.
    """
    n = len(M)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    N = [[0] * n for _ in range(n)]  # M_0 = 0
    for k in range(1, n + 1):
        # N_k = M N_{k-1} + c_{n-k+1} I
        MN = [[sum(M[i][t] * N[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            MN[i][i] += coeffs[n - k + 1]
        N = MN
        tr = sum(sum(M[i][t] * N[t][i] for t in range(n)) for i in range(n))
        if tr % k:
            raise ArithmeticError("non-exact Faddeev-LeVerrier step")
        coeffs[n - k] = -tr // k
    return tuple(coeffs)


def _frac_normalize(f: list[Fraction]) -> list[Fraction]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _frac_rem(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    r = list(f)
    dg = len(g) - 1
    while len(r) - 1 >= dg and r:
        c = r[-1] / g[-1]
        shift = len(r) - 1 - dg
        for j in range(dg + 1):
            r[shift + j] -= c * g[j]
        _frac_normalize(r)
    return r


def poly_gcd_rational(f: Sequence[int], g: Sequence[int]) -> CycPoly:
    """Greatest common divisor over Q, returned primitive with lc > 0."""
    a = _frac_normalize([Fraction(c) for c in f])
    b = _frac_normalize([Fraction(c) for c in g])
    while b:
        a, b = b, _frac_rem(a, b)
    if not a:
        return ()
    lcm_den = 1
    for c in a:
        lcm_den = lcm_den * c.denominator // gcd(lcm_den, c.denominator)
    ints = [int(c * lcm_den) for c in a]
    cont = content(ints)
    if ints[-1] < 0:
        cont = -abs(cont)
    else:
        cont = abs(cont)
    return tuple(c // cont for c in ints)


def poly_exact_quotient(f: Sequence[int], g: Sequence[int]) -> CycPoly:
    """f / g over Q, required to be an integer polynomial with no remainder."""
    r = [Fraction(c) for c in f]
    dg = len(g) - 1
    quo = [Fraction(0)] * max(len(r) - dg, 0)
    while r and len(r) - 1 >= dg:
        c = r[-1] / g[-1]
        shift = len(r) - 1 - dg
        quo[shift] = c
        for j in range(dg + 1):
            r[shift + j] -= c * g[j]
        _frac_normalize(r)
    if r:
        raise ArithmeticError("polynomial division is not exact")
    if any(c.denominator != 1 for c in quo):
        raise ArithmeticError("quotient is not integral")
    return normalize(int(c) for c in quo)


def derivative(f: Sequence[int]) -> CycPoly:
    return normalize(i * f[i] for i in range(1, len(f)))


def squarefree_part(f: Sequence[int]) -> CycPoly:
    """f / gcd(f, f'), made monic when f is monic."""
    f = normalize(f)
    if len(f) <= 1:
        return f
    g = poly_gcd_rational(f, derivative(f))
    q = poly_exact_quotient(f, g)
    if q[-1] < 0:
        q = tuple(-c for c in q)
    return q
