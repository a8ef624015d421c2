"""Square matrices over Z[zeta_p] with exact entries."""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from .cycring import (
    CycInt,
    NotAUnitError,
    exact_divider,
    h_valuation_at_least,
    invert_unit,
    is_unit,
)

__all__ = [
    "CycMatrix",
    "NotInvertibleError",
    "identity",
    "mat_add",
    "mat_sub",
    "mat_mul",
    "mat_pow",
    "det",
    "det_cofactor",
    "char_poly",
    "companion_matrix",
    "adjugate",
    "inverse",
    "congruent_mod_h_power",
    "direct_sum",
    "kron",
    "kron_with_identity",
    "conjugation_embedding",
]


class NotInvertibleError(ArithmeticError):
    """The determinant is not a unit, so the matrix is not in GL_d(Z[zeta_p])."""


class CycMatrix:
    """A d x d matrix over Z[zeta_p]; immutable."""

    __slots__ = ("p", "d", "rows")

    def __init__(self, p: int, rows: Sequence[Sequence[CycInt | int]]):
        rows = [list(r) for r in rows]
        d = len(rows)
        if d < 1:
            raise ValueError("matrix dimension must be at least 1")
        out = []
        for r in rows:
            if len(r) != d:
                raise ValueError(f"matrix is not square: row of length {len(r)} in dimension {d}")
            row = []
            for x in r:
                if isinstance(x, int):
                    x = CycInt.const(p, x)
                elif x.p != p:
                    raise ValueError(f"entry has conductor {x.p}, matrix has {p}")
                row.append(x)
            out.append(tuple(row))
        self.p = out[0][0].p
        self.d = d
        self.rows = tuple(out)

    @classmethod
    def _raw(cls, p: int, rows) -> CycMatrix:
        obj = cls.__new__(cls)
        obj.p = p
        obj.d = len(rows)
        obj.rows = tuple(tuple(r) for r in rows)
        return obj

    @classmethod
    def from_integers(cls, p: int, rows: Sequence[Sequence[int]]) -> CycMatrix:
        return cls(p, [[CycInt.const(p, x) for x in r] for r in rows])

    @classmethod
    def diag(cls, p: int, entries: Sequence[CycInt | int]) -> CycMatrix:
        d = len(entries)
        zero = CycInt.zero(p)
        return cls(p, [[entries[i] if i == j else zero for j in range(d)] for i in range(d)])

    @classmethod
    def scalar(cls, p: int, d: int, x: CycInt | int) -> CycMatrix:
        return cls.diag(p, [x] * d)

    def __getitem__(self, ij: tuple[int, int]) -> CycInt:
        i, j = ij
        return self.rows[i][j]

    def entries(self) -> Iterable[CycInt]:
        for r in self.rows:
            yield from r

    def is_identity(self) -> bool:
        return all(
            (x.is_one() if i == j else x.is_zero())
            for i, r in enumerate(self.rows)
            for j, x in enumerate(r)
        )

    def is_scalar(self) -> bool:
        x0 = self.rows[0][0]
        return all(
            (x == x0 if i == j else x.is_zero())
            for i, r in enumerate(self.rows)
            for j, x in enumerate(r)
        )

    def bit_length(self) -> int:
        return max(x.bit_length() for x in self.entries())

    def transpose(self) -> CycMatrix:
        return CycMatrix._raw(self.p, list(zip(*self.rows)))

    def scale(self, c: CycInt | int) -> CycMatrix:
        return CycMatrix._raw(self.p, [[c * x for x in r] for r in self.rows])

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.p == other.p and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.p, self.rows))

    def __add__(self, other: CycMatrix) -> CycMatrix:
        return mat_add(self, other)

    def __sub__(self, other: CycMatrix) -> CycMatrix:
        return mat_sub(self, other)

    def __matmul__(self, other: CycMatrix) -> CycMatrix:
        return mat_mul(self, other)

    def __pow__(self, e: int) -> CycMatrix:
        return mat_pow(self, e)

    def __repr__(self) -> str:
        return f"CycMatrix(p={self.p}, rows={[[list(x.coeffs) for x in r] for r in self.rows]})"

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)


def _check_pair(A: CycMatrix, B: CycMatrix) -> None:
    if A.p != B.p:
        raise ValueError(f"conductor mismatch: {A.p} vs {B.p}")
    if A.d != B.d:
        raise ValueError(f"dimension mismatch: {A.d} vs {B.d}")


def identity(d: int, p: int) -> CycMatrix:
    if d < 1:
        raise ValueError("dimension must be at least 1")
    return CycMatrix.scalar(p, d, 1)


def mat_add(A: CycMatrix, B: CycMatrix) -> CycMatrix:
    _check_pair(A, B)
    return CycMatrix._raw(A.p, [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(A.rows, B.rows)])


def mat_sub(A: CycMatrix, B: CycMatrix) -> CycMatrix:
    _check_pair(A, B)
    return CycMatrix._raw(A.p, [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(A.rows, B.rows)])


def _dot(p: int, xs: Sequence[CycInt], ys: Sequence[CycInt]) -> CycInt:
    # accumulate in the cyclic ring Z[x]/(x^p - 1), reduce once at the end
    acc = [0] * p
    for x, y in zip(xs, ys):
        bx = [(i, a) for i, a in enumerate(x.coeffs) if a]
        if not bx:
            continue
        by = [(j, b) for j, b in enumerate(y.coeffs) if b]
        for i, a in bx:
            for j, b in by:
                k = i + j
                if k >= p:
                    k -= p
                acc[k] += a * b
    return CycInt.from_cyclic(p, acc)


def mat_mul(A: CycMatrix, B: CycMatrix) -> CycMatrix:
    _check_pair(A, B)
    cols = list(zip(*B.rows))
    p = A.p
    return CycMatrix._raw(p, [[_dot(p, r, c) for c in cols] for r in A.rows])


def mat_pow(A: CycMatrix, e: int, stats: dict | None = None) -> CycMatrix:
    """A ** e by binary powering.

    When ``stats`` is given, ``stats["peak_bits"]`` is raised to the largest
    coefficient bit-length seen in any intermediate product.
    """
    if e < 0:
        raise ValueError("negative exponent; use inverse() first")
    result = identity(A.d, A.p)
    base = A
    peak = A.bit_length()
    while e:
        if e & 1:
            result = mat_mul(result, base)
            peak = max(peak, result.bit_length())
        e >>= 1
        if e:
            base = mat_mul(base, base)
            peak = max(peak, base.bit_length())
    if stats is not None:
        stats["peak_bits"] = max(stats.get("peak_bits", 0), peak)
    return result


def det(A: CycMatrix) -> CycInt:
    """Determinant by fraction-free (Bareiss) elimination."""
    p, n = A.p, A.d
    M = [list(r) for r in A.rows]
    sign = 1
    prev = None
    for k in range(n - 1):
        if M[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not M[i][k].is_zero()), None)
            if swap is None:
                return CycInt.zero(p)
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        divide = exact_divider(prev) if prev is not None else None
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                val = M[i][j] * pivot - M[i][k] * M[k][j]
                M[i][j] = divide(val) if divide is not None else val
            M[i][k] = CycInt.zero(p)
        prev = pivot
    out = M[n - 1][n - 1]
    return -out if sign < 0 else out


def det_cofactor(A: CycMatrix) -> CycInt:
    """Determinant by Laplace expansion along the first row (small d only)."""
    p = A.p

    def rec(rows: list[tuple[CycInt, ...]]) -> CycInt:
        if len(rows) == 1:
            return rows[0][0]
        total = CycInt.zero(p)
        for j, x in enumerate(rows[0]):
            if x.is_zero():
                continue
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            term = x * rec(minor)
            total = total - term if j % 2 else total + term
        return total

    return rec(list(A.rows))


def _faddeev_leverrier(A: CycMatrix) -> tuple[list[CycInt], CycMatrix]:
    # returns (coefficients c_0..c_d of det(X I - A), N_d) with A N_d + c_0 I = 0
    p, n = A.p, A.d
    coeffs = [CycInt.zero(p)] * (n + 1)
    coeffs[n] = CycInt.one(p)
    N = CycMatrix.scalar(p, n, 0)
    for k in range(1, n + 1):
        AN = mat_mul(A, N)
        c = coeffs[n - k + 1]
        N = CycMatrix._raw(
            p, [[x + c if i == j else x for j, x in enumerate(r)] for i, r in enumerate(AN.rows)]
        )
        tr = CycInt.zero(p)
        for i in range(n):
            tr = tr + _dot(p, A.rows[i], [N.rows[t][i] for t in range(n)])
        if any(x % k for x in tr.coeffs):
            raise ArithmeticError("non-exact Faddeev-LeVerrier step")
        coeffs[n - k] = CycInt._raw(p, tuple(-(x // k) for x in tr.coeffs))
    return coeffs, N


def char_poly(A: CycMatrix) -> tuple[CycInt, ...]:
    """Coefficients (low degree first) of det(X I - A), monic of degree d."""
    return tuple(_faddeev_leverrier(A)[0])


def adjugate(A: CycMatrix) -> CycMatrix:
    coeffs, N = _faddeev_leverrier(A)
    return N if A.d % 2 == 1 else N.scale(-1)


def companion_matrix(q: Sequence[int | CycInt], p: int) -> CycMatrix:
    """Companion matrix of a monic polynomial (coefficients low degree first).

    Ones on the subdiagonal, last column -q_0, ..., -q_{d-1}; its
    characteristic polynomial is q.
    """
    q = [CycInt.const(p, c) if isinstance(c, int) else c for c in q]
    if len(q) < 2:
        raise ValueError("companion matrix needs degree >= 1")
    if not q[-1].is_one():
        raise ValueError("companion matrix needs a monic polynomial")
    d = len(q) - 1
    zero, one = CycInt.zero(p), CycInt.one(p)
    rows = []
    for i in range(d):
        row = [one if j == i - 1 else zero for j in range(d - 1)]
        row.append(-q[i])
        rows.append(row)
    return CycMatrix(p, rows)


def inverse(A: CycMatrix) -> CycMatrix:
    """A^-1 over Z[zeta_p]; raises NotInvertibleError if det A is not a unit."""
    coeffs, N = _faddeev_leverrier(A)
    dA = coeffs[0] if A.d % 2 == 0 else -coeffs[0]
    if not is_unit(dA):
        raise NotInvertibleError(f"determinant {dA} is not a unit of Z[zeta_{A.p}]")
    try:
        dinv = invert_unit(dA)
    except NotAUnitError as exc:  # pragma: no cover - guarded above
        raise NotInvertibleError(str(exc)) from None
    adj = N if A.d % 2 == 1 else N.scale(-1)
    inv = adj.scale(dinv)
    if not mat_mul(A, inv).is_identity():
        raise ArithmeticError("inverse failed verification")
    return inv


def congruent_mod_h_power(A: CycMatrix, B: CycMatrix, k: int) -> bool:
    """Whether every entry of A - B lies in (zeta_p - 1)^k."""
    _check_pair(A, B)
    return all(h_valuation_at_least(x, k) for x in mat_sub(A, B).entries())


def direct_sum(blocks: Sequence[CycMatrix]) -> CycMatrix:
    if not blocks:
        raise ValueError("direct_sum needs at least one block")
    p = blocks[0].p
    for b in blocks:
        if b.p != p:
            raise ValueError(f"conductor mismatch: {b.p} vs {p}")
    n = sum(b.d for b in blocks)
    zero = CycInt.zero(p)
    rows = [[zero] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.d):
            for j in range(b.d):
                rows[off + i][off + j] = b.rows[i][j]
        off += b.d
    return CycMatrix._raw(p, rows)


def kron(A: CycMatrix, B: CycMatrix) -> CycMatrix:
    """Kronecker product; index (i*m + k, j*m + l) holds A[i,j] * B[k,l]."""
    if A.p != B.p:
        raise ValueError(f"conductor mismatch: {A.p} vs {B.p}")
    m = B.d
    n = A.d * m
    rows = [[None] * n for _ in range(n)]
    for i, j, k, l in product(range(A.d), range(A.d), range(m), range(m)):
        rows[i * m + k][j * m + l] = A.rows[i][j] * B.rows[k][l]
    return CycMatrix._raw(A.p, rows)


def kron_with_identity(A: CycMatrix, k: int) -> CycMatrix:
    if k < 1:
        raise ValueError("identity factor must have dimension >= 1")
    return kron(A, identity(k, A.p))


def conjugation_embedding(A: CycMatrix) -> CycMatrix:
    """Matrix of M -> A M A^-1 on d x d matrices, basis E_11, E_12, ..., E_dd.

    Equals A kron (A^-1)^T.  Its kernel is the scalar matrices, so its
    order is the order of A in PGL_d.
    """
    return kron(A, inverse(A).transpose())
