"""Generated agreement suites: the fast criteria against the exact oracle.

Each suite draws matrices from a generator, classifies them with
``classify_order`` and ``exact_order_oracle``, and checks the expected
relation.  Seeds are derived from (seed, suite, p, d, index) so every run
with the same arguments sees the same matrices.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from math import lcm
from typing import Iterator, Sequence

from .cycmatrix import CycMatrix, conjugation_embedding, direct_sum, kron_with_identity
from .cycring import CycInt
from .generators import (
    conjugate,
    gen_h1_general,
    gen_h1_torsion,
    gen_torsion,
    gen_unipotent_h2,
    random_torsion_orders,
    random_unimodular,
    torsion_block,
)
from .orderengine import (
    GroupMode,
    Kind,
    OrderVerdict,
    Rule,
    classify_order,
    exact_order_oracle,
)

DEFAULT_PRIMES = (3, 5, 7)
DEFAULT_DIMS = (1, 2, 3)


@dataclass
class SuiteRow:
    name: str
    count: int = 0
    agreements: int = 0
    rules: Counter = field(default_factory=Counter)
    failures: list[str] = field(default_factory=list)
    skipped_cells: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.count == self.agreements and not self.failures

    def record(self, ok: bool, rule: Rule, detail: str) -> None:
        self.count += 1
        self.rules[rule.value] += 1
        if ok:
            self.agreements += 1
        else:
            self.failures.append(detail)


def instance_rng(seed: int, suite: str, p: int, d: int, i: int) -> random.Random:
    return random.Random(f"{seed}:{suite}:{p}:{d}:{i}")


def _cells(primes, dims) -> Iterator[tuple[int, int]]:
    for p in primes:
        for d in dims:
            yield p, d


def h2_instances(p: int, d: int, size: int, seed: int = 0) -> Iterator[CycMatrix]:
    """``size`` matrices I + h^2 M with M != 0 (none exist for p = 3, d = 1)."""
    if p == 3 and d == 1:
        return
    made = 0
    i = 0
    while made < size:
        A = gen_unipotent_h2(p, d, instance_rng(seed, "h2", p, d, i))
        i += 1
        if not A.is_identity():
            made += 1
            yield A


def h1_torsion_instances(p: int, d: int, size: int, seed: int = 0) -> Iterator[CycMatrix]:
    for i in range(size):
        yield gen_h1_torsion(p, d, instance_rng(seed, "h1t", p, d, i))


def h1_general_instances(p: int, d: int, size: int, seed: int = 0) -> Iterator[CycMatrix]:
    for i in range(size):
        yield gen_h1_general(p, d, instance_rng(seed, "h1g", p, d, i))


def torsion_instances(p: int, d: int, size: int, seed: int = 0) -> Iterator[tuple[CycMatrix, int, list[int]]]:
    for i in range(size):
        rng = instance_rng(seed, "torsion", p, d, i)
        orders = random_torsion_orders(p, d, rng)
        A, m = gen_torsion(p, d, orders, rng)
        yield A, m, orders


def integer_congruence_instances(p: int, d: int, size: int, seed: int = 0) -> Iterator[CycMatrix]:
    """Integer matrices != I with A = I mod p, in GL_d(Z) (needs d >= 2)."""
    if d < 2:
        return
    for i in range(size):
        rng = instance_rng(seed, "intcong", p, d, i)
        rows = [[int(a == b) for b in range(d)] for a in range(d)]
        a, b = rng.sample(range(d), 2)
        a, b = min(a, b), max(a, b)
        rows[a][b] = p * rng.choice([-2, -1, 1, 2])
        B, Binv = random_unimodular(p, d, rng, steps=rng.randint(1, 3), integral=True)
        yield conjugate(CycMatrix.from_integers(p, rows), B, Binv)


def _describe(p: int, d: int, i: int, v: OrderVerdict, o: OrderVerdict) -> str:
    return f"p={p} d={d} #{i}: pipeline {v.label()} ({v.rule.value}), oracle {o.label()} ({o.rule.value})"


def run_suites(
    primes: Sequence[int] = DEFAULT_PRIMES,
    dims: Sequence[int] = DEFAULT_DIMS,
    size: int = 5,
    seed: int = 0,
    inject_fault: bool = False,
) -> list[SuiteRow]:
    """Run every agreement suite and return one row per suite."""
    fault = [inject_fault]

    def oracle(A: CycMatrix) -> OrderVerdict:
        o = exact_order_oracle(A)
        if fault[0]:
            # deliberately wrong verdict, to show the harness can fail
            fault[0] = False
            if o.kind is Kind.INFINITE:
                return OrderVerdict(Kind.FINITE, Rule.ORACLE_EXPONENT_BOUND, order=A.p, p=A.p, d=A.d)
            return OrderVerdict(Kind.INFINITE, Rule.ORACLE_EXPONENT_BOUND, p=A.p, d=A.d)
        return o

    rows: list[SuiteRow] = []

    row = SuiteRow("h2-criterion")
    for p, d in _cells(primes, dims):
        if p == 3 and d == 1:
            row.skipped_cells.append((p, d))
            continue
        for i, A in enumerate(h2_instances(p, d, size, seed)):
            v, o = classify_order(A), oracle(A)
            ok = v.rule is Rule.CRITERION_H2 and v.kind is Kind.INFINITE and o.kind is Kind.INFINITE
            row.record(ok, v.rule, _describe(p, d, i, v, o))
    rows.append(row)

    row = SuiteRow("h1-torsion")
    for p, d in _cells(primes, dims):
        for i, A in enumerate(h1_torsion_instances(p, d, size, seed)):
            v, o = classify_order(A), oracle(A)
            ok = v.finite_order == p and o.finite_order == p and v.kind is Kind.FINITE
            row.record(ok, v.rule, _describe(p, d, i, v, o))
    rows.append(row)

    row = SuiteRow("h1-dichotomy")
    for p, d in _cells(primes, dims):
        for i, A in enumerate(h1_general_instances(p, d, size, seed)):
            v, o = classify_order(A), oracle(A)
            ok = o.finite_order in (None, p) and o.kind is not Kind.IDENTITY and v.same_class(o)
            row.record(ok, v.rule, _describe(p, d, i, v, o))
    rows.append(row)

    row = SuiteRow("torsion")
    for p, d in _cells(primes, dims):
        for i, (A, m, orders) in enumerate(torsion_instances(p, d, size, seed)):
            v, o = classify_order(A), oracle(A)
            ok = o.finite_order == m and v.same_class(o)
            row.record(ok, v.rule, _describe(p, d, i, v, o) + f" expected order {m} from {orders}")
    rows.append(row)

    row = SuiteRow("integer-congruence")
    for p, d in _cells(primes, dims):
        for i, A in enumerate(integer_congruence_instances(p, d, size, seed)):
            v, o = classify_order(A), oracle(A)
            ok = v.rule is Rule.CRITERION_H2 and o.kind is Kind.INFINITE
            row.record(ok, v.rule, _describe(p, d, i, v, o))
    rows.append(row)

    row = SuiteRow("projective")
    for p, d in _cells(primes, [x for x in dims if x >= 2]):
        for i, A in enumerate(projective_instances(p, d, size, seed)):
            v = classify_order(A, GroupMode.PGL)
            emb = conjugation_embedding(A)
            g, o = classify_order(emb), oracle(emb)
            ok = v.same_class(g) and g.same_class(o)
            row.record(ok, v.rule, _describe(p, d, i, v, o))
        if size:
            z = CycMatrix.scalar(p, d, CycInt.zeta(p, 1))
            v = classify_order(z, GroupMode.PGL)
            row.record(v.kind is Kind.IDENTITY, v.rule, f"p={p} d={d} scalar zeta*I: {v.label()}")
    rows.append(row)

    row = SuiteRow("tensor-sum")
    for p, d in _cells(primes, dims):
        for i, (A, k) in enumerate(kron_instances(p, d, size, seed)):
            v, w = classify_order(A), classify_order(kron_with_identity(A, k))
            o = oracle(kron_with_identity(A, k))
            ok = v.same_class(w) and w.same_class(o)
            row.record(ok, w.rule, _describe(p, d, i, w, o) + f" (kron with I_{k})")
    for p in primes:
        for i, (blocks, expected) in enumerate(direct_sum_instances(p, size, seed)):
            S = direct_sum(blocks)
            v, o = classify_order(S), oracle(S)
            ok = v.finite_order == expected and o.finite_order == expected
            row.record(ok, v.rule, _describe(p, S.d, i, v, o) + f" direct sum, expected {expected}")
    rows.append(row)
    return rows


def projective_instances(p: int, d: int, size: int, seed: int = 0) -> Iterator[CycMatrix]:
    """A mix of torsion, h1 and h2 matrices for PGL-mode checks."""
    for i in range(size):
        rng = instance_rng(seed, "pgl", p, d, i)
        kind = i % 3
        if kind == 0:
            A, _ = gen_torsion(p, d, random_torsion_orders(p, d, rng), rng)
        elif kind == 1:
            A = gen_h1_general(p, d, rng)
        else:
            A = gen_unipotent_h2(p, d, rng)
        yield A


def kron_instances(p: int, d: int, size: int, seed: int = 0) -> Iterator[tuple[CycMatrix, int]]:
    for i in range(size):
        rng = instance_rng(seed, "kron", p, d, i)
        kind = i % 3
        if kind == 0:
            A, _ = gen_torsion(p, d, random_torsion_orders(p, d, rng), rng)
        elif kind == 1:
            A = gen_h1_general(p, d, rng)
        else:
            A = gen_unipotent_h2(p, max(d, 2), rng)
        yield A, rng.randint(1, 2)


def direct_sum_instances(p: int, size: int, seed: int = 0) -> Iterator[tuple[list[CycMatrix], int]]:
    """Two or three finite-order blocks and the lcm of their orders."""
    pool = (2, 3, 4, 5, 6, 8, 10, 12)
    for i in range(size):
        rng = instance_rng(seed, "dsum", p, 0, i)
        orders = [rng.choice(pool) for _ in range(rng.randint(2, 3))]
        blocks = []
        for m in orders:
            blk = torsion_block(p, m)
            B, Binv = random_unimodular(p, blk.d, rng, steps=2)
            blocks.append(conjugate(blk, B, Binv))
        yield blocks, lcm(*orders)


def format_report(rows: Sequence[SuiteRow]) -> str:
    header = f"{'class':<20} {'count':>6} {'agree':>6}  rules"
    lines = [header, "-" * len(header)]
    for r in rows:
        rules = ", ".join(f"{k}={v}" for k, v in sorted(r.rules.items())) or "-"
        lines.append(f"{r.name:<20} {r.count:>6} {r.agreements:>6}  {rules}")
        for cell in r.skipped_cells:
            lines.append(f"{'':<20} skipped cell p={cell[0]} d={cell[1]} (no instances exist)")
        for f in r.failures:
            lines.append(f"{'':<20} DISAGREE {f}")
    status = "all agree" if all(r.ok for r in rows) else "DISAGREEMENTS FOUND"
    lines.append(status)
    return "\n".join(lines)
