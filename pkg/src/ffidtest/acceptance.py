"""Acceptance criteria, runnable from pytest and from ``ffidtest verify``.

Every criterion pins its tolerance and time budget here.  Independent oracles
(brute force, enumeration, naive loops) live beside the checks they validate.
"""

from __future__ import annotations

import io
import itertools
import math
import random
import statistics
import threading
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import fqpoly
from .ffdiv import (
    FFDivisor,
    count_effective_divisors,
    enumerate_effective_divisors,
    height_and_pole_bound,
    make_ratfn,
    places_up_to,
    principal_divisor,
    tau,
)
from .gf import Field, find_irreducible, get_field
from .groupstat import (
    brute_force_subgroup_order,
    e_r_of_subspace,
    factor_group_order,
    growth_report,
    product_set,
    value_set,
)
from .ntheory import divisors
from .oracle import PowerOracle, equivalence_check, indistinguishable_scan
from .polyrat import Poly, from_roots, normalize_rat, random_monic
from .subspace import enumerate_Vm
from .tester import DISTINCT, EQUAL, naive_test, subspace_test

SEED = 20240611


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0
    limit: float | None = None
    metrics: dict = field(default_factory=dict)

    def line(self, timings: bool = False) -> str:
        status = "PASS" if self.passed else "FAIL"
        t = f" [{self.seconds:.1f}s/{self.limit:.0f}s]" if timings and self.limit else ""
        return f"criterion {self.number:2d} {status} {self.name}: {self.detail}{t}"


def _distinct_pair(F: Field, d: int, rng: random.Random) -> tuple[Poly, Poly]:
    f = random_monic(F, d, rng)
    while True:
        g = random_monic(F, d, rng)
        if g != f:
            return f, g


# 1 -----------------------------------------------------------------------

def _check_field_exhaustive(F: Field) -> tuple[list[str], np.ndarray]:
    """Field axioms for every triple, plus Frobenius, on schoolbook arithmetic.

    Distributivity a(b+c) = ab+ac for all c follows from checking every (a, b)
    against each additive generator q^i; associativity (ab)c = a(bc) then
    follows from checking every (a, b) against the basis, since both sides
    are additive in c.  Addition is compared with independent digitwise
    arithmetic over Z_q^n for every pair.  Returns the errors and the
    multiplication table.
    """
    N, q, n = F.order, F.q, F.n
    errors = []
    idx = np.arange(N)
    M = np.array([[F.mul_raw(a, b) for b in range(N)] for a in range(N)], dtype=np.int64)
    A = np.array([[F.add(a, b) for b in range(N)] for a in range(N)], dtype=np.int64)

    digits = np.stack([(idx // q**i) % q for i in range(n)])  # n x N
    place = (q ** np.arange(n)).reshape(n, 1, 1)
    dsum = ((digits[:, :, None] + digits[:, None, :]) % q * place).sum(axis=0)
    if not np.array_equal(A, dsum):
        errors.append("addition differs from digitwise Z_q^n addition")
    if any(A[a, F.neg(a)] != 0 or F.sub(a, a) != 0 for a in range(N)):
        errors.append("additive inverses fail")
    if not np.array_equal(M, M.T):
        errors.append("multiplication not commutative")
    if not np.array_equal(M[1], idx) or np.any(M[0] != 0):
        errors.append("multiplicative identity / zero law fails")
    nz = M[1:, 1:]
    if np.any(nz == 0):
        errors.append("zero divisors present")
    if not all(np.count_nonzero(row == 1) == 1 for row in nz):
        errors.append("nonzero element without a unique inverse")
    for a in range(1, N):
        if F.mul_raw(a, F.inv_raw(a)) != 1:
            errors.append(f"inv_raw({a}) wrong")
            break
    for i in range(n):
        gen = q**i
        lhs = M[:, A[:, gen]]  # a * (b + gen)
        rhs = A[M, M[:, gen][:, None]]  # a*b + a*gen
        if not np.array_equal(lhs, rhs):
            errors.append(f"distributivity fails against generator {gen}")
        lhs = M[M, gen]  # (a*b)*gen
        rhs = M[idx[:, None], M[:, gen][None, :]]  # a*(b*gen)
        if not np.array_equal(lhs, rhs):
            errors.append(f"associativity fails against basis element {gen}")
    for x in range(N):
        if F.pow_raw(x, N) != x:
            errors.append(f"Frobenius fails at {x}")
            break
    return errors, M


def _check_field_random(F: Field, trials: int, rng: random.Random) -> list[str]:
    errors = []
    N = F.order
    for _ in range(trials):
        a, b, c = (rng.randrange(N) for _ in range(3))
        if F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c)):
            errors.append(f"mul associativity ({a},{b},{c})")
        if F.add(F.add(a, b), c) != F.add(a, F.add(b, c)):
            errors.append(f"add associativity ({a},{b},{c})")
        if F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c)):
            errors.append(f"distributivity ({a},{b},{c})")
        if F.mul(a, b) != F.mul(b, a) or F.add(a, b) != F.add(b, a):
            errors.append(f"commutativity ({a},{b})")
        if F.mul(a, 1) != a or F.add(a, 0) != a or F.add(a, F.neg(a)) != 0:
            errors.append(f"identities ({a})")
        if a and F.mul(a, F.inv(a)) != 1:
            errors.append(f"inverse ({a})")
        if F.pow(a, N) != a:
            errors.append(f"Frobenius ({a})")
        if F.mul(a, b) != F.mul_raw(a, b) or F.pow(a, c) != F.pow_raw(a, c):
            errors.append(f"table/schoolbook mismatch ({a},{b},{c})")
        if errors:
            break
    return errors


def criterion_1() -> CriterionResult:
    errors = []
    for q, n in [(2, 8), (2, 10), (3, 5)]:
        found, M = _check_field_exhaustive(Field(q, n, tables=False))
        errors += [f"({q},{n}) {e}" for e in found]
        exp, log = Field(q, n, tables=True).tables()
        exp, log = np.array(exp), np.array(log)
        T = exp[log[1:, None] + log[None, 1:]]
        if not np.array_equal(T, M[1:, 1:]):
            errors.append(f"({q},{n}) log/exp tables disagree with schoolbook products")
    rng = random.Random(SEED + 1)
    errors += [f"(2,16) {e}" for e in _check_field_random(get_field(2, 16), 10_000, rng)]
    errors += [f"(2,16) raw {e}" for e in _check_field_random(Field(2, 16, tables=False), 1_000, rng)]
    ok = not errors
    detail = "axioms + Frobenius exhaustive on (2,8),(2,10),(3,5); 10^4 random triples on (2,16)"
    return CriterionResult(1, "field correctness", ok, detail if ok else "; ".join(errors[:5]))


# 2 -----------------------------------------------------------------------

def _brute_irreducible_encoding(q: int, n: int) -> int:
    """Smallest monic degree-n encoding with no monic factor of degree <= n/2."""
    for cand in fqpoly.monic_polys(q, n):
        if all(fqpoly.mod(cand, p, q) for k in range(1, n // 2 + 1) for p in fqpoly.monic_polys(q, k)):
            return fqpoly.encode(cand, q)
    raise AssertionError


def criterion_2() -> CriterionResult:
    first = find_irreducible(2, 4)
    second = find_irreducible(2, 4)
    enc = fqpoly.encode(first, 2)
    brute = _brute_irreducible_encoding(2, 4)
    ok = enc == 19 and brute == 19 and first == second
    return CriterionResult(2, "canonical modulus", ok,
                           f"find_irreducible(2,4) -> {enc} (trial division: {brute}), deterministic={first == second}")


# 3 -----------------------------------------------------------------------

def criterion_3() -> CriterionResult:
    rng = random.Random(SEED + 3)
    mismatches = []
    total = 0
    for q, n in [(2, 8), (2, 12), (3, 5)]:
        F = get_field(q, n)
        fact = factor_group_order(F)
        for _ in range(100):
            d = rng.choice([1, 2])
            f, g = _distinct_pair(F, d, rng)
            m = rng.randint(1, min(n, 8))
            try:
                sub, summary = e_r_of_subspace(F, fact, f, g, m)
            except ValueError:
                continue  # no nonzero values: nothing to compare
            total += 1
            brute = brute_force_subgroup_order(F, summary.values)
            if brute != sub.order:
                mismatches.append((q, n, m, sub.order, brute))
    ok = not mismatches and total >= 290
    return CriterionResult(3, "E_r(S) exactness", ok,
                           f"{total} instances, {len(mismatches)} mismatches vs divisor brute force")


# 4 -----------------------------------------------------------------------

def _naive_product_set(F: Field, A, nu: int) -> set[int]:
    out = set()
    for combo in itertools.product(sorted(A), repeat=nu):
        x = 1
        for a in combo:
            x = F.mul_raw(x, a)
        out.add(x)
    return out


def criterion_4() -> CriterionResult:
    rng = random.Random(SEED + 4)
    fields = [get_field(2, 16), get_field(3, 7), Field(2, 20)]
    mismatches = 0
    for i in range(50):
        F = fields[i % 3]
        nu = rng.randint(1, 3)
        size = rng.randint(1, 200 if nu < 3 else 40)
        A = {rng.randrange(F.order) for _ in range(size)}
        if rng.random() < 0.2:
            A.add(1)
        if product_set(F, A, nu) != _naive_product_set(F, A, nu):
            mismatches += 1
    return CriterionResult(4, "product-set oracle equivalence", mismatches == 0,
                           f"50 random sets (#A <= 200, nu <= 3; #A <= 40 at nu = 3): {mismatches} mismatches")


# 5 -----------------------------------------------------------------------

def criterion_5() -> CriterionResult:
    rng = random.Random(SEED + 5)
    fields = [get_field(2, 12), get_field(3, 5), get_field(2, 16)]
    violations = []
    for i in range(200):
        F = fields[i % 3]
        d = rng.choice([1, 2, 3])
        f, g = _distinct_pair(F, d, rng)
        m = rng.randint(1, min(F.n, 8))
        summary = value_set(F, normalize_rat(F, f, g), enumerate_Vm(F, m))
        floor = (F.q**m - summary.zero_hits - summary.poles) / d
        if summary.size < floor:
            violations.append((F.q, F.n, d, m, summary.size, floor))
    return CriterionResult(5, "preimage floor", not violations,
                           f"200 instances, {len(violations)} with #A < (q^m - zeros - poles)/d")


# 6 -----------------------------------------------------------------------

RHO_FLOOR = 0.45


def criterion_6() -> CriterionResult:
    rng = random.Random(SEED + 6)
    F = get_field(2, 16)
    rhos = []
    for _ in range(30):
        f, g = _distinct_pair(F, 1, rng)
        rhos.append(growth_report(F, f, g, 4, 2).rho)
    ok = min(rhos) >= RHO_FLOOR
    mean = statistics.fmean(rhos)
    return CriterionResult(6, "growth exponent", ok,
                           f"min rho {min(rhos):.4f} >= {RHO_FLOOR}; mean rho {mean:.4f} (report only)",
                           metrics={"mean_rho": mean, "min_rho": min(rhos)})


# 7 -----------------------------------------------------------------------

def _guaranteed_m(F: Field, e: int, d: int) -> int:
    m = 1
    while F.q**m <= e * d:
        m += 1
    return m


def criterion_7() -> CriterionResult:
    rng = random.Random(SEED + 7)
    F = get_field(2, 12)
    divs = divisors(F.group_factorization())
    failures = []
    for _ in range(500):
        d = rng.choice([1, 2])
        e = rng.choice([t for t in divs if F.group_order // t > d])
        f = random_monic(F, d, rng)
        g = f if rng.random() < 0.3 else random_monic(F, d, rng)
        want = DISTINCT if f != g else EQUAL
        oF, oG = PowerOracle(F, f, e), PowerOracle(F, g, e)
        naive = naive_test(oF, oG, F, e, d)
        m = _guaranteed_m(F, e, d)
        sub = subspace_test(oF, oG, F, m)
        if naive.verdict != want or sub.verdict != want or not sub.guaranteed:
            failures.append((e, d, f, g, naive.verdict, sub.verdict))
    return CriterionResult(7, "tester soundness/completeness", not failures,
                           f"500 instances on (2,12): {len(failures)} wrong verdicts")


# 8 -----------------------------------------------------------------------

class _CountingOracle:
    """Wraps an oracle and counts calls independently of its own counter."""

    def __init__(self, inner: PowerOracle):
        self.inner = inner
        self.e, self.d = inner.e, inner.d
        self.calls = 0

    @property
    def queries(self) -> int:
        return self.inner.queries

    def query(self, x: int) -> int:
        self.calls += 1
        return self.inner.query(x)


def criterion_8() -> CriterionResult:
    rng = random.Random(SEED + 8)
    F = get_field(2, 12)
    divs = divisors(F.group_factorization())
    problems = []
    for i in range(100):
        d = rng.choice([1, 2])
        e = rng.choice([t for t in divs if F.group_order // t > d])
        f = random_monic(F, d, rng)
        g = f if i % 3 == 0 else random_monic(F, d, rng)
        oF, oG = _CountingOracle(PowerOracle(F, f, e)), _CountingOracle(PowerOracle(F, g, e))
        m = _guaranteed_m(F, e, d)
        sub = subspace_test(oF, oG, F, m)
        if sub.queries_f != oF.calls or sub.queries_g != oG.calls or oF.calls != oF.inner.queries:
            problems.append("subspace counter mismatch")
        if sub.queries_f > F.q**m or (sub.verdict == EQUAL and sub.queries_f != F.q**m):
            problems.append(f"subspace budget {sub.queries_f} vs q^m = {F.q**m}")
        before = oF.calls
        naive = naive_test(oF, oG, F, e, d)
        if naive.queries_f != oF.calls - before:
            problems.append("naive counter mismatch")
        if naive.queries_f > e * d + 1 or (naive.verdict == EQUAL and naive.queries_f != e * d + 1):
            problems.append(f"naive budget {naive.queries_f} vs ed+1 = {e * d + 1}")
    # concurrent queries must not lose increments
    oracle = PowerOracle(F, random_monic(F, 2, rng), 5)
    threads = [threading.Thread(target=lambda: [oracle.query(x) for x in range(500)]) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    if oracle.queries != 4000:
        problems.append(f"threaded counter {oracle.queries} != 4000")
    return CriterionResult(8, "query accounting", not problems,
                           f"100 instances + threaded counter: {len(problems)} problems")


# 9 -----------------------------------------------------------------------

def criterion_9() -> CriterionResult:
    rng = random.Random(SEED + 9)
    F = get_field(2, 12)
    divs = divisors(F.group_factorization())
    disagreements = 0
    kinds = {"degree-argument": 0, "full-scan": 0, "indistinguishable": 0}
    for i in range(200):
        d = rng.choice([1, 2, 3])
        e = rng.choice(divs)
        kind = i % 5
        if kind == 0:
            f = g = random_monic(F, d, rng)
        elif kind == 1:
            # e = q^n - 1 turns the oracles into root indicators: pairs with equal
            # root sets (rootless quadratics, or (X-a)^2(X-b) vs (X-a)(X-b)^2) collide
            e = F.group_order
            if d == 3:
                a, b = rng.randrange(F.order), rng.randrange(F.order)
                f, g = from_roots(F, [a, a, b]), from_roots(F, [a, b, b])
            else:
                f, g = random_monic(F, d, rng), random_monic(F, d, rng)
        else:
            f, g = random_monic(F, d, rng), random_monic(F, d, rng)
        fast = equivalence_check(F, f, g, e)
        scan = indistinguishable_scan(F, f, g, e)
        kinds[fast.method] += 1
        kinds["indistinguishable"] += scan.indistinguishable
        if fast.indistinguishable != scan.indistinguishable:
            disagreements += 1
    detail = (f"200 instances ({kinds['degree-argument']} degree-argument, {kinds['full-scan']} scan, "
              f"{kinds['indistinguishable']} indistinguishable): {disagreements} disagreements")
    return CriterionResult(9, "equivalence shortcut validation", disagreements == 0, detail)


# 10 ----------------------------------------------------------------------

def _random_effective_divisor(q: int, max_deg: int, rng: random.Random) -> FFDivisor:
    places = places_up_to(q, max_deg)
    budget = rng.randint(0, max_deg)
    mults: dict = {}
    while budget:
        fitting = [p for p in places if p.degree <= budget]
        p = rng.choice(fitting)
        mults[p] = mults.get(p, 0) + 1
        budget -= p.degree
    return FFDivisor(mults)


def _random_ratfn(q: int, max_deg: int, rng: random.Random):
    while True:
        num = [rng.randrange(q) for _ in range(rng.randint(1, max_deg + 1))]
        den = [rng.randrange(q) for _ in range(rng.randint(1, max_deg + 1))]
        if any(num) and any(den):
            return make_ratfn(q, num, den)


def criterion_10() -> CriterionResult:
    rng = random.Random(SEED + 10)
    problems = []
    universe = enumerate_effective_divisors(2, 8)
    for _ in range(100):
        D = _random_effective_divisor(2, 8, rng)
        brute = sum(1 for E in universe if E <= D)
        if tau(D) != brute:
            problems.append(f"tau({D}) = {tau(D)} but {brute} sub-divisors")
    for i in range(200):
        q = (2, 3)[i % 2]
        f = _random_ratfn(q, 8, rng)
        if principal_divisor(f).degree != 0:
            problems.append(f"deg ({f}) != 0")
        pb = height_and_pole_bound(f)
        if not pb.bound_ok or pb.deg_pole_part != pb.h:
            problems.append(f"pole bound for {f}: {pb}")
    _, cumulative = count_effective_divisors(2, 2)
    if cumulative != [1, 4, 11]:
        problems.append(f"cumulative counts {cumulative} != [1, 4, 11]")
    if cumulative[1] != 2**2:
        problems.append("bound not attained at r = 1")
    for q in (2, 3):
        _, cum = count_effective_divisors(q, 6)
        if any(c > q ** (2 * r) for r, c in enumerate(cum)):
            problems.append(f"q^(2r) bound violated for q = {q}")
        for r in range(5):
            if len(enumerate_effective_divisors(q, r)) != cum[r]:
                problems.append(f"DP disagrees with enumeration at q={q}, r={r}")
    return CriterionResult(10, "divisor lab", not problems,
                           "tau, deg (f) = 0, counts {1,4,11}, deg (f)_inf = h <= 2h" if not problems
                           else "; ".join(problems[:5]))


# 11 ----------------------------------------------------------------------

CLI_CASES = [
    ["field", "--n", "12"],
    ["etest", "--n", "12", "--e", "13", "--d", "2", "--seed", "7"],
    ["etest", "--n", "8", "--e", "17", "--f", "0,1", "--g", "0,1", "--format", "json"],
    ["ers", "--n", "10", "--d", "2", "--seed", "11", "--m", "6"],
    ["pset", "--n", "16", "--seed", "3", "--m", "4", "--nu", "3"],
    ["divlab", "--q", "3", "--r", "5"],
    ["witness", "--n", "12", "--e", "4095", "--d", "2", "--seed", "5"],
]


def criterion_11() -> CriterionResult:
    from .cli import main

    problems = []
    for argv in CLI_CASES:
        outs = []
        for _ in range(2):
            buf = io.StringIO()
            code = main(argv, stdout=buf)
            if code != 0:
                problems.append(f"{argv[0]} exited {code}")
            outs.append(buf.getvalue().encode())
        if outs[0] != outs[1]:
            problems.append(f"{' '.join(argv)} not byte-identical")
    return CriterionResult(11, "CLI determinism", not problems,
                           f"{len(CLI_CASES)} commands run twice: " + ("byte-identical" if not problems else "; ".join(problems)))


CRITERIA: list[tuple[Callable[[], CriterionResult], float]] = [
    (criterion_1, 10.0),
    (criterion_2, 10.0),
    (criterion_3, 30.0),
    (criterion_4, 30.0),
    (criterion_5, 30.0),
    (criterion_6, 30.0),
    (criterion_7, 60.0),
    (criterion_8, 30.0),
    (criterion_9, 30.0),
    (criterion_10, 30.0),
    (criterion_11, 30.0),
]


def run_criterion(fn: Callable[[], CriterionResult], limit: float) -> CriterionResult:
    start = time.perf_counter()
    res = fn()
    res.seconds = time.perf_counter() - start
    res.limit = limit
    if res.seconds > limit:
        res.passed = False
        res.detail += f" (took {res.seconds:.1f}s, limit {limit:.0f}s)"
    return res


def run_all() -> list[CriterionResult]:
    return [run_criterion(fn, limit) for fn, limit in CRITERIA]
