"""Multiplicative-group statistics: orders, value sets, E_r(S), product sets."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import GuardExceeded
from .gf import Field
from .ntheory import divisors, factorize
from .polyrat import Poly, RatFn, eval_poly, normalize_rat
from .subspace import enumerate_Vm

PRODUCT_GUARD = 2**26


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a group order, primes increasing."""

    factors: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return math.prod(p**k for p, k in self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def divisors(self) -> list[int]:
        return divisors(list(self.factors))

    def __str__(self) -> str:
        return "*".join(f"{p}^{k}" if k > 1 else str(p) for p, k in self.factors) or "1"


@dataclass(frozen=True)
class ValueSetSummary:
    values: frozenset
    zero_hits: int
    poles: int
    scanned: int

    @property
    def size(self) -> int:
        return len(self.values)

    @property
    def regular(self) -> int:
        """Points of S mapped to a nonzero value."""
        return self.scanned - self.zero_hits - self.poles


@dataclass(frozen=True)
class SubgroupDesc:
    """A subgroup of the cyclic group F*, determined by its order."""

    order: int


def factor_group_order(F: Field) -> Factorization:
    return Factorization(tuple(F.group_factorization()))


def element_order(F: Field, fact: Factorization, x: int) -> int:
    if x == 0:
        raise ValueError("zero has no multiplicative order")
    t = F.group_order
    for p, k in fact.factors:
        for _ in range(k):
            if F.pow(x, t // p) != 1:
                break
            t //= p
    return t


def value_set(F: Field, r: RatFn, S: Iterable[int]) -> ValueSetSummary:
    values = set()
    zeros = poles = scanned = 0
    for x in S:
        scanned += 1
        den = eval_poly(F, r.den, x)
        if den == 0:
            poles += 1
            continue
        num = eval_poly(F, r.num, x)
        if num == 0:
            zeros += 1
            continue
        values.add(F.div(num, den))
    return ValueSetSummary(frozenset(values), zeros, poles, scanned)


def smallest_containing_subgroup(F: Field, fact: Factorization, A: Iterable[int]) -> SubgroupDesc:
    """Order of the subgroup generated by ``A``: the lcm of the element orders."""
    A = set(A)
    if not A:
        raise ValueError("the empty set has no smallest containing subgroup")
    if 0 in A:
        raise ValueError("0 lies in no multiplicative subgroup")
    order = 1
    for a in A:
        order = math.lcm(order, element_order(F, fact, a))
        if order == F.group_order:
            break
    return SubgroupDesc(order)


def e_r_of_subspace(
    F: Field, fact: Factorization, f: Poly, g: Poly, m: int
) -> tuple[SubgroupDesc, ValueSetSummary]:
    """E_r(V_m) for r = f/g, computed on the nonzero part of r(V_m)."""
    if not (f.is_monic() and g.is_monic() and f.degree == g.degree):
        warnings.warn("f and g are expected to be monic of equal degree", stacklevel=2)
    summary = value_set(F, normalize_rat(F, f, g), enumerate_Vm(F, m))
    if not summary.values:
        raise ValueError("r takes no nonzero value on V_m")
    return smallest_containing_subgroup(F, fact, summary.values), summary


def product_set(F: Field, A: Iterable[int], nu: int, guard: int = PRODUCT_GUARD) -> set[int]:
    """The nu-fold product set {a_1 ... a_nu : a_i in A}, built as A^(k) * A."""
    if nu < 1:
        raise ValueError("nu must be >= 1")
    A = set(A)
    if not A:
        return set()
    has_zero = 0 in A
    A.discard(0)
    if not A:
        return {0}
    work = 0
    current = set(A)
    tables = F.tables()
    if tables is not None:
        exp, log = tables
        N = F.group_order
        logs_a = np.fromiter((log[a] for a in A), dtype=np.int64)
        cur = np.unique(logs_a)
        for _ in range(nu - 1):
            work += len(cur) * len(logs_a)
            if work > guard:
                raise GuardExceeded(f"product set work {work} exceeds guard {guard}")
            cur = np.unique((cur[:, None] + logs_a[None, :]) % N)
        current = {exp[int(i)] for i in cur}
    else:
        for _ in range(nu - 1):
            work += len(current) * len(A)
            if work > guard:
                raise GuardExceeded(f"product set work {work} exceeds guard {guard}")
            current = {F.mul(x, a) for x in current for a in A}
    if has_zero:
        current.add(0)
    return current


@dataclass(frozen=True)
class GrowthRecord:
    d: int
    m: int
    nu: int
    sizeA: int
    sizeAnu: int
    rho: float
    zero_hits: int
    poles: int
    E_order: int | None
    preimage_floor: float

    @property
    def floor_ok(self) -> bool:
        return self.sizeA >= self.preimage_floor


def growth_report(
    F: Field, f: Poly, g: Poly, m: int, nu: int, guard: int = PRODUCT_GUARD
) -> GrowthRecord:
    """Size of A = r(V_m) \\ {0} and of its nu-fold product set.

    ``rho = log #A^(nu) / (nu * m * log q)``; ``preimage_floor`` is the
    root-counting lower bound (q^m - zeros - poles) / d on #A.
    """
    r = normalize_rat(F, f, g)
    summary = value_set(F, r, enumerate_Vm(F, m))
    A = summary.values
    if A:
        size_nu = len(product_set(F, A, nu, guard))
        E = smallest_containing_subgroup(F, factor_group_order(F), A).order
    else:
        size_nu, E = 0, None
    rho = math.log(size_nu) / (nu * m * math.log(F.q)) if size_nu else 0.0
    d = max(f.degree, g.degree, 1)
    floor = (F.q**m - summary.zero_hits - summary.poles) / d
    return GrowthRecord(d, m, nu, len(A), size_nu, rho, summary.zero_hits, summary.poles, E, floor)


def brute_force_subgroup_order(F: Field, A: Iterable[int]) -> int:
    """Smallest divisor t of q^n - 1 with a^t = 1 for all a in A, by direct search."""
    A = list(A)
    for t in divisors(factorize(F.group_order)):
        if all(F.pow_raw(a, t) == 1 for a in A):
            return t
    raise AssertionError("a^(q^n-1) = 1 must hold for every nonzero a")
