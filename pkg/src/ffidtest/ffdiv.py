"""Places, divisors and height-tracked rational functions of F_q(T).

Polynomials over F_q are coefficient tuples, constant term first (see
``fqpoly``).  Places are the monic irreducibles plus the infinite place.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from . import fqpoly
from .errors import GuardExceeded
from .groupstat import PRODUCT_GUARD


@dataclass(frozen=True)
class Place:
    """A place of F_q(T); ``poly is None`` marks the place at infinity."""

    q: int
    poly: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.poly is not None:
            if not self.poly or self.poly[-1] != 1:
                raise ValueError(f"finite place {self.poly} must be monic")
            if not fqpoly.is_irreducible(self.poly, self.q):
                raise ValueError(f"finite place {self.poly} must be irreducible over F_{self.q}")

    @classmethod
    def infinity(cls, q: int) -> "Place":
        return cls(q, None)

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else len(self.poly) - 1

    @property
    def sort_key(self) -> tuple[int, int]:
        if self.poly is None:
            return (0, 0)
        return (self.degree, fqpoly.encode(self.poly, self.q))

    def __str__(self) -> str:
        return "inf" if self.poly is None else "(" + _poly_str(self.poly) + ")"


def _poly_str(p: tuple[int, ...]) -> str:
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        mono = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
        coef = str(c) if c != 1 or i == 0 else ""
        terms.append(coef + mono)
    return "+".join(terms) or "0"


def _finite_place(q: int, poly: tuple[int, ...]) -> Place:
    # skip re-verification for factors produced by trial division
    place = object.__new__(Place)
    object.__setattr__(place, "q", q)
    object.__setattr__(place, "poly", poly)
    return place


def places_up_to(q: int, degree: int) -> list[Place]:
    """All places of degree <= ``degree``, infinity first then by (degree, encoding)."""
    out = [Place.infinity(q)] if degree >= 1 else []
    for k in range(1, degree + 1):
        out.extend(_finite_place(q, p) for p in fqpoly.monic_irreducibles(q, k))
    return out


class FFDivisor(Mapping):
    """A divisor sum n_P P, stored without zero multiplicities."""

    __slots__ = ("_m",)

    def __init__(self, mults: Mapping[Place, int] | Iterable[tuple[Place, int]] = ()):
        items = mults.items() if isinstance(mults, Mapping) else mults
        m: dict[Place, int] = {}
        for place, k in items:
            m[place] = m.get(place, 0) + k
        self._m = {p: m[p] for p in sorted(m, key=lambda p: p.sort_key) if m[p]}

    def __getitem__(self, place: Place) -> int:
        return self._m.get(place, 0)

    def __iter__(self) -> Iterator[Place]:
        return iter(self._m)

    def __len__(self) -> int:
        return len(self._m)

    def __contains__(self, place) -> bool:
        return place in self._m

    def __eq__(self, other) -> bool:
        return isinstance(other, FFDivisor) and self._m == other._m

    def __hash__(self) -> int:
        return hash(frozenset(self._m.items()))

    def __repr__(self) -> str:
        if not self._m:
            return "0"
        return " + ".join(f"{k}*{p}" for p, k in self._m.items())

    def __add__(self, other: "FFDivisor") -> "FFDivisor":
        return FFDivisor(itertools.chain(self._m.items(), other._m.items()))

    def __neg__(self) -> "FFDivisor":
        return FFDivisor({p: -k for p, k in self._m.items()})

    def __sub__(self, other: "FFDivisor") -> "FFDivisor":
        return self + (-other)

    def __le__(self, other: "FFDivisor") -> bool:
        return all(self[p] <= other[p] for p in set(self) | set(other))

    @property
    def degree(self) -> int:
        return sum(k * p.degree for p, k in self._m.items())

    @property
    def height(self) -> int:
        return max((abs(k) for k in self._m.values()), default=0)

    def is_effective(self) -> bool:
        return all(k > 0 for k in self._m.values())


def parts_and_min(D: FFDivisor, E: FFDivisor) -> tuple[FFDivisor, FFDivisor, FFDivisor]:
    """``(D_0, D_inf, min{D, E})`` with D = D_0 - D_inf and min taken placewise."""
    D0 = FFDivisor({p: k for p, k in D.items() if k > 0})
    Dinf = FFDivisor({p: -k for p, k in D.items() if k < 0})
    low = FFDivisor({p: min(D[p], E[p]) for p in set(D) | set(E)})
    return D0, Dinf, low


def tau(D: FFDivisor) -> int:
    """Number of divisors E with 0 <= E <= D, i.e. prod (n_P + 1)."""
    if not D.is_effective():
        raise ValueError("tau is defined only for effective divisors")
    return math.prod(k + 1 for k in D.values())


@dataclass(frozen=True)
class RatFnQ:
    """Reduced num/den over F_q with den monic."""

    q: int
    num: tuple[int, ...]
    den: tuple[int, ...] = (1,)

    @property
    def height(self) -> int:
        """max(deg num, deg den): the T-degree of den*X - num."""
        return max(fqpoly.degree(self.num), fqpoly.degree(self.den), 0)

    def is_zero(self) -> bool:
        return not self.num

    def __str__(self) -> str:
        n = _poly_str(self.num)
        return n if self.den == (1,) else f"({n})/({_poly_str(self.den)})"


def make_ratfn(q: int, num, den=(1,)) -> RatFnQ:
    num, den = fqpoly.trim(num, q), fqpoly.trim(den, q)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return RatFnQ(q, (), (1,))
    g = fqpoly.gcd(num, den, q)
    num = fqpoly.divmod_poly(num, g, q)[0]
    den = fqpoly.divmod_poly(den, g, q)[0]
    k = pow(den[-1], -1, q)
    return RatFnQ(q, fqpoly.scale(num, k, q), fqpoly.scale(den, k, q))


def ratfn_mul(a: RatFnQ, b: RatFnQ) -> RatFnQ:
    q = a.q
    return make_ratfn(q, fqpoly.mul(a.num, b.num, q), fqpoly.mul(a.den, b.den, q))


def factor_poly(p: tuple[int, ...], q: int) -> dict[tuple[int, ...], int]:
    """Monic irreducible factorization by trial division; the unit is dropped."""
    p = fqpoly.monic(p, q)
    out: dict[tuple[int, ...], int] = {}
    k = 1
    while fqpoly.degree(p) >= 2 * k:
        for ir in fqpoly.monic_irreducibles(q, k):
            while True:
                quo, rem = fqpoly.divmod_poly(p, ir, q)
                if rem:
                    break
                out[ir] = out.get(ir, 0) + 1
                p = quo
        k += 1
    if fqpoly.degree(p) >= 1:
        out[p] = out.get(p, 0) + 1
    return out


def principal_divisor(f: RatFnQ) -> FFDivisor:
    """(f) = sum ord_P(f) P, with ord_inf(f) = deg den - deg num."""
    if f.is_zero():
        raise ValueError("the zero function has no divisor")
    q = f.q
    mults: dict[Place, int] = {}
    for ir, k in factor_poly(f.num, q).items():
        mults[_finite_place(q, ir)] = k
    for ir, k in factor_poly(f.den, q).items():
        mults[_finite_place(q, ir)] = mults.get(_finite_place(q, ir), 0) - k
    mults[Place.infinity(q)] = fqpoly.degree(f.den) - fqpoly.degree(f.num)
    return FFDivisor(mults)


@dataclass(frozen=True)
class PoleBound:
    h: int
    deg_pole_part: int
    bound_ok: bool


def height_and_pole_bound(f: RatFnQ) -> PoleBound:
    """Check deg (f)_inf <= 2h (extension degree 1)."""
    D0, Dinf, _ = parts_and_min(principal_divisor(f), FFDivisor())
    h = f.height
    return PoleBound(h, Dinf.degree, Dinf.degree <= 2 * h)


def count_effective_divisors(q: int, r: int) -> tuple[list[int], list[int]]:
    """Effective divisors of each degree 0..r and cumulative counts.

    Dynamic program over places grouped by degree; the number of finite
    places of degree k is the necklace count, plus one infinite place of
    degree 1.
    """
    if not fqpoly.prime_factors(q) == [q]:
        raise ValueError(f"q = {q} must be prime")
    if not 0 <= r <= 12:
        raise ValueError("r must lie in [0, 12]")
    counts = [1] + [0] * r
    for k in range(1, r + 1):
        n_places = fqpoly.count_monic_irreducibles(q, k) + (1 if k == 1 else 0)
        for _ in range(n_places):
            # multiply by 1/(1 - t^k)
            for deg in range(k, r + 1):
                counts[deg] += counts[deg - k]
    return counts, list(itertools.accumulate(counts))


def enumerate_effective_divisors(q: int, r: int) -> list[FFDivisor]:
    """Every effective divisor of degree <= r, by explicit multiset enumeration."""
    places = places_up_to(q, r)
    out = []

    def rec(i: int, budget: int, acc: list[tuple[Place, int]]):
        if i == len(places):
            out.append(FFDivisor(acc))
            return
        p = places[i]
        for k in range(budget // p.degree + 1):
            if k:
                acc.append((p, k))
            rec(i + 1, budget - k * p.degree, acc)
            if k:
                acc.pop()

    rec(0, r, [])
    return out


@dataclass(frozen=True)
class RatProductReport:
    products: frozenset
    max_height: int
    ratio: float


def product_set_ratfns(A: Iterable[RatFnQ], nu: int, guard: int = PRODUCT_GUARD) -> RatProductReport:
    """nu-fold product set of rational functions in reduced form."""
    if nu < 1:
        raise ValueError("nu must be >= 1")
    A = set(A)
    if not A:
        return RatProductReport(frozenset(), 0, 0.0)
    current = set(A)
    work = 0
    for _ in range(nu - 1):
        work += len(current) * len(A)
        if work > guard:
            raise GuardExceeded(f"product set work {work} exceeds guard {guard}")
        current = {ratfn_mul(x, a) for x in current for a in A}
    max_h = max(x.height for x in current)
    return RatProductReport(frozenset(current), max_h, len(current) / len(A) ** nu)
