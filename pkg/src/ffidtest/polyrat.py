"""Polynomials and reduced rational functions over F_{q^n}."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .gf import Field

# distinguished result of eval_rat at a zero of the denominator
POLE = None


@dataclass(frozen=True)
class Poly:
    """Coefficients (element encodings), constant term first, no trailing zeros."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("Poly coefficients must not have trailing zeros; use make_poly")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.lead == 1

    def __str__(self) -> str:
        return ",".join(map(str, self.coeffs)) or "0"


@dataclass(frozen=True)
class RatFn:
    """``num/den`` with gcd(num, den) = 1 and den monic."""

    num: Poly
    den: Poly


def make_poly(coeffs: Sequence[int]) -> Poly:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return Poly(tuple(cs))


def parse_poly(F: Field, text: str) -> Poly:
    """Parse comma-separated element encodings, constant first (``"0,1"`` is X)."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    try:
        coeffs = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"bad polynomial {text!r}") from None
    for c in coeffs:
        F.check(c)
    return make_poly(coeffs)


ONE = Poly((1,))
X = Poly((0, 1))


def add(F: Field, a: Poly, b: Poly) -> Poly:
    n = max(len(a.coeffs), len(b.coeffs))
    ca = a.coeffs + (0,) * (n - len(a.coeffs))
    cb = b.coeffs + (0,) * (n - len(b.coeffs))
    return make_poly([F.add(x, y) for x, y in zip(ca, cb)])


def sub(F: Field, a: Poly, b: Poly) -> Poly:
    n = max(len(a.coeffs), len(b.coeffs))
    ca = a.coeffs + (0,) * (n - len(a.coeffs))
    cb = b.coeffs + (0,) * (n - len(b.coeffs))
    return make_poly([F.sub(x, y) for x, y in zip(ca, cb)])


def scale(F: Field, a: Poly, k: int) -> Poly:
    return make_poly([F.mul(c, k) for c in a.coeffs])


def mul(F: Field, a: Poly, b: Poly) -> Poly:
    if a.is_zero or b.is_zero:
        return Poly()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return make_poly(out)


def poly_divmod(F: Field, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db = b.degree
    if len(rem) <= db:
        return Poly(), a
    inv_lead = F.inv(b.lead)
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        c = F.mul(c, inv_lead)
        quot[k - db] = c
        for j, bj in enumerate(b.coeffs):
            rem[k - db + j] = F.sub(rem[k - db + j], F.mul(c, bj))
    return make_poly(quot), make_poly(rem[:db])


def monic(F: Field, a: Poly) -> Poly:
    if a.is_zero:
        return a
    return scale(F, a, F.inv(a.lead))


def gcd_poly(F: Field, a: Poly, b: Poly) -> Poly:
    """Monic gcd by Euclid's algorithm."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    while not b.is_zero:
        a, b = b, poly_divmod(F, a, b)[1]
    return monic(F, a)


def normalize_rat(F: Field, f: Poly, g: Poly) -> RatFn:
    """Reduce ``f/g`` to lowest terms with a monic denominator."""
    if g.is_zero:
        raise ZeroDivisionError("rational function with zero denominator")
    if f.is_zero:
        return RatFn(Poly(), ONE)
    h = gcd_poly(F, f, g)
    num = poly_divmod(F, f, h)[0]
    den = poly_divmod(F, g, h)[0]
    k = F.inv(den.lead)
    return RatFn(scale(F, num, k), scale(F, den, k))


def eval_poly(F: Field, p: Poly, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def eval_rat(F: Field, r: RatFn, x: int) -> int | None:
    """``r(x)``, or ``POLE`` when the reduced denominator vanishes at ``x``."""
    d = eval_poly(F, r.den, x)
    if d == 0:
        return POLE
    return F.div(eval_poly(F, r.num, x), d)


def random_monic(F: Field, d: int, seed: int | random.Random) -> Poly:
    """Monic polynomial of degree ``d`` with seeded uniform lower coefficients.

    ``seed`` may be an int or an existing ``random.Random`` to draw from.
    """
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return Poly(tuple(rng.randrange(F.order) for _ in range(d)) + (1,))


def from_roots(F: Field, roots: Sequence[int]) -> Poly:
    """Monic polynomial prod (X - r) over ``roots``."""
    p = ONE
    for r in roots:
        p = mul(F, p, Poly((F.neg(r), 1)))
    return p


def poly_pow(F: Field, a: Poly, k: int) -> Poly:
    out = ONE
    for _ in range(k):
        out = mul(F, out, a)
    return out
