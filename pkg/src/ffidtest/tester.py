"""Identity testing from power oracles: the naive test and the V_m subspace test."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import GuardExceeded
from .gf import Field
from .oracle import PowerOracle
from .polyrat import Poly, eval_poly
from .subspace import enumerate_Vm

EQUAL = "equal-or-indistinguishable"
DISTINCT = "distinct"

BOUNDARY_EPS = 2.0**-40


@dataclass(frozen=True)
class TestParams:
    __test__ = False  # not a pytest class

    d: int
    e: int
    delta: float
    c: float
    nu: int
    m: int
    nu_formula: float
    m_formula: float
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class TestReport:
    __test__ = False

    method: str
    verdict: str
    witness: int | None
    queries_f: int
    queries_g: int
    m: int | None
    nu: int | None
    guaranteed: bool
    notes: tuple[str, ...] = field(default=())


def _near_integer(x: float) -> bool:
    return abs(x - round(x)) < BOUNDARY_EPS


def choose_params(
    F: Field, e: int, d: int, c: float = 0.5, nu: int | None = None, m: int | None = None
) -> TestParams:
    """nu = floor(c^(1+1/2d) / (2 delta)^(1/2d)) and m = floor(2 log e / (nu log q)).

    delta = log e / (n log q).  nu is raised to 1 and m clamped to [1, n];
    either adjustment, a caller override, or a float within 2^-40 of an
    integer is recorded in ``flags``.  m is taken as the largest integer with
    q^(nu*m) <= e^2, which is the floor formula evaluated exactly.
    """
    if e < 2 or F.group_order % e:
        raise ValueError(f"e = {e} must be a divisor >= 2 of q^n - 1 = {F.group_order}")
    if d < 1:
        raise ValueError("d must be >= 1")
    if not 0 < c <= 1:
        raise ValueError("c must lie in (0, 1]")
    flags = []
    delta = math.log(e) / (F.n * math.log(F.q))
    nu_formula = c ** (1 + 1 / (2 * d)) / (2 * delta) ** (1 / (2 * d))
    if _near_integer(nu_formula):
        flags.append("nu-near-integer-boundary")
    if nu is None:
        nu = math.floor(nu_formula)
        if nu < 1:
            nu = 1
            flags.append("nu-raised-to-1")
    else:
        if nu < 1:
            raise ValueError("nu must be >= 1")
        flags.append("nu-override")

    m_formula = 2 * math.log(e) / (nu * math.log(F.q))
    if _near_integer(m_formula):
        flags.append("m-near-integer-boundary")
    if m is None:
        m_exact, target, step = 0, e * e, F.q**nu
        power = step
        while power <= target:
            m_exact += 1
            power *= step
        m = min(max(m_exact, 1), F.n)
        if m != m_exact:
            flags.append(f"m-clamped-from-{m_exact}")
    else:
        if not 1 <= m <= F.n:
            raise ValueError(f"m must lie in [1, {F.n}]")
        flags.append("m-override")
    return TestParams(d, e, delta, c, nu, m, nu_formula, m_formula, tuple(flags))


def subspace_test(
    oF: PowerOracle, oG: PowerOracle, F: Field, m: int, nu: int | None = None,
    guard_bits: int | None = None,
) -> TestReport:
    """Query both oracles on V_m in encoding order; stop at the first mismatch."""
    points = enumerate_Vm(F, m, guard_bits)
    e, d = oF.e, max(oF.d, oG.d)
    start_f, start_g = oF.queries, oG.queries
    witness = None
    for x in points:
        if oF.query(x) != oG.query(x):
            witness = x
            break
    guaranteed = F.q**m > e * d
    notes = ()
    if witness is None and not guaranteed:
        notes = ("no mismatch on V_m, but q^m <= e*d so f = g is not certified",)
    return TestReport(
        "subspace",
        DISTINCT if witness is not None else EQUAL,
        witness,
        oF.queries - start_f,
        oG.queries - start_g,
        m,
        nu,
        guaranteed,
        notes,
    )


def naive_test(oF: PowerOracle, oG: PowerOracle, F: Field, e: int, d: int) -> TestReport:
    """Query encodings 0..e*d; f^e - g^e, if nonzero, has at most e*d roots."""
    if e * d + 1 > F.order:
        raise ValueError(f"field too small for the naive test: e*d + 1 = {e * d + 1} > {F.order}")
    start_f, start_g = oF.queries, oG.queries
    witness = None
    for x in range(e * d + 1):
        if oF.query(x) != oG.query(x):
            witness = x
            break
    return TestReport(
        "naive",
        DISTINCT if witness is not None else EQUAL,
        witness,
        oF.queries - start_f,
        oG.queries - start_g,
        None,
        None,
        True,
    )


def witness_profile(
    F: Field, f: Poly, g: Poly, e: int, guard_bits: int | None = None
) -> int | None:
    """Smallest m such that V_m holds a point with f(x)^e != g(x)^e, else None."""
    bits = F.guard_bits if guard_bits is None else guard_bits
    limit = min(F.order, 2**bits)
    for x in range(limit):
        if F.pow(eval_poly(F, f, x), e) != F.pow(eval_poly(F, g, x), e):
            m = 1
            while F.q**m <= x:
                m += 1
            return m
    if limit < F.order:
        raise GuardExceeded(f"no witness below 2^{bits}; full field scan exceeds the guard")
    return None
