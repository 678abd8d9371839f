"""Power oracles x -> f(x)^e with exact query accounting."""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .gf import Field
from .polyrat import Poly, eval_poly

SCAN_GUARD_BITS = 22

DEGREE_ARGUMENT = "degree-argument"
FULL_SCAN = "full-scan"


class PowerOracle:
    """Black box returning f(x)^e for a hidden monic f.

    Only ``e`` and the degree ``d`` are public; the counter is safe to
    increment from several threads.
    """

    def __init__(self, F: Field, hidden: Poly, e: int):
        if e < 1 or F.group_order % e:
            raise ValueError(f"e = {e} must be a positive divisor of q^n - 1 = {F.group_order}")
        if not hidden.is_monic():
            raise ValueError("the hidden polynomial must be monic")
        self.field = F
        self.e = e
        self.d = hidden.degree
        self._hidden = hidden
        self._queries = 0
        self._lock = threading.Lock()

    @property
    def queries(self) -> int:
        return self._queries

    def query(self, x: int) -> int:
        F = self.field
        F.check(x)
        with self._lock:
            self._queries += 1
        return F.pow(eval_poly(F, self._hidden, x), self.e)

    __call__ = query


@dataclass(frozen=True)
class EquivalenceVerdict:
    indistinguishable: bool
    method: str
    scan_size: int | None = None


def indistinguishable_scan(
    F: Field, f: Poly, g: Poly, e: int, guard_bits: int = SCAN_GUARD_BITS
) -> EquivalenceVerdict:
    """Compare f(x)^e and g(x)^e on every x in the field; stops at the first difference."""
    if F.group_order % e:
        raise ValueError(f"e = {e} does not divide {F.group_order}")
    scanned = 0
    for x in F.elements(guard_bits):
        scanned += 1
        if F.pow(eval_poly(F, f, x), e) != F.pow(eval_poly(F, g, x), e):
            return EquivalenceVerdict(False, FULL_SCAN, scanned)
    return EquivalenceVerdict(True, FULL_SCAN, scanned)


def equivalence_check(
    F: Field, f: Poly, g: Poly, e: int, guard_bits: int = SCAN_GUARD_BITS
) -> EquivalenceVerdict:
    """Decide whether the oracles for f and g can be told apart.

    With K = (q^n - 1)/e > d, a nonconstant reduced K-th power has a numerator
    or denominator of degree >= K > d, so f/g = h^K forces h constant and the
    monic f, g must coincide.  Otherwise fall back to a full scan.
    """
    if not (f.is_monic() and g.is_monic()):
        raise ValueError("f and g must be monic")
    if F.group_order % e:
        raise ValueError(f"e = {e} does not divide {F.group_order}")
    d = max(f.degree, g.degree)
    if F.group_order // e > d:
        return EquivalenceVerdict(f == g, DEGREE_ARGUMENT)
    return indistinguishable_scan(F, f, g, e, guard_bits)
