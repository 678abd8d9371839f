"""The F_q-subspaces V_m = span(1, alpha, ..., alpha^(m-1)) of F_{q^n}."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GuardExceeded
from .gf import Field


@dataclass(frozen=True)
class SubspaceSpec:
    m: int

    def size(self, F: Field) -> int:
        return F.q**self.m


def enumerate_Vm(F: Field, m: int, guard_bits: int | None = None) -> range:
    """Elements of V_m in increasing encoding order.

    With little-endian encodings these are exactly the encodings in
    ``[0, q^m)``: the elements whose coefficients vanish beyond alpha^(m-1).
    """
    if not isinstance(m, int) or not 1 <= m <= F.n:
        raise ValueError(f"subspace dimension m must lie in [1, {F.n}], got {m!r}")
    bits = F.guard_bits if guard_bits is None else guard_bits
    size = F.q**m
    if size > 2**bits:
        raise GuardExceeded(f"#V_m = {F.q}^{m} exceeds the 2^{bits} enumeration guard")
    return range(size)


def partition(span: range, parts: int) -> list[range]:
    """Split an encoding range into contiguous chunks for parallel sweeps."""
    if parts < 1:
        raise ValueError("parts must be >= 1")
    step = -(-len(span) // parts) if len(span) else 1
    return [span[i : i + step] for i in range(0, len(span), step)]
