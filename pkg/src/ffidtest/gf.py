"""Arithmetic in F_{q^n} = F_q[T]/(psi) for prime q.

Elements are plain ints: the canonical encoding ``sum(c_i * q**i)`` of the
coefficient vector ``(c_0, ..., c_{n-1})`` in the basis ``1, alpha, ...,
alpha^(n-1)``, where alpha is the residue class of T.  Zero is 0, one is 1.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from . import fqpoly
from .errors import GuardExceeded
from .ntheory import factorize, is_prime

MAX_Q = 2**16
MAX_ORDER_BITS = 120
DEFAULT_GUARD_BITS = 24
# fields up to this size get log/exp tables
TABLE_LIMIT = 2**16
REDUCE_TABLE_MAX_N = 16


def _check_params(q: int, n: int) -> None:
    if not isinstance(q, int) or not 2 <= q <= MAX_Q or not is_prime(q):
        raise ValueError(f"q must be a prime in [2, 2^16], got {q!r}")
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"extension degree must be >= 1, got {n!r}")
    if q**n > 2**MAX_ORDER_BITS:
        raise ValueError(f"q^n = {q}^{n} exceeds the 2^{MAX_ORDER_BITS} cap")


def find_irreducible(q: int, n: int) -> tuple[int, ...]:
    """Monic irreducible of degree ``n`` over F_q with the smallest encoding."""
    _check_params(q, n)
    if n == 1:
        return (0, 1)
    for cand in fqpoly.monic_polys(q, n):
        if cand[0] == 0:
            continue  # divisible by T
        if fqpoly.has_small_factor(cand, q):
            continue
        return cand
    raise AssertionError("no irreducible found")  # unreachable: one always exists


def parse_poly(text: str) -> tuple[int, ...]:
    """Parse ``"1,1,0,0,1"`` (constant term first) into a coefficient tuple."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError(f"empty polynomial {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"bad polynomial {text!r}") from None


def format_poly(coeffs: Iterable[int]) -> str:
    return ",".join(str(c) for c in coeffs)


def _clmul(a: int, b: int) -> int:
    """Carryless product of bit-packed F_2[T] polynomials."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    prod = 0
    while b:
        if b & 1:
            prod ^= a
        a <<= 1
        b >>= 1
    return prod


@lru_cache(maxsize=1)
def _clmul8_table() -> list[int]:
    return [_clmul(a, b) for a in range(256) for b in range(256)]


class Field:
    """The finite field F_{q^n} with a fixed modulus psi.

    ``tables`` controls log/exp tables: ``None`` builds them lazily for fields
    with at most 2^16 elements, ``False`` forces schoolbook arithmetic.
    """

    def __init__(
        self,
        q: int,
        n: int,
        psi: Sequence[int] | None = None,
        *,
        tables: bool | None = None,
        guard_bits: int = DEFAULT_GUARD_BITS,
    ):
        _check_params(q, n)
        if psi is None:
            psi = find_irreducible(q, n)
        else:
            psi = tuple(psi)
            if any(not 0 <= c < q for c in psi):
                raise ValueError(f"psi coefficients must lie in [0, {q})")
            if len(psi) != n + 1 or psi[-1] != 1:
                raise ValueError(f"psi must be monic of degree {n}")
            if not fqpoly.is_irreducible(psi, q):
                raise ValueError(f"psi = {format_poly(psi)} is reducible over F_{q}")
        self.q = q
        self.n = n
        self.psi: tuple[int, ...] = psi
        self.psi_encoding = fqpoly.encode(psi, q)
        self.order = q**n
        self.group_order = self.order - 1
        self.guard_bits = guard_bits
        self._use_tables = (self.order <= TABLE_LIMIT) if tables is None else bool(tables)
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._factorization: list[tuple[int, int]] | None = None
        # q = 2: residues of h * T^n for every high half h of a product
        self._reduce: list[int] | None = None
        self._low_mask = (1 << n) - 1
        if q == 2 and n <= REDUCE_TABLE_MAX_N:
            self._reduce = [self._reduce_binary(h << n) for h in range(1 << max(n - 1, 0))]
        if q == 2:
            self.mul_raw = self._mul_binary  # skip the dispatch in hot loops

    def __repr__(self) -> str:
        return f"Field(q={self.q}, n={self.n}, psi={format_poly(self.psi)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.q, self.n, self.psi) == (other.q, other.n, other.psi)

    def __hash__(self) -> int:
        return hash((self.q, self.n, self.psi))

    # encodings ---------------------------------------------------------

    @property
    def alpha(self) -> int:
        """The residue class of T."""
        return self.from_coeffs((0, 1))

    def to_coeffs(self, x: int) -> tuple[int, ...]:
        """Length-n coefficient vector of ``x`` (coefficient of alpha^i at i)."""
        self.check(x)
        out = []
        for _ in range(self.n):
            x, r = divmod(x, self.q)
            out.append(r)
        return tuple(out)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        """Encode a coefficient vector, reducing it modulo psi first."""
        poly = fqpoly.mod(fqpoly.trim(coeffs, self.q), self.psi, self.q)
        return fqpoly.encode(poly, self.q)

    def check(self, x: int) -> int:
        if not isinstance(x, int) or not 0 <= x < self.order:
            raise ValueError(f"{x!r} is not an element encoding of F_{self.q}^{self.n}")
        return x

    def elements(self, guard_bits: int | None = None) -> range:
        """All elements in increasing encoding order."""
        bits = self.guard_bits if guard_bits is None else guard_bits
        if self.order > 2**bits:
            raise GuardExceeded(f"field of size {self.q}^{self.n} exceeds the 2^{bits} enumeration guard")
        return range(self.order)

    # arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        if self.n == 1:
            return (a + b) % self.q
        return self._digitwise(a, b, 1)

    def sub(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        if self.n == 1:
            return (a - b) % self.q
        return self._digitwise(a, b, -1)

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def scalar(self, k: int, a: int) -> int:
        """Multiply ``a`` by the base-field scalar ``k``."""
        k %= self.q
        q, out, place = self.q, 0, 1
        while a:
            a, r = divmod(a, q)
            out += (r * k % q) * place
            place *= q
        return out

    def _digitwise(self, a: int, b: int, sign: int) -> int:
        q, out, place = self.q, 0, 1
        while a or b:
            a, ra = divmod(a, q)
            b, rb = divmod(b, q)
            out += ((ra + sign * rb) % q) * place
            place *= q
        return out

    def mul(self, a: int, b: int) -> int:
        if self._use_tables:
            if a == 0 or b == 0:
                return 0
            exp, log = self._tables()
            return exp[log[a] + log[b]]
        return self.mul_raw(a, b)

    def mul_raw(self, a: int, b: int) -> int:
        """Schoolbook multiplication modulo psi, bypassing any tables."""
        if self.q == 2:
            return self._mul_binary(a, b)
        if self.n == 1:
            return a * b % self.q
        pa = fqpoly.decode(a, self.q)
        pb = fqpoly.decode(b, self.q)
        return fqpoly.encode(fqpoly.mulmod(pa, pb, self.psi, self.q), self.q)

    def _mul_binary(self, a: int, b: int) -> int:
        if self._reduce is not None:
            # n <= 16: byte-wise carryless product, then one table reduction
            cl = _clmul8_table()
            if a < 256 and b < 256:
                prod = cl[a << 8 | b]
            else:
                a0, a1, b0, b1 = a & 255, a >> 8, b & 255, b >> 8
                prod = (
                    cl[a0 << 8 | b0]
                    ^ ((cl[a0 << 8 | b1] ^ cl[a1 << 8 | b0]) << 8)
                    ^ (cl[a1 << 8 | b1] << 16)
                )
            return (prod & self._low_mask) ^ self._reduce[prod >> self.n]
        return self._reduce_binary(_clmul(a, b))

    def _reduce_binary(self, prod: int) -> int:
        n, modulus = self.n, self.psi_encoding
        top = prod.bit_length() - 1
        while top >= n:
            prod ^= modulus << (top - n)
            top = prod.bit_length() - 1
        return prod

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self._use_tables:
            exp, log = self._tables()
            return exp[(self.group_order - log[a]) % self.group_order]
        return self.inv_raw(a)

    def inv_raw(self, a: int) -> int:
        """Inverse by the extended Euclidean algorithm over F_q[T]."""
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.q == 2:
            return self._inv_binary(a)
        g, s, _ = fqpoly.egcd(fqpoly.decode(a, self.q), self.psi, self.q)
        assert g == (1,)
        return fqpoly.encode(fqpoly.mod(s, self.psi, self.q), self.q)

    def _inv_binary(self, a: int) -> int:
        # extended Euclid on bit-packed F_2[T] polynomials; invariant s*a = r mod psi
        r0, r1 = self.psi_encoding, a
        s0, s1 = 0, 1
        while r1 != 1:
            if r1 == 0:
                raise AssertionError("psi is not irreducible")
            shift = r0.bit_length() - r1.bit_length()
            if shift < 0:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            r0 ^= r1 << shift
            s0 ^= s1 << shift
            if r0.bit_length() < r1.bit_length():
                r0, r1, s0, s1 = r1, r0, s1, s0
        return self._reduce_binary(s1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self._use_tables:
            exp, log = self._tables()
            return exp[log[a] * e % self.group_order]
        return self.pow_raw(a, e)

    def pow_raw(self, a: int, e: int) -> int:
        """Left-to-right square-and-multiply with schoolbook multiplication."""
        if e < 0:
            return self.pow_raw(self.inv_raw(a), -e)
        result = 1
        for bit in bin(e)[2:]:
            result = self.mul_raw(result, result)
            if bit == "1":
                result = self.mul_raw(result, a)
        return result

    # group structure ---------------------------------------------------

    def group_factorization(self) -> list[tuple[int, int]]:
        if self._factorization is None:
            self._factorization = factorize(self.group_order)
        return self._factorization

    def primitive_element(self) -> int:
        """Smallest-encoding generator of the multiplicative group."""
        fact = self.group_factorization()
        N = self.group_order
        for g in range(1, self.order):
            if all(self.pow_raw(g, N // p) != 1 for p, _ in fact):
                return g
        raise AssertionError("multiplicative group has no generator")  # unreachable

    def tables(self) -> tuple[list[int], list[int]] | None:
        """``(exp, log)`` tables w.r.t. ``primitive_element()``, or None if disabled.

        ``exp`` has length ``2 * group_order`` so sums of two logs index it directly.
        """
        return self._tables() if self._use_tables else None

    def _tables(self) -> tuple[list[int], list[int]]:
        if self._exp is None:
            N = self.group_order
            g = self.primitive_element()
            exp = [0] * (2 * N)
            log = [0] * self.order
            x = 1
            for i in range(N):
                exp[i] = x
                log[x] = i
                x = self.mul_raw(x, g)
            exp[N:] = exp[:N]
            self._exp, self._log = exp, log
        return self._exp, self._log


@lru_cache(maxsize=64)
def get_field(q: int, n: int, psi: tuple[int, ...] | None = None) -> Field:
    """Shared Field instance for ``(q, n, psi)``."""
    return Field(q, n, psi)
