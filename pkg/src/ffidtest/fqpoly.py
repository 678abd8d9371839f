"""Dense polynomials over a prime field F_q.

A polynomial is a tuple of residues in ``[0, q)``, constant term first, with
no trailing zeros; the zero polynomial is ``()``.  The integer encoding
``sum(c[i] * q**i)`` orders polynomials and is the wire format used elsewhere.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

Poly = tuple  # tuple[int, ...]


def trim(coeffs: Sequence[int], q: int) -> Poly:
    cs = [c % q for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def degree(a: Poly) -> int:
    """Degree of ``a``; the zero polynomial has degree -1."""
    return len(a) - 1


def encode(a: Poly, q: int) -> int:
    value = 0
    for c in reversed(a):
        value = value * q + c
    return value


def decode(value: int, q: int) -> Poly:
    cs = []
    while value:
        value, r = divmod(value, q)
        cs.append(r)
    return tuple(cs)


def add(a: Poly, b: Poly, q: int) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    cs = list(a)
    for i, c in enumerate(b):
        cs[i] = (cs[i] + c) % q
    return trim(cs, q)


def sub(a: Poly, b: Poly, q: int) -> Poly:
    n = max(len(a), len(b))
    cs = [0] * n
    for i, c in enumerate(a):
        cs[i] = c
    for i, c in enumerate(b):
        cs[i] = (cs[i] - c) % q
    return trim(cs, q)


def scale(a: Poly, k: int, q: int) -> Poly:
    return trim([c * k for c in a], q)


def mul(a: Poly, b: Poly, q: int) -> Poly:
    if not a or not b:
        return ()
    cs = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                cs[i + j] += x * y
    return trim(cs, q)


def divmod_poly(a: Poly, b: Poly, q: int) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, q)
    if len(rem) <= db:
        return (), tuple(rem)
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] % q
        if c == 0:
            continue
        c = c * inv_lead % q
        quot[k - db] = c
        for j in range(db + 1):
            rem[k - db + j] = (rem[k - db + j] - c * b[j]) % q
    return trim(quot, q), trim(rem[:db], q)


def mod(a: Poly, b: Poly, q: int) -> Poly:
    return divmod_poly(a, b, q)[1]


def monic(a: Poly, q: int) -> Poly:
    if not a:
        return a
    return scale(a, pow(a[-1], -1, q), q)


def gcd(a: Poly, b: Poly, q: int) -> Poly:
    """Monic gcd; ``gcd(0, 0)`` is ``()``."""
    while b:
        a, b = b, mod(a, b, q)
    return monic(a, q)


def egcd(a: Poly, b: Poly, q: int) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        quo, rem = divmod_poly(r0, r1, q)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quo, s1, q), q)
        t0, t1 = t1, sub(t0, mul(quo, t1, q), q)
    if not r0:
        return (), (), ()
    k = pow(r0[-1], -1, q)
    return scale(r0, k, q), scale(s0, k, q), scale(t0, k, q)


def mulmod(a: Poly, b: Poly, m: Poly, q: int) -> Poly:
    return mod(mul(a, b, q), m, q)


def powmod(a: Poly, e: int, m: Poly, q: int) -> Poly:
    result: Poly = mod((1,), m, q)
    base = mod(a, m, q)
    while e:
        if e & 1:
            result = mulmod(result, base, m, q)
        e >>= 1
        if e:
            base = mulmod(base, base, m, q)
    return result


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: Poly, q: int) -> bool:
    """Rabin's test: T^(q^n) = T mod f and gcd(T^(q^(n/l)) - T, f) = 1 for primes l | n."""
    n = degree(f)
    if n < 1:
        return False
    if n == 1:
        return True
    t = (0, 1)
    for ell in prime_factors(n):
        h = _frobenius_iterate(t, n // ell, f, q)
        if gcd(sub(h, t, q), f, q) != (1,):
            return False
    return _frobenius_iterate(t, n, f, q) == mod(t, f, q)


def _frobenius_iterate(a: Poly, k: int, m: Poly, q: int) -> Poly:
    # a^(q^k) mod m
    for _ in range(k):
        a = powmod(a, q, m, q)
    return a


def has_small_factor(f: Poly, q: int) -> bool:
    """Ben-Or style early rejection: any irreducible factor of degree <= deg(f)/2."""
    n = degree(f)
    t = (0, 1)
    h = mod(t, f, q)
    for _ in range(n // 2):
        h = powmod(h, q, f, q)
        if gcd(sub(h, t, q), f, q) != (1,):
            return True
    return False


def monic_polys(q: int, d: int) -> Iterator[Poly]:
    """All monic polynomials of degree exactly ``d`` in increasing encoding order."""
    lead = q**d
    for low in range(q**d):
        yield decode(lead + low, q)


@lru_cache(maxsize=None)
def monic_irreducibles(q: int, d: int) -> tuple[Poly, ...]:
    """Monic irreducibles of degree ``d`` over F_q, by increasing encoding."""
    if d == 1:
        return tuple(monic_polys(q, 1))
    smaller = [p for k in range(1, d // 2 + 1) for p in monic_irreducibles(q, k)]
    out = []
    for f in monic_polys(q, d):
        if all(mod(f, p, q) for p in smaller):
            out.append(f)
    return tuple(out)


def mobius(n: int) -> int:
    result = 1
    for p in prime_factors(n):
        if n % (p * p) == 0:
            return 0
        result = -result
    return result


def count_monic_irreducibles(q: int, d: int) -> int:
    """Necklace count (1/d) * sum_{k | d} mu(k) q^(d/k)."""
    total = sum(mobius(k) * q ** (d // k) for k in range(1, d + 1) if d % k == 0)
    return total // d
