"""Integer primality and factorization for group orders up to 2^120."""

from __future__ import annotations

import math
import random
from functools import lru_cache

TRIAL_LIMIT = 10**6

# Miller-Rabin with these bases is exact below 3.317e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_EXACT_BELOW = 3_317_044_064_679_887_385_961_981


class FactorizationError(RuntimeError):
    pass


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * (TRIAL_LIMIT + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(TRIAL_LIMIT) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, TRIAL_LIMIT + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def halve(x: int) -> int:
        x %= n
        return (x + n) // 2 if x % 2 else x // 2

    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = halve(P * U + V), halve(D * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        if V == 0:
            return True
        Qk = Qk * Qk % n
    return False


def is_prime(n: int) -> bool:
    """Deterministic below 3.3e24; Baillie-PSW plus 13 Miller-Rabin bases above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if not all(_strong_probable_prime(n, a) for a in _MR_BASES):
        return False
    if n < _MR_EXACT_BELOW:
        return True
    return _strong_lucas_probable_prime(n)


def _brent_rho(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g, r, qprod = 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    qprod = qprod * abs(x - y) % n
                g = math.gcd(qprod, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int, seed: int = 0x5EED) -> list[tuple[int, int]]:
    """Prime factorization of ``n >= 1`` as sorted ``(prime, exponent)`` pairs.

    Trial division up to 10^6, then Brent's rho with a fixed seed.  Raises
    FactorizationError if a cofactor cannot be split or certified.
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    counts: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    rng = random.Random(seed)
    stack = [n] if n > 1 else []
    attempts = 0
    while stack:
        m = stack.pop()
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack += [root, root]
            continue
        attempts += 1
        if attempts > 10_000:
            raise FactorizationError(f"could not split cofactor {m}")
        d = _brent_rho(m, rng)
        stack += [d, m // d]
    return sorted(counts.items())


def divisors(factorization: list[tuple[int, int]]) -> list[int]:
    divs = [1]
    for p, k in factorization:
        divs = [d * p**i for d in divs for i in range(k + 1)]
    return sorted(divs)
