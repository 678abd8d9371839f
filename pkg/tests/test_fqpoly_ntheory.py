import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ffidtest import fqpoly
from ffidtest.ntheory import divisors, factorize, is_prime


def test_prime_small_range():
    assert [n for n in range(100) if is_prime(n)] == list(sympy.primerange(100))


@pytest.mark.parametrize(
    "n",
    [
        2**61 - 1,
        2**89 - 1,
        2**127 - 1,
        3_317_044_064_679_887_385_961_981,  # strong pseudoprime to the first 13 prime bases
        561,
        3215031751,
        (2**61 - 1) * (2**31 - 1),
    ],
)
def test_is_prime_against_sympy(n):
    assert is_prime(n) == sympy.isprime(n)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 2**80))
def test_is_prime_random(n):
    assert is_prime(n) == sympy.isprime(n)


@pytest.mark.parametrize("q, n", [(2, 4), (2, 12), (3, 2), (2, 64), (2, 100), (3, 60), (2, 120)])
def test_factorize_group_orders(q, n):
    N = q**n - 1
    assert factorize(N) == sorted(sympy.factorint(N).items())


def test_factorize_examples():
    assert factorize(15) == [(3, 1), (5, 1)]
    assert factorize(4095) == [(3, 2), (5, 1), (7, 1), (13, 1)]
    assert factorize(8) == [(2, 3)]


def test_factorize_semiprime_beyond_trial_division():
    p, q = 1_000_003, 998_244_353
    assert factorize(p * q * p) == [(998_244_353, 1), (1_000_003, 2)][::-1]


def test_divisors():
    ds = divisors(factorize(4095))
    assert ds == sorted(d for d in range(1, 4096) if 4095 % d == 0)


def test_poly_divmod_roundtrip():
    rng = random.Random(3)
    for q in (2, 3, 5):
        for _ in range(50):
            a = fqpoly.trim([rng.randrange(q) for _ in range(rng.randrange(1, 9))], q)
            b = fqpoly.trim([rng.randrange(q) for _ in range(rng.randrange(1, 5))] + [1], q)
            quo, rem = fqpoly.divmod_poly(a, b, q)
            assert fqpoly.add(fqpoly.mul(quo, b, q), rem, q) == a
            assert fqpoly.degree(rem) < fqpoly.degree(b)


def test_egcd_bezout():
    q = 5
    a, b = (1, 2, 0, 1), (3, 1, 1)
    g, s, t = fqpoly.egcd(a, b, q)
    assert fqpoly.add(fqpoly.mul(s, a, q), fqpoly.mul(t, b, q), q) == g


@pytest.mark.parametrize("q", [2, 3, 5])
@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
def test_irreducible_count_matches_necklace_formula(q, d):
    if q**d > 20000:
        pytest.skip("enumeration too large")
    brute = sum(fqpoly.is_irreducible(p, q) for p in fqpoly.monic_polys(q, d))
    assert brute == fqpoly.count_monic_irreducibles(q, d) == len(fqpoly.monic_irreducibles(q, d))


def test_irreducibility_against_sympy():
    T = sympy.symbols("T")
    for q in (2, 3):
        for p in fqpoly.monic_polys(q, 4):
            sp = sympy.Poly(list(reversed(p)), T, modulus=q)
            assert fqpoly.is_irreducible(p, q) == sp.is_irreducible


def test_mobius():
    assert [fqpoly.mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
