import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from ffidtest import fqpoly
from ffidtest.errors import GuardExceeded
from ffidtest.gf import Field, find_irreducible, format_poly, get_field, parse_poly


def brute_irreducible(q, n):
    """Least monic degree-n polynomial with no monic factor of degree <= n/2."""
    small = [p for k in range(1, n // 2 + 1) for p in fqpoly.monic_polys(q, k)]
    for cand in fqpoly.monic_polys(q, n):
        if all(fqpoly.divmod_poly(cand, p, q)[1] for p in small):
            return fqpoly.encode(cand, q)


@pytest.mark.parametrize(
    "q, n, enc",
    [(2, 1, 2), (2, 4, 19), (3, 2, 10)],
)
def test_find_irreducible_examples(q, n, enc):
    assert fqpoly.encode(find_irreducible(q, n), q) == enc


@pytest.mark.parametrize("q, n", [(2, 2), (2, 5), (2, 8), (3, 3), (5, 2), (7, 3)])
def test_find_irreducible_is_least(q, n):
    assert fqpoly.encode(find_irreducible(q, n), q) == brute_irreducible(q, n)


def test_find_irreducible_bounds():
    with pytest.raises(ValueError):
        find_irreducible(4, 2)
    with pytest.raises(ValueError):
        find_irreducible(2, 0)
    with pytest.raises(ValueError):
        find_irreducible(2, 121)


def test_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        Field(2, 2, (1, 0, 1))  # T^2 + 1 = (T + 1)^2
    with pytest.raises(ValueError):
        Field(2, 2, (1, 1, 0))


def test_spec_arith(F16):
    assert F16.psi_encoding == 19
    assert F16.mul(2, 8) == 3
    assert F16.inv(2) == 9
    assert F16.pow(2, 15) == 1
    assert F16.add(5, 5) == 0


def test_inverse_of_zero(F16):
    with pytest.raises(ZeroDivisionError):
        F16.inv(0)
    with pytest.raises(ZeroDivisionError):
        F16.inv_raw(0)


@pytest.mark.parametrize("q, n, expected", [(2, 2, [0, 1, 2, 3]), (3, 1, [0, 1, 2])])
def test_enumerate_small(q, n, expected):
    assert list(get_field(q, n).elements()) == expected


def test_enumerate_f16(F16):
    els = list(F16.elements())
    assert len(els) == 16 and els[0] == 0 and els[-1] == 15


def test_enumerate_guard():
    F = Field(2, 30)
    with pytest.raises(GuardExceeded):
        F.elements()
    assert len(list(Field(2, 4).elements(guard_bits=4))) == 16
    with pytest.raises(GuardExceeded):
        Field(2, 4).elements(guard_bits=3)


def test_coeff_roundtrip():
    F = get_field(3, 4)
    for x in range(F.order):
        cs = F.to_coeffs(x)
        assert len(cs) == 4
        assert F.from_coeffs(cs) == x


def test_check_rejects_out_of_range(F16):
    with pytest.raises(ValueError):
        F16.check(16)
    with pytest.raises(ValueError):
        F16.check(-1)


def test_parse_and_format():
    psi = parse_poly("1,1,0,0,1")
    assert psi == (1, 1, 0, 0, 1)
    assert Field(2, 4, psi).psi_encoding == 19
    assert parse_poly(format_poly(psi)) == psi


@pytest.mark.parametrize("q, n", [(2, 4), (2, 9), (3, 3), (5, 2), (2, 20), (3, 11), (7, 5)])
def test_table_and_raw_paths_agree(q, n):
    F = get_field(q, n)
    rng = random.Random(q * 1000 + n)
    for _ in range(300):
        a, b = rng.randrange(F.order), rng.randrange(1, F.order)
        assert F.mul(a, b) == F.mul_raw(a, b)
        assert F.inv(b) == F.inv_raw(b)
        e = rng.randrange(F.group_order + 1)
        assert F.pow(a, e) == F.pow_raw(a, e)


def test_mul_matches_polynomial_oracle():
    # independent path: schoolbook product in F_q[T] then reduction mod psi
    for q, n in [(2, 6), (2, 13), (3, 4), (5, 3)]:
        F = Field(q, n, tables=False)
        rng = random.Random(n)
        for _ in range(200):
            a, b = rng.randrange(F.order), rng.randrange(F.order)
            pa, pb = fqpoly.decode(a, q), fqpoly.decode(b, q)
            want = fqpoly.encode(fqpoly.mod(fqpoly.mul(pa, pb, q), F.psi, q), q)
            assert F.mul(a, b) == want


def test_primitive_element_has_full_order():
    for q, n in [(2, 4), (2, 8), (3, 3), (5, 2)]:
        F = get_field(q, n)
        g = F.primitive_element()
        seen = set()
        x = 1
        for _ in range(F.group_order):
            seen.add(x)
            x = F.mul_raw(x, g)
        assert len(seen) == F.group_order


def test_frobenius_is_identity_on_full_power():
    F = get_field(3, 4)
    assert all(F.pow(x, F.order) == x for x in F.elements())


def test_field_identity():
    assert Field(2, 4) == Field(2, 4, (1, 1, 0, 0, 1))
    assert Field(2, 4) != Field(2, 4, (1, 0, 0, 1, 1))
    assert len({Field(2, 4), get_field(2, 4)}) == 1


FIELDS = [(2, 5), (3, 3), (2, 17), (5, 4)]


@st.composite
def field_triples(draw):
    q, n = draw(st.sampled_from(FIELDS))
    F = get_field(q, n)
    elem = st.integers(0, F.order - 1)
    return F, draw(elem), draw(elem), draw(elem)


@settings(max_examples=300, deadline=None)
@given(field_triples())
def test_field_axioms(t):
    F, a, b, c = t
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(a, b) == F.add(a, F.neg(b))
    assert F.mul(a, 1) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.div(F.mul(a, b), a) == b


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_pow_laws(qn, data):
    F = get_field(*qn)
    a = data.draw(st.integers(1, F.order - 1))
    i = data.draw(st.integers(0, 3 * F.group_order))
    j = data.draw(st.integers(0, 100))
    assert F.mul(F.pow(a, i), F.pow(a, j)) == F.pow(a, i + j)
    assert F.pow(a, -j) == F.inv(F.pow(a, j))
    assert F.pow(0, 0) == 1 and F.pow(0, 5) == 0


def test_additive_structure_is_digitwise():
    F = get_field(3, 3)
    for a, b in itertools.product(range(F.order), repeat=2):
        ca, cb = F.to_coeffs(a), F.to_coeffs(b)
        assert F.to_coeffs(F.add(a, b)) == tuple((x + y) % 3 for x, y in zip(ca, cb))
