import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from ffidtest.errors import GuardExceeded
from ffidtest.gf import get_field
from ffidtest.groupstat import (
    brute_force_subgroup_order, e_r_of_subspace, element_order, factor_group_order,
    growth_report, product_set, smallest_containing_subgroup, value_set,
)
from ffidtest.polyrat import ONE, X, make_poly, normalize_rat, random_monic


@pytest.mark.parametrize(
    "q, n, factors",
    [(2, 4, ((3, 1), (5, 1))), (2, 12, ((3, 2), (5, 1), (7, 1), (13, 1))), (3, 2, ((2, 3),))],
)
def test_factor_group_order(q, n, factors):
    fact = factor_group_order(get_field(q, n))
    assert fact.factors == factors
    assert fact.value == q**n - 1


def test_element_order_examples(F16):
    fact = factor_group_order(F16)
    assert element_order(F16, fact, 1) == 1
    assert element_order(F16, fact, 2) == 15
    for x in range(1, 16):
        o = element_order(F16, fact, x)
        assert 15 % o == 0
        # brute force: least positive k with x^k = 1
        k, y = 1, x
        while y != 1:
            y, k = F16.mul_raw(y, x), k + 1
        assert o == k
    with pytest.raises(ValueError):
        element_order(F16, fact, 0)


def test_value_set_examples(F16):
    f = make_poly([1, 1, 1])
    r = normalize_rat(F16, f, f)
    assert value_set(F16, r, range(16)).values == {1}
    r = normalize_rat(F16, make_poly([2, 1]), make_poly([3, 1]))
    assert value_set(F16, r, [0, 1]).size == 2
    r = normalize_rat(F16, X, make_poly([1, 1]))
    s = value_set(F16, r, [0, 1])
    assert (s.size, s.zero_hits, s.poles, s.regular) == (0, 1, 1, 0)


def test_smallest_subgroup_examples(F16):
    fact = factor_group_order(F16)
    assert smallest_containing_subgroup(F16, fact, {1}).order == 1
    assert smallest_containing_subgroup(F16, fact, {2}).order == 15
    for x in range(1, 16):
        assert smallest_containing_subgroup(F16, fact, {x}).order == element_order(F16, fact, x)
    with pytest.raises(ValueError):
        smallest_containing_subgroup(F16, fact, set())
    with pytest.raises(ValueError):
        smallest_containing_subgroup(F16, fact, {0, 1})


def test_smallest_subgroup_is_generated_subgroup():
    # closure of A under multiplication, computed directly
    F = get_field(2, 6)
    fact = factor_group_order(F)
    rng = random.Random(11)
    for _ in range(30):
        A = {rng.randrange(1, F.order) for _ in range(rng.randrange(1, 4))}
        H = {1}
        while True:
            grown = H | {F.mul_raw(h, a) for h in H for a in A}
            if grown == H:
                break
            H = grown
        assert smallest_containing_subgroup(F, fact, A).order == len(H)


def test_e_r_examples(F16):
    fact = factor_group_order(F16)
    f = make_poly([2, 1])
    E, _ = e_r_of_subspace(F16, fact, f, f, 2)
    assert E.order == 1
    g = make_poly([3, 1])
    E, summary = e_r_of_subspace(F16, fact, f, g, 1)
    vals = [F16.div(F16.add(x, 2), F16.add(x, 3)) for x in (0, 1)]
    assert E.order == math.lcm(*(element_order(F16, fact, v) for v in vals))
    assert summary.values == set(vals)


def test_e_r_divides_group_order_and_matches_brute_force():
    F = get_field(2, 8)
    fact = factor_group_order(F)
    rng = random.Random(2)
    for _ in range(20):
        d = rng.randrange(1, 4)
        f, g = random_monic(F, d, rng), random_monic(F, d, rng)
        m = rng.randrange(1, 9)
        try:
            E, summary = e_r_of_subspace(F, fact, f, g, m)
        except ValueError:
            continue
        assert F.group_order % E.order == 0
        assert E.order == brute_force_subgroup_order(F, summary.values)


def test_e_r_warns_on_unequal_degrees(F16):
    fact = factor_group_order(F16)
    with pytest.warns(UserWarning):
        e_r_of_subspace(F16, fact, make_poly([2, 1]), ONE, 2)


def test_e_r_all_zero_raises(F16):
    fact = factor_group_order(F16)
    with pytest.raises(ValueError):
        e_r_of_subspace(F16, fact, X, make_poly([1, 1]), 1)


def test_product_set_examples(F16):
    assert product_set(F16, {1}, 5) == {1}
    assert product_set(F16, {1, 2}, 2) == {1, 2, 4}
    H = {F16.pow(2, 3 * k) for k in range(5)}  # subgroup of order 5
    assert product_set(F16, H, 2) == H
    assert product_set(F16, {0, 2}, 2) == {0, 4}
    assert product_set(F16, set(), 3) == set()
    with pytest.raises(ValueError):
        product_set(F16, {1}, 0)


def test_product_set_guard():
    F = get_field(2, 16)
    A = set(range(1, 2001))
    with pytest.raises(GuardExceeded):
        product_set(F, A, 3, guard=10**6)


def naive(F, A, nu):
    out = set()
    for t in itertools.product(A, repeat=nu):
        acc = 1
        for a in t:
            acc = F.mul_raw(acc, a)
        out.add(acc)
    return out


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(2, 5), (3, 3), (2, 18), (5, 2)]), st.data())
def test_product_set_matches_naive(qn, data):
    F = get_field(*qn)
    A = data.draw(st.sets(st.integers(0, F.order - 1), min_size=1, max_size=12))
    nu = data.draw(st.integers(1, 3))
    assert product_set(F, A, nu) == naive(F, A, nu)


def test_growth_report_examples():
    F = get_field(2, 8)
    f = make_poly([5, 1])
    rec = growth_report(F, f, f, 3, 2)
    assert rec.sizeA == 1 and rec.rho == 0.0
    g = make_poly([6, 1])
    rec = growth_report(F, f, g, 4, 1)
    assert rec.rho == pytest.approx(math.log(rec.sizeA) / (4 * math.log(2)))
    assert rec.rho <= 1
    assert rec.floor_ok


def test_growth_q2_n16():
    F = get_field(2, 16)
    rng = random.Random(5)
    f, g = random_monic(F, 1, rng), random_monic(F, 1, rng)
    while g == f:
        g = random_monic(F, 1, rng)
    rec = growth_report(F, f, g, 4, 2)
    assert rec.sizeA >= rec.preimage_floor
    assert 0.45 <= rec.rho <= 1.0
