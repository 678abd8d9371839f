import random
import threading

import pytest

from ffidtest.errors import GuardExceeded
from ffidtest.gf import get_field
from ffidtest.oracle import DEGREE_ARGUMENT, FULL_SCAN, PowerOracle, equivalence_check, indistinguishable_scan
from ffidtest.polyrat import X, from_roots, make_poly, random_monic


def test_query_examples(F16):
    assert PowerOracle(F16, make_poly([1, 1]), 15).query(0) == 1
    assert PowerOracle(F16, X, 3).query(2) == 8
    assert PowerOracle(F16, X, 15)(2) == 1


def test_query_counter(F16):
    o = PowerOracle(F16, X, 5)
    for x in range(7):
        o.query(x)
    assert o.queries == 7
    assert (o.e, o.d) == (5, 1)


def test_counter_is_thread_safe():
    F = get_field(2, 8)
    o = PowerOracle(F, make_poly([3, 1]), 17)

    def work():
        for x in range(256):
            o.query(x)

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert o.queries == 8 * 256


def test_oracle_validation(F16):
    with pytest.raises(ValueError):
        PowerOracle(F16, X, 4)
    with pytest.raises(ValueError):
        PowerOracle(F16, make_poly([1, 2]), 3)


def test_scan_examples(F16):
    f = make_poly([4, 1])
    assert indistinguishable_scan(F16, f, f, 15).indistinguishable
    v = indistinguishable_scan(F16, X, make_poly([1, 1]), 15)
    assert not v.indistinguishable and v.scan_size == 1 and v.method == FULL_SCAN
    for c in range(1, 16):
        assert not indistinguishable_scan(F16, X, make_poly([c, 1]), 15).indistinguishable


def test_scan_guard():
    F = get_field(2, 23)
    f = make_poly([1, 1])
    with pytest.raises(GuardExceeded):
        indistinguishable_scan(F, f, f, 47)


def test_equivalence_examples(F16, F4096):
    f = make_poly([4, 1])
    assert equivalence_check(F16, f, f, 15).indistinguishable
    a, b = random_monic(F4096, 2, 1), random_monic(F4096, 2, 2)
    assert a != b
    v = equivalence_check(F4096, a, b, 13)
    assert v == type(v)(False, DEGREE_ARGUMENT)
    assert equivalence_check(F16, X, make_poly([1, 1]), 15).method == FULL_SCAN


def test_indistinguishable_distinct_pair_exists(F16):
    # with e = q^n - 1 only the root set matters
    f = from_roots(F16, [3, 3, 5])
    g = from_roots(F16, [3, 5, 5])
    v = equivalence_check(F16, f, g, 15)
    assert v.indistinguishable and v.method == FULL_SCAN


def test_degree_argument_agrees_with_scan():
    F = get_field(2, 8)
    rng = random.Random(9)
    for e in (5, 15, 17, 51, 85):
        for _ in range(10):
            d = rng.randrange(1, 4)
            f, g = random_monic(F, d, rng), random_monic(F, d, rng)
            if rng.random() < 0.3:
                g = f
            if F.group_order // e <= d:
                continue
            assert equivalence_check(F, f, g, e).indistinguishable == indistinguishable_scan(F, f, g, e).indistinguishable
