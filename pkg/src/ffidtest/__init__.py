"""Identity testing from power oracles over F_{q^n}, with the value-set,
subgroup, product-set and divisor machinery it rests on."""

__version__ = "0.1.0"

from .gf import Field, find_irreducible, get_field
from .polyrat import Poly, RatFn, eval_poly, eval_rat, normalize_rat, random_monic
from .oracle import PowerOracle, equivalence_check, indistinguishable_scan
from .tester import choose_params, naive_test, subspace_test, witness_profile

__all__ = [
    "Field", "find_irreducible", "get_field",
    "Poly", "RatFn", "eval_poly", "eval_rat", "normalize_rat", "random_monic",
    "PowerOracle", "equivalence_check", "indistinguishable_scan",
    "choose_params", "naive_test", "subspace_test", "witness_profile",
]
