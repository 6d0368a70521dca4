"""Count integer-edge cuboids and rectangles of a given volume or area."""

from .counting import (
    ExponentDecomposition,
    SymmetryClass,
    TripleClassCounts,
    base_class_counts,
    class_counts,
    cuboid_count,
    cuboid_count_prime_power,
    cuboid_count_squarefree,
    cuboid_count_two_prime_powers,
    decompose_exponent,
    divisor_count,
    merge_class_counts,
    product_set_cardinality,
    rectangle_count,
)
from .factorize import Factorization, factor, factor_with_sieve, is_prime, spf_sieve

__version__ = "0.1.0"
