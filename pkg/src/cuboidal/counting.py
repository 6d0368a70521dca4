"""Counting rectangles R(N) and cuboids O(N) of integer edges with given area/volume.

A cuboid of volume N is an unordered triple (A, B, C) with A*B*C = N. Triples
are split by symmetry into all-equal (f), exactly-two-equal (g) and
all-distinct (h) classes. For a prime power p**n the class sizes depend only
on n = 6*s + alpha and come from a six-row table; class sizes of coprime parts
combine through a bilinear merge, so O(N) is a left fold over the prime
powers of N.

All arithmetic uses Python integers, so counts never overflow.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import reduce
from typing import NamedTuple, Sequence, Union

from .factorize import Factorization, factor

__all__ = [
    "ExponentDecomposition",
    "TripleClassCounts",
    "SymmetryClass",
    "IDENTITY",
    "as_factorization",
    "decompose_exponent",
    "base_class_counts",
    "merge_class_counts",
    "class_counts",
    "class_counts_from_exponents",
    "cuboid_count",
    "cuboid_count_from_exponents",
    "fold_trace",
    "divisor_count",
    "rectangle_count",
    "cuboid_count_prime_power",
    "cuboid_count_two_prime_powers",
    "cuboid_count_squarefree",
    "product_set_cardinality",
]

FactorizationLike = Union[Factorization, int, Sequence[Sequence[int]]]


class ExponentDecomposition(NamedTuple):
    s: int
    alpha: int

    @property
    def exponent(self) -> int:
        return 6 * self.s + self.alpha


class TripleClassCounts(NamedTuple):
    """Numbers of canonical triples that are all-equal, two-equal, all-distinct."""

    f: int
    g: int
    h: int

    @property
    def total(self) -> int:
        return self.f + self.g + self.h


IDENTITY = TripleClassCounts(1, 0, 0)


class SymmetryClass(enum.Enum):
    ALL_EQUAL = 1
    TWO_EQUAL = 2
    ALL_DISTINCT = 3

    @classmethod
    def of(cls, a: int, b: int, c: int) -> "SymmetryClass":
        distinct = len({a, b, c})
        return {1: cls.ALL_EQUAL, 2: cls.TWO_EQUAL, 3: cls.ALL_DISTINCT}[distinct]


def as_factorization(x: FactorizationLike) -> Factorization:
    """Accept an int, a Factorization, or (prime, exponent) pairs."""
    if isinstance(x, Factorization):
        return x
    if isinstance(x, int):
        return factor(x)
    return Factorization.from_pairs(x)


def decompose_exponent(n: int) -> ExponentDecomposition:
    if n < 0:
        raise ValueError(f"exponent must be >= 0, got {n}")
    return ExponentDecomposition(*divmod(n, 6))


def base_class_counts(n: int) -> TripleClassCounts:
    """Class counts of the triples (i, j, k), i <= j <= k, i + j + k = n.

    These are the class counts of p**n for any prime p.
    """
    s, alpha = decompose_exponent(n)
    if alpha == 0:
        return TripleClassCounts(1, 3 * s, 3 * s * s)
    if alpha == 1:
        return TripleClassCounts(0, 3 * s + 1, 3 * s * s + s)
    if alpha == 2:
        return TripleClassCounts(0, 3 * s + 2, 3 * s * s + 2 * s)
    if alpha == 3:
        return TripleClassCounts(1, 3 * s + 1, 3 * s * s + 3 * s + 1)
    if alpha == 4:
        return TripleClassCounts(0, 3 * s + 3, 3 * s * s + 4 * s + 1)
    return TripleClassCounts(0, 3 * s + 3, 3 * s * s + 5 * s + 2)


def merge_class_counts(a: TripleClassCounts, b: TripleClassCounts) -> TripleClassCounts:
    """Class counts of N1*N2 from those of coprime N1 and N2.

    Coprimality is the caller's responsibility; it is not checked. Pairing a
    triple of N1 with one of N2 coordinate-wise yields 6, 3, 2 or 1 distinct
    cuboids depending on the two symmetry classes (see
    :func:`product_set_cardinality`), which gives the bilinear rule below.
    """
    f1, g1, h1 = a
    f2, g2, h2 = b
    return TripleClassCounts(
        f1 * f2,
        f1 * g2 + g1 * (f2 + g2),
        6 * h1 * h2 + g1 * g2 + f1 * h2 + h1 * f2 + 3 * (g1 * h2 + h1 * g2),
    )


def class_counts_from_exponents(exponents: Sequence[int]) -> TripleClassCounts:
    return reduce(merge_class_counts, map(base_class_counts, exponents), IDENTITY)


def class_counts(fac: FactorizationLike) -> TripleClassCounts:
    return class_counts_from_exponents(as_factorization(fac).exponents)


def cuboid_count_from_exponents(exponents: Sequence[int]) -> int:
    return class_counts_from_exponents(exponents).total


def cuboid_count(fac: FactorizationLike) -> int:
    """Number of integer-edge cuboids of volume N.

    >>> cuboid_count(12)
    4
    >>> cuboid_count([(2, 6), (3, 7), (5, 6)])
    4736
    """
    return class_counts(fac).total


def fold_trace(fac: FactorizationLike) -> list[tuple[str, object]]:
    """Intermediate values of the fold, in evaluation order.

    Returns ``("base", (p, n, decomposition, counts))`` for every prime power
    followed by ``("merge", (primes_so_far, counts))`` for every merge step.
    """
    fac = as_factorization(fac)
    steps: list[tuple[str, object]] = []
    bases = []
    for p, n in fac:
        counts = base_class_counts(n)
        bases.append(counts)
        steps.append(("base", (p, n, decompose_exponent(n), counts)))
    acc = bases[0] if bases else IDENTITY
    for i in range(1, len(bases)):
        acc = merge_class_counts(acc, bases[i])
        steps.append(("merge", (fac.primes[: i + 1], acc)))
    return steps


def divisor_count(fac: FactorizationLike) -> int:
    d = 1
    for _, e in as_factorization(fac):
        d *= e + 1
    return d


def rectangle_count(fac: FactorizationLike) -> int:
    """Number of integer-side rectangles of area N.

    Perfect squares have an odd number of divisors and one square rectangle.
    """
    fac = as_factorization(fac)
    d = divisor_count(fac)
    if all(e % 2 == 0 for e in fac.exponents):
        return (d + 1) // 2
    return d // 2


def _exact(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"closed form produced non-integer {x}")
    return x.numerator


def cuboid_count_prime_power(n: int) -> int:
    """O(p**n) in closed form; n = 0 gives O(1) = 1."""
    if n < 0:
        raise ValueError(f"exponent must be >= 0, got {n}")
    const = {0: 12, 1: 5, 5: 5, 2: 8, 4: 8, 3: 9}[n % 6]
    return _exact(Fraction(n * n + 6 * n + const, 12))


def _w(n: int, m: int) -> Fraction:
    return Fraction(
        2 * n * n + 2 * m * m + 12 * n * m + 3 * n * n * m + 3 * n * m * m + n * n * m * m,
        24,
    )


def cuboid_count_two_prime_powers(n: int, m: int) -> int:
    """O(p**n * q**m) for distinct primes p, q in closed form.

    ``m == 0`` (or ``n == 0``) reduces to :func:`cuboid_count_prime_power`.
    """
    if n < 0 or m < 0:
        raise ValueError(f"exponents must be >= 0, got ({n}, {m})")
    if m == 0:
        return cuboid_count_prime_power(n)
    if n == 0:
        return cuboid_count_prime_power(m)

    a, b = n % 6, m % 6
    odd_ab = Fraction((n + 1) * (m + 1) * (n * m + 2 * n + 2 * m + 7), 24)
    odd_a = Fraction((n + 1) * (m + 2) * (n * m + n + 2 * m + 5), 24)
    odd_b = Fraction((n + 2) * (m + 1) * (n * m + 2 * n + m + 5), 24)
    even_ab = Fraction((n + 2) * (m + 2) * (n * m + n + m + 4), 24)

    if a == 0:
        if b == 0:
            value = Fraction(24 + 12 * n + 12 * m, 24) + _w(n, m)
        elif b in (1, 5):
            value = odd_b
        elif b in (2, 4):
            value = even_ab
        else:
            value = Fraction(18 + 9 * n + 12 * m, 24) + _w(n, m)
    elif a in (1, 5):
        value = odd_a if b % 2 == 0 else odd_ab
    elif a in (2, 4):
        value = even_ab if b % 2 == 0 else odd_b
    else:
        if b == 0:
            value = Fraction(18 + 12 * n + 9 * m, 24) + _w(n, m)
        elif b in (1, 5):
            value = odd_ab
        elif b in (2, 4):
            value = odd_a
        else:
            value = Fraction(15 + 9 * n + 9 * m, 24) + _w(n, m)
    return _exact(value)


def cuboid_count_squarefree(k: int) -> int:
    """O(N) for N a product of k distinct primes: (3**(k-1) + 1) / 2."""
    if k < 1:
        raise ValueError(f"need at least one prime, got k={k}")
    return (3 ** (k - 1) + 1) // 2


def product_set_cardinality(a: SymmetryClass, b: SymmetryClass) -> int:
    """Distinct cuboids obtained by pairing the coordinates of two triples.

    Depends only on the symmetry classes of the two triples.
    """
    if SymmetryClass.ALL_EQUAL in (a, b):
        return 1
    if a is b is SymmetryClass.ALL_DISTINCT:
        return 6
    if a is b is SymmetryClass.TWO_EQUAL:
        return 2
    return 3

