"""Exit criteria. Each test records one PASS/FAIL line in the terminal summary."""

import math
import random
import time
import timeit
from pathlib import Path

import numpy as np
import sympy

from cuboidal import cli
from cuboidal.batch import batch_counts, export
from cuboidal.counting import (
    TripleClassCounts,
    base_class_counts,
    cuboid_count,
    cuboid_count_prime_power,
    cuboid_count_squarefree,
    cuboid_count_two_prime_powers,
    divisor_count,
    merge_class_counts,
    rectangle_count,
)
from cuboidal.factorize import Factorization, factor
from cuboidal.oracle import classify_triples, enumerate_rectangles, enumerate_triples

FIXTURES = Path(__file__).parent / "fixtures"
FIRST_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)


def expansion(a, b):
    """O(N) for N = N1*N2 written out class by class (pairing 6/3/2/1 cuboids)."""
    f, g, h = a
    f2, g2, h2 = b
    return 6 * h * h2 + 3 * (g * h2 + h * g2) + 2 * g * g2 + f * f2 + f * (g2 + h2) + f2 * (g + h)


def test_1_golden_worked_example(criterion, capsys):
    fac = Factorization(((2, 6), (3, 7), (5, 6)))
    value = cuboid_count(fac)
    best = min(timeit.repeat(lambda: cuboid_count(fac), number=100, repeat=5)) / 100

    assert cli.main(["count", "--factored", "2^6*3^7*5^6", "--explain"]) == 0
    lines = capsys.readouterr().out.splitlines()
    trace_ok = (
        "merge k=2 [2,3] f=0 g=16 h=160" in lines
        and "merge k=3 [2,3,5] f=0 g=64 h=4672" in lines
        and lines[-1] == "4736"
    )
    ok = value == 4736 and factor(2187000000) == fac and trace_ok and best < 1e-3
    criterion(1, "golden value O(2^6*3^7*5^6) = 4736 with trace", ok, f"{best * 1e6:.1f} us per call")


def test_2_oracle_sweep(criterion):
    start = time.perf_counter()
    bad_cuboid = [n for n in range(1, 10**4 + 1) if cuboid_count(factor(n)) != len(enumerate_triples(n))]
    bad_rect = [
        n for n in range(1, 10**5 + 1) if rectangle_count(factor(n)) != len(enumerate_rectangles(n))
    ]
    elapsed = time.perf_counter() - start
    ok = not bad_cuboid and not bad_rect and elapsed < 60
    criterion(
        2,
        "oracle sweep: cuboids N<=1e4, rectangles N<=1e5",
        ok,
        f"{len(bad_cuboid)}+{len(bad_rect)} mismatches, {elapsed:.1f} s",
    )


def test_3_closed_forms(criterion):
    bad = []
    for n in range(1, 21):
        for m in range(1, 21):
            if cuboid_count_two_prime_powers(n, m) != cuboid_count(Factorization(((2, n), (3, m)))):
                bad.append(("pq", n, m))
    for n in range(0, 61):
        if cuboid_count_prime_power(n) != cuboid_count(Factorization(((2, n),) if n else ())):
            bad.append(("p^n", n))
    for k in range(1, 11):
        if cuboid_count_squarefree(k) != cuboid_count(Factorization(tuple((p, 1) for p in FIRST_PRIMES[:k]))):
            bad.append(("squarefree", k))
    criterion(3, "closed forms equal recursion (400 + 61 + 10 cases)", not bad, f"{len(bad)} mismatches")


def test_4_base_table_totals(criterion):
    bad = []
    for n in range(0, 201):
        brute = sum(1 for i in range(n + 1) for j in range(i, n + 1) for k in range(j, n + 1) if i + j + k == n)
        if base_class_counts(n).total != brute:
            bad.append(n)
    criterion(4, "base table totals for n in 0..200", not bad, f"{len(bad)} mismatches")


def test_5_merge_semantics(criterion):
    rng = random.Random(5)
    pairs = set()
    while len(pairs) < 500:
        n1 = rng.randint(1, 10**4)
        n2 = rng.randint(1, 10**4 // n1)
        if math.gcd(n1, n2) == 1:
            pairs.add((n1, n2))
    bad = [
        (n1, n2)
        for n1, n2 in sorted(pairs)
        if merge_class_counts(classify_triples(n1), classify_triples(n2)) != classify_triples(n1 * n2)
    ]
    criterion(5, "merge of oracle classes, 500 coprime pairs", not bad, f"{len(bad)} mismatches")


def test_6_two_prime_sum_identity(criterion):
    # Symbolic: both sides are polynomials, so equality holds for every value.
    syms = sympy.symbols("f g h f2 g2 h2")
    a, b = TripleClassCounts(*syms[:3]), TripleClassCounts(*syms[3:])
    symbolic_ok = sympy.expand(sum(merge_class_counts(a, b)) - expansion(a, b)) == 0

    # Numeric: every a with components in 0..50 against 300 random b.
    grid = np.array(np.meshgrid(*[np.arange(51)] * 3, indexing="ij")).reshape(3, -1).astype(np.int64)
    a_grid = TripleClassCounts(*grid)
    rng = np.random.default_rng(6)
    numeric_ok = True
    for b in rng.integers(0, 51, size=(300, 3)):
        b = TripleClassCounts(*map(int, b))
        if not np.array_equal(sum(merge_class_counts(a_grid, b)), expansion(a_grid, b)):
            numeric_ok = False
    criterion(6, "two-prime sum identity, components <= 50", symbolic_ok and numeric_ok)


def test_7_rectangle_parity_law(criterion):
    bad = []
    for n in range(1, 10**5 + 1):
        fac = factor(n)
        d = divisor_count(fac)
        if rectangle_count(fac) != (d + 1) // 2 or (d % 2 == 1) != (math.isqrt(n) ** 2 == n):
            bad.append(n)
    criterion(7, "R(N) = ceil(d(N)/2), d odd iff square, N <= 1e5", not bad, f"{len(bad)} mismatches")


def test_8_batch_agreement_and_formats(criterion):
    bad = []
    for rec in batch_counts(1, 10**5):
        fac = factor(rec.n)
        if (rec.d, rec.rect, rec.cuboid) != (divisor_count(fac), rectangle_count(fac), cuboid_count(fac)):
            bad.append(rec.n)
    records = list(batch_counts(1, 1000))
    bfile_ok = export(records, "bfile", "cuboid") == (FIXTURES / "cuboid_1_1000.b").read_bytes()
    csv_ok = export(records, "csv") == (FIXTURES / "counts_1_1000.csv").read_bytes()

    start = time.perf_counter()
    last = None
    for last in batch_counts(1, 10**6):
        pass
    bench = time.perf_counter() - start
    ok = not bad and bfile_ok and csv_ok and last.n == 10**6
    criterion(
        8,
        "batch/single agreement to 1e5, b-file and csv byte-match fixtures",
        ok,
        f"{len(bad)} mismatches; 1..1e6 batch took {bench:.1f} s (target < 60 s)",
    )
