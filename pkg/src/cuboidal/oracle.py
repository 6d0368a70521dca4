"""Brute-force enumeration of rectangles and cuboids of a given area/volume.

Nothing here uses factorizations or the counting formulas: it is a plain
divisor scan, kept independent so it can serve as ground truth.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .counting import TripleClassCounts

# Practical bound: the scan is O(N**(1/2)) per candidate first edge.
ORACLE_LIMIT = 10**12


class Triple(NamedTuple):
    a: int
    b: int
    c: int


class Pair(NamedTuple):
    a: int
    b: int


def _check(n: int) -> int:
    n = int(n)
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    if n > ORACLE_LIMIT:
        raise ValueError(f"{n} exceeds the oracle limit {ORACLE_LIMIT}")
    return n


def _icbrt(n: int) -> int:
    """Largest integer r with r**3 <= n."""
    r = int(round(n ** (1 / 3)))
    while r**3 > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r


def enumerate_triples(n: int) -> list[Triple]:
    """All a <= b <= c with a*b*c == n, in lexicographic order.

    >>> enumerate_triples(8)
    [Triple(a=1, b=1, c=8), Triple(a=1, b=2, c=4), Triple(a=2, b=2, c=2)]
    """
    n = _check(n)
    out = []
    for a in range(1, _icbrt(n) + 1):
        if n % a:
            continue
        m = n // a
        for b in range(a, math.isqrt(m) + 1):
            if m % b == 0:
                out.append(Triple(a, b, m // b))
    return out


def classify_triples(n: int) -> TripleClassCounts:
    f = g = h = 0
    for a, b, c in enumerate_triples(n):
        if a == c:
            f += 1
        elif a == b or b == c:
            g += 1
        else:
            h += 1
    return TripleClassCounts(f, g, h)


def enumerate_rectangles(n: int) -> list[Pair]:
    """All a <= b with a*b == n, ordered by a."""
    n = _check(n)
    return [Pair(a, n // a) for a in range(1, math.isqrt(n) + 1) if n % a == 0]
