"""Prime factorization: deterministic primality, Pollard-Brent rho, SPF sieve."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Factorization",
    "is_prime",
    "factor",
    "spf_sieve",
    "factor_with_sieve",
]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

# Miller-Rabin with the first 13 primes as bases has no strong pseudoprimes
# below this bound (Sorenson & Webster), which covers all 64-bit integers.
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981

_TRIAL_BOUND = 1000
_TRIAL_PRIMES = tuple(
    p for p in range(2, _TRIAL_BOUND) if all(p % q for q in range(2, math.isqrt(p) + 1))
)


@dataclass(frozen=True)
class Factorization:
    """Canonical factorization ``((p1, e1), (p2, e2), ...)`` with p1 < p2 < ...

    The empty factorization represents 1. Construction validates every
    invariant, including primality of each listed prime.
    """

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        pairs = tuple((int(p), int(e)) for p, e in self.factors)
        prev = 1
        for p, e in pairs:
            if p <= prev:
                raise ValueError(f"primes must be strictly increasing, got {p} after {prev}")
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {e}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p
        object.__setattr__(self, "factors", pairs)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> "Factorization":
        """Build from (prime, exponent) pairs in any order; duplicates are rejected."""
        items = sorted((int(p), int(e)) for p, e in pairs)
        for (p, _), (q, _) in zip(items, items[1:]):
            if p == q:
                raise ValueError(f"duplicate prime {p}")
        return cls(tuple(items))

    @classmethod
    def _trusted(cls, pairs: tuple[tuple[int, int], ...]) -> "Factorization":
        # Skips validation; only for pairs produced by factor()/the sieve.
        obj = object.__new__(cls)
        object.__setattr__(obj, "factors", pairs)
        return obj

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.factors)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def _strong_probable_prime(n: int, a: int) -> bool:
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Return True iff ``n`` is prime.

    Deterministic for every ``n`` below 3.3e24 (so for all 64-bit inputs).
    Above that bound the same 13 bases plus a few extra ones are used, which
    makes the answer a strong probable-prime test.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 43 * 43:
        return True
    bases: Iterable[int] = _SMALL_PRIMES
    if n >= _MR_DETERMINISTIC_BOUND:
        bases = _SMALL_PRIMES + (43, 47, 53, 59, 61, 67, 71)
    return all(_strong_probable_prime(n, a) for a in bases)


def _brent(n: int, rng: random.Random) -> int:
    """Return a non-trivial factor of the odd composite ``n``."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
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
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor(n: int) -> Factorization:
    """Factor a positive integer.

    >>> factor(12)
    Factorization(factors=((2, 2), (3, 1)))
    >>> factor(1)
    Factorization(factors=())
    """
    n = int(n)
    if n == 0:
        raise ValueError("zero has no factorization")
    if n < 0:
        raise ValueError(f"cannot factor negative integer {n}")

    counts: dict[int, int] = {}
    for p in _TRIAL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    if n > 1:
        # Fixed seed: the result never depends on it, only the running time.
        rng = random.Random(n)
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if is_prime(m):
                counts[m] = counts.get(m, 0) + 1
                continue
            r = math.isqrt(m)
            if r * r == m:
                stack += [r, r]
                continue
            d = _brent(m, rng)
            stack += [d, m // d]
    return Factorization._trusted(tuple(sorted(counts.items())))


def spf_sieve(limit: int) -> np.ndarray:
    """Smallest-prime-factor table for ``0..limit``.

    ``table[n]`` is the least prime dividing ``n`` for ``n >= 2``; entries 0
    and 1 are 0. The array is returned read-only. It uses 4 bytes per entry,
    so a limit of 10**8 costs about 400 MB; limits must stay below 2**31.
    """
    limit = int(limit)
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    if limit >= 2**31:
        raise ValueError(f"sieve limit {limit} does not fit a 32-bit table")
    spf = np.zeros(limit + 1, dtype=np.int32)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            seg = spf[p * p :: p]
            seg[seg == 0] = p
    idx = np.flatnonzero(spf == 0)
    spf[idx] = idx
    spf[:2] = 0
    spf.flags.writeable = False
    return spf


def _spf_pairs(n: int, spf: Sequence[int]) -> tuple[tuple[int, int], ...]:
    pairs = []
    while n > 1:
        p = spf[n]
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        pairs.append((p, e))
    return tuple(pairs)


def factor_with_sieve(n: int, spf: Sequence[int]) -> Factorization:
    """Factor ``n`` by repeated smallest-prime-factor division."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    if n >= len(spf):
        raise ValueError(f"{n} is outside the sieve range 0..{len(spf) - 1}")
    return Factorization._trusted(tuple((int(p), e) for p, e in _spf_pairs(int(n), spf)))
