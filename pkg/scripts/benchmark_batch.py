"""Time the sieve-backed batch over 1..HI (default 10**6).

    python3 scripts/benchmark_batch.py [HI]
"""

import sys
import time

from cuboidal.batch import batch_counts
from cuboidal.factorize import spf_sieve


def main(hi: int) -> None:
    t0 = time.perf_counter()
    spf_sieve(hi)
    t1 = time.perf_counter()
    total = sum(r.cuboid for r in batch_counts(1, hi))
    t2 = time.perf_counter()
    print(f"sieve to {hi}: {t1 - t0:.2f} s")
    print(f"batch 1..{hi}: {t2 - t1:.2f} s  (sum of O(n) = {total})")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 10**6)
