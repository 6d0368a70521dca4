"""Regenerate tests/fixtures from brute-force enumeration only.

The fixtures are compared byte for byte against `cuboidal batch` output, so
they are built without touching the factorization or counting code.

    python3 scripts/make_fixtures.py [HI]
"""

import sys
from pathlib import Path

from cuboidal.oracle import enumerate_rectangles, enumerate_triples

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def main(hi: int = 1000) -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    rows = []
    for n in range(1, hi + 1):
        d = sum(1 for k in range(1, n + 1) if n % k == 0)
        rows.append((n, d, len(enumerate_rectangles(n)), len(enumerate_triples(n))))

    bfile = "".join(f"{n} {c}\n" for n, _, _, c in rows)
    csv = "n,d,rect,cuboid\n" + "".join(f"{n},{d},{r},{c}\n" for n, d, r, c in rows)
    (FIXTURES / f"cuboid_1_{hi}.b").write_text(bfile, encoding="ascii")
    (FIXTURES / f"counts_1_{hi}.csv").write_text(csv, encoding="ascii")
    print(f"wrote {len(rows)} rows to {FIXTURES}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 1000)
