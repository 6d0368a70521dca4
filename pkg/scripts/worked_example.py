"""Fold trace for N = 2^6 * 3^7 * 5^6, checked against brute-force enumeration."""

from cuboidal.cli import explain_lines
from cuboidal.factorize import factor
from cuboidal.oracle import classify_triples

N = 2187000000

if __name__ == "__main__":
    fac = factor(N)
    print("\n".join(explain_lines(fac)))
    f, g, h = classify_triples(N)
    print(f"brute force: f={f} g={g} h={h} total={f + g + h}")
