"""Command-line interface: ``cuboidal {count,rect,verify,table,batch,list}``."""

from __future__ import annotations

import argparse
import re
import sys
from typing import Sequence

from . import batch as batch_mod
from . import oracle
from .counting import (
    class_counts,
    cuboid_count,
    cuboid_count_two_prime_powers,
    fold_trace,
    rectangle_count,
)
from .factorize import Factorization, factor

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

_TERM = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


class ConsistencyError(RuntimeError):
    """An internal cross-check disagreed; indicates a bug, not bad input."""


def parse_factored(text: str) -> Factorization:
    """Parse ``"p1^e1*p2^e2*..."``; a bare prime means exponent 1, ``"1"`` is empty.

    >>> str(parse_factored("2^6*3^7*5^6"))
    '2^6*3^7*5^6'
    """
    if text.strip() == "1":
        return Factorization()
    pairs = []
    for term in text.split("*"):
        m = _TERM.match(term)
        if not m:
            raise ValueError(f"cannot parse factor {term.strip()!r} in {text!r}")
        p, e = int(m.group(1)), int(m.group(2) or 1)
        if e < 1:
            raise ValueError(f"exponent of {p} must be >= 1")
        pairs.append((p, e))
    return Factorization.from_pairs(pairs)


def parse_target(text: str) -> Factorization:
    text = text.strip()
    if text.isdigit():
        n = int(text)
        if n < 1:
            raise ValueError("target must be a positive integer")
        return factor(n)
    return parse_factored(text)


def _target(args: argparse.Namespace) -> Factorization:
    if (args.target is None) == (args.factored is None):
        raise ValueError("give exactly one of TARGET or --factored EXPR")
    if args.factored is not None:
        return parse_factored(args.factored)
    return parse_target(args.target)


def explain_lines(fac: Factorization) -> list[str]:
    lines = [f"N = {fac}"]
    for kind, payload in fold_trace(fac):
        if kind == "base":
            p, n, (s, alpha), c = payload
            lines.append(f"p={p} n={n} s={s} alpha={alpha} f={c.f} g={c.g} h={c.h}")
        else:
            primes, c = payload
            lines.append(
                f"merge k={len(primes)} [{','.join(map(str, primes))}] f={c.f} g={c.g} h={c.h}"
            )
    total = class_counts(fac)
    lines.append(f"O(N) = {total.f} + {total.g} + {total.h} = {total.total}")
    return lines


def cmd_count(args: argparse.Namespace) -> int:
    fac = _target(args)
    if args.explain:
        for line in explain_lines(fac):
            print(line)
    print(cuboid_count(fac))
    return EXIT_OK


def cmd_rect(args: argparse.Namespace) -> int:
    print(rectangle_count(_target(args)))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max < 1:
        raise ValueError("--max must be >= 1")
    passed = 0
    for n in range(1, args.max + 1):
        fac = factor(n)
        got_cuboid, got_rect = cuboid_count(fac), rectangle_count(fac)
        want_cuboid = len(oracle.enumerate_triples(n))
        want_rect = len(oracle.enumerate_rectangles(n))
        if got_cuboid == want_cuboid and got_rect == want_rect:
            passed += 1
        else:
            print(
                f"MISMATCH n={n} cuboid={got_cuboid} oracle={want_cuboid} "
                f"rect={got_rect} oracle={want_rect}"
            )
    ok = passed == args.max
    print(f"{'OK' if ok else 'FAIL'} {passed}/{args.max}")
    return EXIT_OK if ok else EXIT_FAILURE


def theorem_table(n_max: int, m_max: int) -> list[list[int]]:
    """Closed-form O(p^n q^m) grid, each cell checked against the fold."""
    grid = []
    for n in range(1, n_max + 1):
        row = []
        for m in range(1, m_max + 1):
            closed = cuboid_count_two_prime_powers(n, m)
            folded = cuboid_count(Factorization(((2, n), (3, m))))
            if closed != folded:
                raise ConsistencyError(f"cell ({n},{m}): closed form {closed} != recursion {folded}")
            row.append(closed)
        grid.append(row)
    return grid


def cmd_table(args: argparse.Namespace) -> int:
    if args.n_max < 1 or args.m_max < 1:
        raise ValueError("--n-max and --m-max must be >= 1")
    grid = theorem_table(args.n_max, args.m_max)
    width = max(len(str(grid[-1][-1])), len(str(args.n_max)), 3)
    print("n\\m".rjust(width) + "".join(f" {m:>{width}}" for m in range(1, args.m_max + 1)))
    for n, row in enumerate(grid, start=1):
        print(f"{n:>{width}}" + "".join(f" {v:>{width}}" for v in row))
    return EXIT_OK


def cmd_batch(args: argparse.Namespace) -> int:
    records = batch_mod.batch_counts(args.lo, args.hi)
    if args.output in (None, "-"):
        batch_mod.write_records(records, sys.stdout, args.format, args.column)
    else:
        with open(args.output, "w", encoding="ascii", newline="") as fh:
            batch_mod.write_records(records, fh, args.format, args.column)
    return EXIT_OK


def cmd_list(args: argparse.Namespace) -> int:
    if args.rectangles:
        for a, b in oracle.enumerate_rectangles(args.n):
            print(a, b)
    else:
        for a, b, c in oracle.enumerate_triples(args.n):
            print(a, b, c)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuboidal",
        description="Count integer-edge cuboids O(N) and rectangles R(N) of volume/area N.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_target(p: argparse.ArgumentParser) -> None:
        p.add_argument("target", nargs="?", help="integer N or factored form like 2^6*3^7")
        p.add_argument("--factored", metavar="EXPR", help="factored form p1^e1*p2^e2*...")

    p = sub.add_parser("count", help="print O(N)")
    add_target(p)
    p.add_argument("--explain", action="store_true", help="print the per-prime fold trace")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("rect", help="print R(N)")
    add_target(p)
    p.set_defaults(func=cmd_rect)

    p = sub.add_parser("verify", help="check formulas against brute force for N <= MAX")
    p.add_argument("--max", type=int, default=10000)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="grid of O(p^n q^m), cross-checked")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--m-max", type=int, default=6)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("batch", help="export (n, d, rect, cuboid) for lo..hi")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("--format", choices=batch_mod.FORMATS, default="bfile")
    p.add_argument("--column", choices=batch_mod.COLUMNS, default="cuboid")
    p.add_argument("--output", "-o", help="output file (default stdout)")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("list", help="list the cuboids (or rectangles) of N by brute force")
    p.add_argument("n", type=int)
    p.add_argument("--rectangles", action="store_true")
    p.set_defaults(func=cmd_list)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"consistency error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except batch_mod.ResourceLimitError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
