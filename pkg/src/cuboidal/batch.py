"""Range computation of (n, d(n), R(n), O(n)) records and their export."""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import asdict, dataclass
from typing import IO, Iterable, Iterator

from .counting import cuboid_count_from_exponents
from .factorize import _spf_pairs, factor, spf_sieve

__all__ = [
    "CountRecord",
    "ResourceLimitError",
    "DEFAULT_SIEVE_LIMIT",
    "DIRECT_RANGE_LIMIT",
    "sieve_limit",
    "batch_counts",
    "record_for",
    "write_records",
    "export",
    "read_csv",
    "FORMATS",
    "COLUMNS",
]

# 4 bytes per sieve entry: 10**8 costs about 400 MB.
DEFAULT_SIEVE_LIMIT = 10**8
# Ranges above the sieve limit are factored number by number, up to this size.
DIRECT_RANGE_LIMIT = 10**4

FORMATS = ("bfile", "csv", "json")
COLUMNS = ("cuboid", "rect", "d")
CSV_HEADER = ("n", "d", "rect", "cuboid")


class ResourceLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class CountRecord:
    n: int
    d: int
    rect: int
    cuboid: int


def sieve_limit() -> int:
    """Largest n the batch sieve may cover (env ``CUBOIDAL_SIEVE_LIMIT``)."""
    raw = os.environ.get("CUBOIDAL_SIEVE_LIMIT")
    if raw is None:
        return DEFAULT_SIEVE_LIMIT
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"CUBOIDAL_SIEVE_LIMIT must be an integer, got {raw!r}") from None
    if value < 2:
        raise ValueError(f"CUBOIDAL_SIEVE_LIMIT must be >= 2, got {value}")
    return value


def _record(n: int, exponents: Iterable[int]) -> CountRecord:
    exponents = list(exponents)
    d = 1
    for e in exponents:
        d *= e + 1
    return CountRecord(n, d, (d + 1) // 2, cuboid_count_from_exponents(exponents))


def record_for(n: int) -> CountRecord:
    return _record(n, factor(n).exponents)


def batch_counts(lo: int, hi: int, limit: int | None = None) -> Iterator[CountRecord]:
    """Yield one CountRecord per n in ``lo..hi``, ascending.

    Uses an SPF sieve when ``hi`` is within ``limit`` (default: :func:`sieve_limit`).
    Short ranges beyond it fall back to direct factoring; anything else
    raises :class:`ResourceLimitError`.
    """
    lo, hi = int(lo), int(hi)
    if lo < 1:
        raise ValueError(f"lo must be >= 1, got {lo}")
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    limit = sieve_limit() if limit is None else limit

    if hi <= limit:
        return _sieved(lo, hi)
    if hi - lo + 1 <= DIRECT_RANGE_LIMIT:
        return (record_for(n) for n in range(lo, hi + 1))
    raise ResourceLimitError(
        f"range {lo}..{hi} exceeds the sieve limit {limit} "
        f"(set CUBOIDAL_SIEVE_LIMIT to raise it)"
    )


def _sieved(lo: int, hi: int) -> Iterator[CountRecord]:
    if hi < 2:
        yield CountRecord(1, 1, 1, 1)
        return
    # memoryview indexing yields plain ints without copying the table
    spf = memoryview(spf_sieve(hi))
    for n in range(lo, hi + 1):
        yield _record(n, (e for _, e in _spf_pairs(n, spf)))


def write_records(
    records: Iterable[CountRecord], stream: IO[str], fmt: str = "bfile", column: str = "cuboid"
) -> None:
    """Write records in b-file, CSV or JSON form.

    b-file lines are ``"n value"`` for the chosen column; CSV and JSON carry
    all four fields and ignore ``column``.
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    if column not in COLUMNS:
        raise ValueError(f"unknown column {column!r}; expected one of {', '.join(COLUMNS)}")

    if fmt == "bfile":
        for r in records:
            stream.write(f"{r.n} {getattr(r, column)}\n")
    elif fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in records:
            writer.writerow((r.n, r.d, r.rect, r.cuboid))
    else:
        stream.write("[")
        for i, r in enumerate(records):
            stream.write(("," if i else "") + json.dumps(asdict(r)))
        stream.write("]\n")


def export(records: Iterable[CountRecord], fmt: str = "bfile", column: str = "cuboid") -> bytes:
    buf = io.StringIO()
    write_records(records, buf, fmt, column)
    return buf.getvalue().encode("ascii")


def read_csv(text: str) -> list[CountRecord]:
    rows = csv.DictReader(io.StringIO(text))
    if tuple(rows.fieldnames or ()) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {rows.fieldnames}")
    return [CountRecord(**{k: int(v) for k, v in row.items()}) for row in rows]
