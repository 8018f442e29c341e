"""Bulk factor-base scan: first-degree prime ideals of Z[alpha], Z[beta]
and Z[gamma] for every prime up to a bound.

Primes come from a segmented sieve; per-prime work is fanned out to a
process pool in fixed-size chunks and collected back in order of ``p``, so
the output does not depend on the number of workers.
"""

from __future__ import annotations

import csv
import io
import json
import math
import multiprocessing
from collections.abc import Iterable, Iterator
from typing import Optional, TextIO

import numpy as np

from .divisibility import is_exceptional
from .modular import quartic_roots, sqrt_mod

MAX_PMAX = 1 << 40
SEGMENT = 1 << 20
CHUNK = 4096
CSV_FIELDS = ("p", "qa", "qb", "bi", "divides", "exceptional")


def _base_primes(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for d in range(2, math.isqrt(limit) + 1):
        if flags[d]:
            flags[d * d :: d] = False
    return np.flatnonzero(flags)


def primes_up_to(limit: int, segment: int = SEGMENT) -> Iterator[np.ndarray]:
    """Yield the primes ``<= limit`` in increasing order, one array per segment."""
    if limit < 2:
        return
    base = _base_primes(math.isqrt(limit))
    low = 2
    while low <= limit:
        high = min(low + segment, limit + 1)
        mask = np.ones(high - low, dtype=bool)
        for q in base:
            q = int(q)
            if q * q >= high:
                break
            start = max(q * q, -(-low // q) * q)
            mask[start - low :: q] = False
        yield np.flatnonzero(mask) + low
        low = high


def scan_row(a: int, b: int, p: int, n: Optional[int] = None, m: Optional[int] = None) -> dict:
    """One scan record for the prime ``p``."""
    bi = []
    for t in quartic_roots(a, b, p):
        if n is None:
            bi.append({"t": t, "divides": None, "exceptional": None})
        else:
            bi.append(
                {
                    "t": t,
                    "divides": (n + m * t) % p == 0,
                    "exceptional": is_exceptional(p, n, t),
                }
            )
    return {"p": p, "qa": list(sqrt_mod(a, p)), "qb": list(sqrt_mod(b, p)), "bi": bi}


def _scan_chunk(task) -> list[dict]:
    a, b, n, m, primes = task
    return [scan_row(a, b, p, n, m) for p in primes]


def _chunks(a, b, n, m, pmax) -> Iterator[tuple]:
    for seg in primes_up_to(pmax):
        seg = seg.tolist()
        for i in range(0, len(seg), CHUNK):
            yield a, b, n, m, seg[i : i + CHUNK]


def scan(
    a: int,
    b: int,
    pmax: int,
    n: Optional[int] = None,
    m: Optional[int] = None,
    jobs: int = 1,
) -> Iterator[dict]:
    """Yield scan records for all primes ``p <= pmax`` in increasing order."""
    if pmax > MAX_PMAX:
        raise ValueError(f"pmax must not exceed 2**40, got {pmax}")
    tasks = _chunks(a, b, n, m, pmax)
    if jobs <= 1:
        for task in tasks:
            yield from _scan_chunk(task)
        return
    with multiprocessing.get_context().Pool(jobs) as pool:
        for rows in pool.imap(_scan_chunk, tasks):
            yield from rows


def _bool_text(v: Optional[bool]) -> str:
    return "" if v is None else ("true" if v else "false")


def _join(values: Iterable) -> str:
    return ";".join(str(v) for v in values)


def to_csv_record(row: dict) -> list[str]:
    bi = row["bi"]
    flagged = bool(bi) and bi[0]["divides"] is not None
    return [
        str(row["p"]),
        _join(row["qa"]),
        _join(row["qb"]),
        _join(e["t"] for e in bi),
        _join(_bool_text(e["divides"]) for e in bi) if flagged else "",
        _join(_bool_text(e["exceptional"]) for e in bi) if flagged else "",
    ]


def write_rows(rows: Iterable[dict], out: TextIO, fmt: str = "jsonl") -> None:
    """Serialize scan records as JSON lines, a JSON array or CSV."""
    if fmt == "jsonl":
        for row in rows:
            out.write(json.dumps(row, separators=(",", ":")) + "\n")
    elif fmt == "json":
        out.write("[")
        for i, row in enumerate(rows):
            out.write(("\n" if i == 0 else ",\n") + json.dumps(row, separators=(",", ":")))
        out.write("\n]\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for row in rows:
            writer.writerow(to_csv_record(row))
    else:
        raise ValueError(f"unknown format {fmt!r}")


def _split_ints(text: str) -> list[int]:
    return [int(v) for v in text.split(";")] if text else []


def _split_flags(text: str, count: int) -> list[Optional[bool]]:
    if not text:
        return [None] * count
    return [v == "true" for v in text.split(";")]


def read_csv_rows(text: str) -> list[dict]:
    """Parse CSV scan output back into records equal to the JSON form."""
    rows = []
    for rec in csv.DictReader(io.StringIO(text)):
        ts = _split_ints(rec["bi"])
        divides = _split_flags(rec["divides"], len(ts))
        exceptional = _split_flags(rec["exceptional"], len(ts))
        rows.append(
            {
                "p": int(rec["p"]),
                "qa": _split_ints(rec["qa"]),
                "qb": _split_ints(rec["qb"]),
                "bi": [
                    {"t": t, "divides": d, "exceptional": e}
                    for t, d, e in zip(ts, divides, exceptional)
                ],
            }
        )
    return rows


def read_jsonl_rows(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines() if line.strip()]
