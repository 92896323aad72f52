"""Exhaustive search for the most asymmetric words of each length.

``sd_max(n)`` scans all 2^n packed words in ascending order, skips any word
that is not the canonical representative of its reversal/complement orbit
(sd is constant on orbits, so the maximum is unaffected), and evaluates the
survivors with a vectorized batch version of the interval recurrences from
``deletions``.  Work is split into contiguous integer ranges, one per
worker; per-range results are merged in range order, so the outcome is
identical for any worker count.
"""

from __future__ import annotations

import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .bounds import lower_bound, upper_bound
from .errors import LengthBudgetExceeded
from .words import Word

# 2^28 words times an O(n^2) kernel is the practical desk-scale edge.
MAX_SEARCH_LENGTH = 28

_CHUNK = 1 << 15
_POOL_MIN_WORDS = 1 << 15

_REV8 = np.array(
    [int(f"{i:08b}"[::-1], 2) for i in range(256)], dtype=np.int64
)


def _reverse_words(arr: np.ndarray, n: int) -> np.ndarray:
    """Bitwise reversal of the low n bits of each packed word, n <= 28."""
    rev32 = (
        (_REV8[arr & 0xFF] << 24)
        | (_REV8[(arr >> 8) & 0xFF] << 16)
        | (_REV8[(arr >> 16) & 0xFF] << 8)
        | _REV8[(arr >> 24) & 0xFF]
    )
    return rev32 >> (32 - n)


def _canonical_mask(arr: np.ndarray, n: int) -> np.ndarray:
    mask = (1 << n) - 1
    rev = _reverse_words(arr, n)
    comp = arr ^ mask
    rev_comp = rev ^ mask
    return (arr <= rev) & (arr <= comp) & (arr <= rev_comp)


def sd_batch(words, n: int) -> np.ndarray:
    """Vectorized sd over same-length words given as packed integers.

    Runs the same interval recurrences as ``deletions.sd`` across the whole
    batch at once; one int8 cell per (i, j, word).
    """
    arr = np.ascontiguousarray(words, dtype=np.int64)
    if n == 0:
        return np.zeros(arr.shape, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    letters = ((arr[:, None] >> shifts[None, :]) & 1).astype(np.int8)
    count = arr.shape[0]
    pal = np.zeros((n, n, count), dtype=np.int8)
    anti = np.zeros((n, n, count), dtype=np.int8)
    for i in range(n):
        pal[i, i] = 1
    for gap in range(1, n):
        for i in range(n - gap):
            j = i + gap
            eq = letters[:, i] == letters[:, j]
            p_skip = np.maximum(pal[i + 1, j], pal[i, j - 1])
            a_skip = np.maximum(anti[i + 1, j], anti[i, j - 1])
            pal[i, j] = np.where(
                eq, np.maximum(p_skip, pal[i + 1, j - 1] + 2), p_skip
            )
            anti[i, j] = np.where(
                eq, a_skip, np.maximum(a_skip, anti[i + 1, j - 1] + 2)
            )
    longest = np.maximum(pal[0, n - 1], anti[0, n - 1]).astype(np.int64)
    return n - longest


def _scan_range(
    n: int,
    start: int,
    stop: int,
    limit: int,
    prune: bool,
    progress_interval: float | None = None,
) -> tuple[int, list[int], int]:
    """Best sd over packed words in [start, stop), with up to ``limit``
    achievers in ascending order and the number of words evaluated."""
    best = -1
    hits: list[int] = []
    scanned = 0
    last_report = time.monotonic()
    for lo in range(start, stop, _CHUNK):
        arr = np.arange(lo, min(lo + _CHUNK, stop), dtype=np.int64)
        if prune:
            arr = arr[_canonical_mask(arr, n)]
        if arr.size == 0:
            continue
        scanned += int(arr.size)
        values = sd_batch(arr, n)
        chunk_best = int(values.max())
        if chunk_best > best:
            best = chunk_best
            hits = []
        if chunk_best == best and len(hits) < limit:
            idx = np.flatnonzero(values == chunk_best)
            hits.extend(int(arr[i]) for i in idx[: limit - len(hits)])
        if progress_interval is not None:
            now = time.monotonic()
            if now - last_report >= progress_interval:
                print(
                    f"n={n}: scanned {scanned} words, current max {best}",
                    file=sys.stderr,
                )
                last_report = now
    return best, hits, scanned


@dataclass
class SearchConfig:
    """Knobs for the exhaustive scan; results never depend on them."""

    worker_count: int = field(default_factory=lambda: os.cpu_count() or 1)
    extremal_limit: int = 8
    progress_interval: float | None = None

    def __post_init__(self) -> None:
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")
        if self.extremal_limit < 0:
            raise ValueError("extremal_limit must be >= 0")


@dataclass(frozen=True)
class SdTableRow:
    """Exact maximum sd at length n with bounds and sample extremal words."""

    n: int
    sd: int
    lower: int
    upper: int
    extremal: tuple[Word, ...]
    words_scanned: int


class TableMismatch(NamedTuple):
    n: int
    computed: int
    expected: int


def _split_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    edges = [total * k // parts for k in range(parts + 1)]
    return [(a, b) for a, b in zip(edges, edges[1:]) if a < b]


def sd_max(
    n: int,
    config: SearchConfig | None = None,
    prune: bool = True,
    max_n: int = MAX_SEARCH_LENGTH,
) -> SdTableRow:
    """Exact maximum of sd over all 2^n words of length n.

    With ``prune`` (the default) only canonical orbit representatives are
    evaluated; ``prune=False`` scans every word and exists to demonstrate
    that the pruned maximum is the true one.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > max_n:
        raise LengthBudgetExceeded(f"n = {n} beyond the search guard {max_n}")
    config = config if config is not None else SearchConfig()

    total = 1 << n
    ranges = _split_ranges(total, config.worker_count)
    if config.worker_count == 1 or total < _POOL_MIN_WORDS:
        results = [
            _scan_range(
                n, a, b, config.extremal_limit, prune, config.progress_interval
            )
            for a, b in ranges
        ]
    else:
        with ProcessPoolExecutor(max_workers=config.worker_count) as pool:
            futures = [
                pool.submit(_scan_range, n, a, b, config.extremal_limit, prune)
                for a, b in ranges
            ]
            results = [f.result() for f in futures]

    best = max(r[0] for r in results)
    scanned = sum(r[2] for r in results)
    merged: list[int] = []
    for value, hits, _ in results:
        if value == best and len(merged) < config.extremal_limit:
            merged.extend(hits[: config.extremal_limit - len(merged)])

    if prune:
        extremal = tuple(Word(n, bits) for bits in merged)
    else:
        canon = {Word(n, bits).canonical() for bits in merged}
        extremal = tuple(sorted(canon, key=lambda w: w.bits))[
            : config.extremal_limit
        ]

    return SdTableRow(
        n=n,
        sd=best,
        lower=lower_bound(n) if n >= 2 else 0,
        upper=upper_bound(n),
        extremal=extremal,
        words_scanned=scanned,
    )


def compute_table(
    n_min: int,
    n_max: int,
    config: SearchConfig | None = None,
    prune: bool = True,
) -> list[SdTableRow]:
    """Rows of the exact maximum-sd table for n_min..n_max inclusive."""
    if n_min < 1 or n_min > n_max:
        raise ValueError(f"bad range {n_min}..{n_max}")
    if n_max > MAX_SEARCH_LENGTH:
        raise LengthBudgetExceeded(
            f"n = {n_max} beyond the search guard {MAX_SEARCH_LENGTH}"
        )
    return [sd_max(n, config, prune) for n in range(n_min, n_max + 1)]


# Independently recomputed reference values for n <= 20; the scan must
# reproduce them exactly.
KNOWN_MAX_SD = {
    1: 0,
    2: 0,
    3: 1,
    4: 1,
    5: 1,
    6: 2,
    7: 2,
    8: 2,
    9: 3,
    10: 4,
    11: 4,
    12: 4,
    13: 5,
    14: 5,
    15: 5,
    16: 6,
    17: 7,
    18: 7,
    19: 7,
    20: 8,
}


def known_values() -> dict[int, int]:
    """The reference table of maximum sd values for 1 <= n <= 20."""
    return dict(KNOWN_MAX_SD)


def compare_with_known(rows: list[SdTableRow]) -> list[TableMismatch]:
    """Mismatches between computed rows and the reference table.

    Rows outside the reference range are ignored; an empty list means
    every comparable row agrees.
    """
    out = []
    for row in rows:
        expected = KNOWN_MAX_SD.get(row.n)
        if expected is not None and row.sd != expected:
            out.append(TableMismatch(row.n, row.sd, expected))
    return out


CSV_HEADER = "n,sd,lower,upper,extremal"


def row_to_json(row: SdTableRow) -> str:
    return json.dumps(
        {
            "n": row.n,
            "sd": row.sd,
            "lower": row.lower,
            "upper": row.upper,
            "extremal": [str(w) for w in row.extremal],
        }
    )


def row_to_csv(row: SdTableRow) -> str:
    words = ";".join(str(w) for w in row.extremal)
    return f"{row.n},{row.sd},{row.lower},{row.upper},{words}"
