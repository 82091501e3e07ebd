"""b-symbol weights, supports and exhaustive distance scans.

A window starting at slot i covers (x_i, ..., x_{i+b-1}) cyclically; the
b-symbol weight is the number of windows that are not all zero. Shifts move
left, tau^s(x)[i] = x[i+s], which is the direction in which
tau(c(alpha, beta)) = c(alpha theta, beta eta).
"""

from __future__ import annotations

import functools
import logging
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from gf_tower import build_field
from kasami_code import KasamiCode
from kasami_errors import BOutOfRange, NonIntegerResult, ScanTooLarge
from scan_config import DEFAULT_MAX_SCAN_M

logger = logging.getLogger(__name__)

# wb_span materialises 2^b words of length n.
MAX_SPAN_CELLS = 1 << 26
# Rows of the codeword matrix handled per worker task.
SCAN_BLOCK_CELLS = 1 << 21

Histogram = Dict[int, int]


def check_b(b: int, n: int) -> None:
    if not 1 <= b <= n:
        raise BOutOfRange(f"b must be in 1..{n}, got {b}")


def cyclic_shift(x: np.ndarray, steps: int) -> np.ndarray:
    """tau^steps(x) with tau(x)[i] = x[i + 1 mod n]."""
    x = np.asarray(x)
    if x.size == 0:
        return x.copy()
    return np.roll(x, -(steps % x.shape[-1]), axis=-1)


def nonzero_windows(rows: np.ndarray, b: int) -> np.ndarray:
    """Boolean array: entry [..., i] is True when window i of that row has a 1."""
    rows = np.asarray(rows, dtype=np.uint8)
    n = rows.shape[-1]
    check_b(b, n)
    if b == 1:
        return rows != 0
    wrapped = np.concatenate((rows, rows[..., : b - 1]), axis=-1).astype(np.int32)
    acc = np.cumsum(wrapped, axis=-1)
    zero = np.zeros(acc.shape[:-1] + (1,), dtype=acc.dtype)
    acc = np.concatenate((zero, acc), axis=-1)
    sums = acc[..., b : b + n] - acc[..., :n]
    return sums > 0


def wb_brute_rows(rows: np.ndarray, b: int) -> np.ndarray:
    """b-symbol weight of every row of a bit matrix."""
    return np.count_nonzero(nonzero_windows(rows, b), axis=-1)


def wb_brute(x: np.ndarray, b: int) -> int:
    """Number of cyclic length-b windows of x holding at least one 1."""
    return int(wb_brute_rows(np.asarray(x)[None, :], b)[0])


def wb_span(x: np.ndarray, b: int) -> int:
    """Average Hamming weight over the span of x and its first b - 1 shifts.

    Sums w_1 over all 2^b combinations (with multiplicity) and divides by
    2^{b-1}.
    """
    x = np.asarray(x, dtype=np.uint8)
    n = x.shape[0]
    check_b(b, n)
    if (1 << b) * n > MAX_SPAN_CELLS:
        raise ScanTooLarge(f"span of 2^{b} words of length {n} is too large")
    words = np.zeros((1, n), dtype=np.uint8)
    for s in range(b):
        words = np.concatenate((words, words ^ cyclic_shift(x, s)))
    total = int(np.count_nonzero(words))
    q, r = divmod(total, 1 << (b - 1))
    if r:
        raise NonIntegerResult(f"span weight sum {total} is not divisible by 2^{b - 1}")
    return q


@dataclass(frozen=True)
class BSupport:
    """1-based window positions that are nonzero, and the rest."""

    n: int
    indices: FrozenSet[int]
    complement: FrozenSet[int]

    @property
    def size(self) -> int:
        return len(self.indices)

    def complement_mask(self) -> np.ndarray:
        mask = np.zeros(self.n, dtype=bool)
        mask[[i - 1 for i in self.complement]] = True
        return mask


def support_b(x: np.ndarray, b: int) -> BSupport:
    x = np.asarray(x, dtype=np.uint8)
    n = x.shape[0]
    hits = nonzero_windows(x[None, :], b)[0]
    positions = np.arange(1, n + 1)
    return BSupport(
        n=n,
        indices=frozenset(int(p) for p in positions[hits]),
        complement=frozenset(int(p) for p in positions[~hits]),
    )


@functools.lru_cache(maxsize=8)
def code_for(m: int, modulus: Optional[int] = None) -> KasamiCode:
    return KasamiCode(build_field(m, modulus))


def _scan_rows(
    code: KasamiCode, alpha_start: int, alpha_stop: int, bs: Tuple[int, ...]
) -> Dict[int, Histogram]:
    rows = code.codeword_block(alpha_start, alpha_stop)
    out: Dict[int, Histogram] = {}
    for b in bs:
        weights, counts = np.unique(wb_brute_rows(rows, b), return_counts=True)
        out[b] = {int(w): int(c) for w, c in zip(weights, counts)}
    return out


def _scan_block(
    m: int, modulus: int, alpha_start: int, alpha_stop: int, bs: Tuple[int, ...]
) -> Dict[int, Histogram]:
    return _scan_rows(code_for(m, modulus), alpha_start, alpha_stop, bs)


def alpha_blocks(code: KasamiCode) -> List[Tuple[int, int]]:
    per_alpha = code.ctx.q * code.length
    step = max(1, SCAN_BLOCK_CELLS // per_alpha)
    size = code.ctx.size
    return [(a, min(a + step, size)) for a in range(0, size, step)]


def check_scan_size(code: KasamiCode, max_scan_m: Optional[int]) -> None:
    cap = DEFAULT_MAX_SCAN_M if max_scan_m is None else max_scan_m
    if code.m > cap:
        raise ScanTooLarge(
            f"exhaustive scan over 2^{code.dimension} codewords needs m <= {cap}, got m={code.m}"
        )


def scan_weight_histograms(
    code: KasamiCode,
    bs: Iterable[int],
    *,
    workers: Optional[int] = None,
    max_scan_m: Optional[int] = None,
) -> Dict[int, Histogram]:
    """Histogram of w_b over all 2^{3m} codewords for every requested b.

    Alpha ranges are scanned in separate processes when workers > 1; the
    merge is a sum, so the result does not depend on scheduling.
    """
    check_scan_size(code, max_scan_m)
    bs = tuple(sorted(set(int(b) for b in bs)))
    for b in bs:
        check_b(b, code.length)
    workers = workers or os.cpu_count() or 1
    blocks = alpha_blocks(code)
    ctx = code.ctx
    merged: Dict[int, Counter] = {b: Counter() for b in bs}
    logger.info(
        "Scanning %s codewords (m=%s) for %s b-values in %s blocks with %s worker(s)",
        code.size,
        code.m,
        len(bs),
        len(blocks),
        workers,
    )
    if workers == 1 or len(blocks) == 1:
        results = (_scan_rows(code, lo, hi, bs) for lo, hi in blocks)
        for part in results:
            for b, hist in part.items():
                merged[b].update(hist)
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(blocks))) as pool:
            futures = [
                pool.submit(_scan_block, ctx.m, ctx.modulus, lo, hi, bs) for lo, hi in blocks
            ]
            for future in futures:
                for b, hist in future.result().items():
                    merged[b].update(hist)
    return {b: dict(sorted(merged[b].items())) for b in bs}


def scan_weight_histogram(
    code: KasamiCode,
    b: int,
    *,
    workers: Optional[int] = None,
    max_scan_m: Optional[int] = None,
) -> Histogram:
    return scan_weight_histograms(code, [b], workers=workers, max_scan_m=max_scan_m)[b]


def min_nonzero_weight(hist: Histogram) -> int:
    return min(w for w, c in hist.items() if w > 0 and c > 0)


def min_bsym_distance(
    code: KasamiCode,
    b: int,
    *,
    workers: Optional[int] = None,
    max_scan_m: Optional[int] = None,
) -> int:
    """d_b(C): by linearity, the least w_b over nonzero codewords."""
    hist = scan_weight_histogram(code, b, workers=workers, max_scan_m=max_scan_m)
    return min_nonzero_weight(hist)


def observed_hierarchy(
    code: KasamiCode,
    bs: Sequence[int],
    *,
    workers: Optional[int] = None,
    max_scan_m: Optional[int] = None,
) -> Dict[int, int]:
    """d_b(C) for each b, from a single pass over the code."""
    hists = scan_weight_histograms(code, bs, workers=workers, max_scan_m=max_scan_m)
    return {b: min_nonzero_weight(h) for b, h in hists.items()}


def find_min_weight_codeword(
    code: KasamiCode, b: int, *, max_scan_m: Optional[int] = None
) -> Tuple[int, np.ndarray]:
    """First codeword in pair order whose w_b equals d_b(C); returns (pair index, bits)."""
    check_scan_size(code, max_scan_m)
    check_b(b, code.length)
    best: Optional[Tuple[int, int, np.ndarray]] = None
    offset = 0
    for lo, hi in alpha_blocks(code):
        rows = code.codeword_block(lo, hi)
        weights = wb_brute_rows(rows, b)
        weights = np.where(weights == 0, code.length + 1, weights)
        k = int(np.argmin(weights))
        if best is None or weights[k] < best[0]:
            best = (int(weights[k]), offset + k, rows[k].copy())
        offset += rows.shape[0]
    assert best is not None
    return best[1], best[2]
