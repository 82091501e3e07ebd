"""Weight enumerators, the symbol-pair distribution and Griesmer shortening."""

from __future__ import annotations

import logging
import re
import warnings
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple, Union

import numpy as np

import bsymbol
from gf2_linalg import rank
from gf_tower import FieldElement
from hierarchy import (
    Regime,
    a_set,
    generalized_hierarchy,
    lambdas_meeting_caps,
)
from kasami_code import Codeword, KasamiCode, Pair
from kasami_errors import (
    BOutOfRange,
    InvalidM,
    NotMinimumWeight,
    RankDeficient,
)

logger = logging.getLogger(__name__)

TERM_RE = re.compile(r"^(?:(\d+)\s*\*?\s*)?T(?:\^\{?(\d+)\}?)?$|^(\d+)$")


@dataclass(frozen=True)
class WeightEnumerator:
    """A(T) = sum_w counts[w] T^w for the b-symbol weight over a code of parameter m."""

    m: int
    b: int
    counts: Dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def min_nonzero_weight(self) -> int:
        return min(w for w, c in self.counts.items() if w > 0 and c > 0)

    def items(self) -> List[Tuple[int, int]]:
        return sorted((w, c) for w, c in self.counts.items() if c)


@dataclass(frozen=True)
class ShortenedCodeParams:
    b: int
    length: int
    dimension: int
    min_distance: int
    griesmer_sum: int
    is_griesmer: bool
    shift_rank: int
    seed_weight: int

    def as_triple(self) -> str:
        return f"[{self.length}, {self.dimension}, {self.min_distance}]"


@dataclass(frozen=True)
class CapWitnessReport:
    """Search result for a codeword with S = q - 1 whose t_j all sit at their caps."""

    b: int
    obstruction_j: Optional[int] = None
    lam: Optional[FieldElement] = None
    witness: Optional[Pair] = None

    @property
    def found(self) -> bool:
        return self.witness is not None


def weight_enumerator_scans(
    code: KasamiCode,
    bs: Iterable[int],
    *,
    workers: Optional[int] = None,
    max_scan_m: Optional[int] = None,
) -> Dict[int, WeightEnumerator]:
    hists = bsymbol.scan_weight_histograms(
        code, bs, workers=workers, max_scan_m=max_scan_m
    )
    return {b: WeightEnumerator(m=code.m, b=b, counts=h) for b, h in hists.items()}


def weight_enumerator_scan(
    code: KasamiCode,
    b: int,
    *,
    workers: Optional[int] = None,
    max_scan_m: Optional[int] = None,
) -> WeightEnumerator:
    """Histogram of w_b over every codeword."""
    return weight_enumerator_scans(code, [b], workers=workers, max_scan_m=max_scan_m)[b]


def pair_distribution_closed(m: int) -> WeightEnumerator:
    """Symbol-pair (b = 2) enumerator from the six-class closed form."""
    if m < 2:
        raise InvalidM(f"m must be >= 2, got {m}")
    base = 3 << (2 * m - 2)
    low = 1 << (m - 2)
    common = (1 << (3 * m - 2)) - low
    counts = {
        0: 1,
        3 * ((1 << (2 * m - 2)) - low): common,
        base - low: common,
        base + low: common,
        3 * ((1 << (2 * m - 2)) + low): (1 << (3 * m - 2)) - (1 << (2 * m)) + 3 * low,
        base: (1 << (2 * m)) - 1,
    }
    return WeightEnumerator(m=m, b=2, counts=dict(sorted(counts.items())))


def saturated_distribution_closed(m: int, b: int) -> WeightEnumerator:
    """1 + (2^{3m} - 1) T^n, valid once b exceeds 3m."""
    if m < 2:
        raise InvalidM(f"m must be >= 2, got {m}")
    n = (1 << (2 * m)) - 1
    if not 3 * m < b <= n:
        raise BOutOfRange(f"b must be in {3 * m + 1}..{n}, got {b}")
    return WeightEnumerator(m=m, b=b, counts={0: 1, n: (1 << (3 * m)) - 1})


def closed_enumerator(m: int, b: int) -> Optional[WeightEnumerator]:
    """The closed-form enumerator for b when one is known, else None."""
    if b == 2:
        return pair_distribution_closed(m)
    if b > 3 * m:
        return saturated_distribution_closed(m, b)
    return None


def pair_weight_class(alpha: FieldElement, beta: FieldElement, code: KasamiCode) -> int:
    """w_2(c(alpha, beta)) from the two trace bits T_m(lambda) and T_m(lambda a_1)."""
    code.check_beta(beta)
    ctx = code.ctx
    m = ctx.m
    base = 3 << (2 * m - 2)
    low = 1 << (m - 2)
    if alpha == 0 and beta == 0:
        return 0
    if beta == 0:
        return base
    if alpha == 0:
        return 3 * ((1 << (2 * m - 2)) + low)
    lam = ctx.div(ctx.norm(alpha), beta)
    a1 = ctx.div(ctx.norm(1 ^ ctx.theta), 1 ^ ctx.eta)
    t0 = ctx.subfield_trace_table[lam] == 1
    t1 = ctx.subfield_trace_table[ctx.mul(lam, a1)] == 1
    if t0 and t1:
        return 3 * ((1 << (2 * m - 2)) - low)
    if t0:
        return base - low
    if t1:
        return base + low
    return 3 * ((1 << (2 * m - 2)) + low)


def enumerator_to_text(e: WeightEnumerator) -> str:
    terms = []
    for w, c in e.items():
        if w == 0:
            terms.append(str(c))
        elif c == 1:
            terms.append(f"T^{w}")
        else:
            terms.append(f"{c}T^{w}")
    return " + ".join(terms) if terms else "0"


def parse_enumerator(text: str, m: int = 0, b: int = 0) -> WeightEnumerator:
    """Inverse of enumerator_to_text; also accepts T^{w} and c*T^w."""
    counts: Dict[int, int] = {}
    for raw in text.split("+"):
        term = raw.strip().replace(" ", "")
        if not term:
            continue
        match = TERM_RE.match(term)
        if not match:
            raise ValueError(f"cannot parse enumerator term {raw.strip()!r}")
        coef, power, constant = match.groups()
        if constant is not None:
            weight, count = 0, int(constant)
        else:
            weight = int(power) if power is not None else 1
            count = int(coef) if coef is not None else 1
        counts[weight] = counts.get(weight, 0) + count
    return WeightEnumerator(m=m, b=b, counts=dict(sorted(counts.items())))


def orbit_check(e: WeightEnumerator) -> List[str]:
    """Problems with e as a distribution of a cyclic Kasami code; empty when consistent.

    Nonzero codewords split into q shift orbits of size q^2 - 1 (alpha != 0)
    and one orbit of size q - 1 (alpha = 0, beta != 0), and all words of an
    orbit share every b-symbol weight.
    """
    m = e.m
    q = 1 << m
    n = q * q - 1
    problems: List[str] = []
    if e.counts.get(0) != 1:
        problems.append(f"coefficient of T^0 is {e.counts.get(0, 0)}, expected 1")
    if e.total != 1 << (3 * m):
        problems.append(f"coefficients sum to {e.total}, expected {1 << (3 * m)}")
    short_orbit = []
    for w, c in e.items():
        if w == 0:
            continue
        if c % n == 0:
            continue
        if c >= q - 1 and (c - (q - 1)) % n == 0:
            short_orbit.append(w)
            continue
        problems.append(f"T^{w} has {c} words, not a union of shift orbits")
    if len(short_orbit) > 1:
        problems.append(f"weights {short_orbit} all claim the size-{q - 1} orbit")
    elif not short_orbit:
        problems.append(f"no weight holds the size-{q - 1} orbit")
    return problems


def griesmer_sum(k: int, d: int) -> int:
    """sum_{i<k} ceil(d / 2^i)."""
    return sum(-(-d // (1 << i)) for i in range(k))


def shorten_on_complement(
    code: KasamiCode,
    c0: Union[Codeword, np.ndarray],
    b: int,
    *,
    workers: Optional[int] = None,
    max_scan_m: Optional[int] = None,
) -> ShortenedCodeParams:
    """Parameters of the code of words vanishing off I_b(c0), restricted to I_b(c0)."""
    if isinstance(c0, Codeword):
        c0 = c0.bits
    c0 = np.asarray(c0, dtype=np.uint8)
    bsymbol.check_scan_size(code, max_scan_m)
    bsymbol.check_b(b, code.length)
    shifts = np.stack([bsymbol.cyclic_shift(c0, s) for s in range(b)])
    shift_rank = rank(shifts)
    if shift_rank < b:
        raise RankDeficient(f"G_{b}(c0) has rank {shift_rank} < {b}")

    seed_weight = bsymbol.wb_brute(c0, b)
    d_b = bsymbol.min_bsym_distance(code, b, workers=workers, max_scan_m=max_scan_m)
    if seed_weight != d_b:
        warnings.warn(
            f"seed has w_{b} = {seed_weight} but d_{b}(C) = {d_b}", NotMinimumWeight
        )

    support = bsymbol.support_b(c0, b)
    off = support.complement_mask()
    kept: List[np.ndarray] = []
    for lo, hi in bsymbol.alpha_blocks(code):
        rows = code.codeword_block(lo, hi)
        rows = rows[~np.any(rows[:, off], axis=1)]
        if rows.shape[0]:
            kept.append(rows[:, ~off])
    vanishing = np.concatenate(kept)
    count = vanishing.shape[0]
    dimension = count.bit_length() - 1
    if count != 1 << dimension:
        raise ArithmeticError(f"shortened code has {count} words, not a power of two")
    weights = np.count_nonzero(vanishing, axis=1)
    nonzero = weights[weights > 0]
    min_distance = int(nonzero.min()) if nonzero.size else 0
    length = support.size
    g_sum = griesmer_sum(dimension, min_distance)
    logger.info(
        "Shortened on I_%s: [%s, %s, %s], Griesmer sum %s",
        b,
        length,
        dimension,
        min_distance,
        g_sum,
    )
    return ShortenedCodeParams(
        b=b,
        length=length,
        dimension=dimension,
        min_distance=min_distance,
        griesmer_sum=g_sum,
        is_griesmer=length == g_sum,
        shift_rank=shift_rank,
        seed_weight=seed_weight,
    )


def shorten_minimum(
    code: KasamiCode,
    b: int,
    *,
    workers: Optional[int] = None,
    max_scan_m: Optional[int] = None,
) -> Tuple[Pair, ShortenedCodeParams]:
    """Shorten on the support of the first minimum-w_b codeword in pair order."""
    index, bits = bsymbol.find_min_weight_codeword(code, b, max_scan_m=max_scan_m)
    pair = code.pair_at(index)
    return pair, shorten_on_complement(code, bits, b, workers=workers, max_scan_m=max_scan_m)


def cap_witness_search(code: KasamiCode, b: int) -> CapWitnessReport:
    """Look for (alpha, beta) with S = q - 1 and every t_j (j < b) at its cap, m < b <= 2m.

    Both conditions depend only on lambda = alpha^{q+1} / beta, so the search
    runs over lambda and reports the witness (1, 1 / lambda).
    """
    ctx = code.ctx
    m = ctx.m
    if Regime.of(b, m) is not Regime.MEDIUM:
        raise BOutOfRange(f"b must be in {m + 1}..{2 * m}, got {b}")
    for j in range(1, b):
        if len(a_set(j, ctx, 2)) > 1 << (m - 1):
            logger.info("No witness possible: |A_2(%s)| exceeds 2^%s", j, m - 1)
            return CapWitnessReport(b=b, obstruction_j=j)
    lams = lambdas_meeting_caps(b, ctx, range(1, b))
    if not lams:
        return CapWitnessReport(b=b)
    lam = lams[0]
    return CapWitnessReport(b=b, lam=lam, witness=(1, ctx.inv(lam)))


def griesmer_identity_holds(b: int, m: int) -> bool:
    """Griesmer sum of [., b, d_1] equals the generalized weight d_b for b <= m."""
    d1 = (1 << (2 * m - 1)) - (1 << (m - 1))
    return griesmer_sum(b, d1) == generalized_hierarchy(b, m)
