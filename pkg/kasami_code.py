"""Kasami codewords c(alpha, beta) and the exponential sum S(alpha, beta).

Coordinate slot i (0-based) holds the evaluation at x = theta^{i+1}, so the
one-step cyclic shift acts on parameters as (alpha, beta) -> (alpha*theta,
beta*eta). Pairs are enumerated alpha-major: pair index = a * q + k where a is
the integer value of alpha and k the rank of beta among the ascending
subfield elements.
"""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

import numpy as np

from gf_tower import FieldElement, FieldTower, TraceLevel
from kasami_errors import BetaNotInSubfield, ParityViolation

logger = logging.getLogger(__name__)

Pair = Tuple[FieldElement, FieldElement]


@dataclass(frozen=True, eq=False)
class Codeword:
    bits: np.ndarray
    origin: Optional[Pair] = None

    @property
    def length(self) -> int:
        return int(self.bits.shape[0])

    @property
    def weight(self) -> int:
        return int(np.count_nonzero(self.bits))

    def to_string(self) -> str:
        return "".join("1" if bit else "0" for bit in self.bits)

    @classmethod
    def from_string(cls, text: str) -> "Codeword":
        cleaned = "".join(ch for ch in text if ch in "01")
        return cls(bits=np.array([int(ch) for ch in cleaned], dtype=np.uint8))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Codeword):
            return NotImplemented
        return bool(np.array_equal(self.bits, other.bits))

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class KasamiCode:
    ctx: FieldTower

    @property
    def m(self) -> int:
        return self.ctx.m

    @property
    def length(self) -> int:
        return self.ctx.n

    @property
    def dimension(self) -> int:
        return 3 * self.ctx.m

    @property
    def size(self) -> int:
        return 1 << self.dimension

    @property
    def min_distance(self) -> int:
        m = self.ctx.m
        return (1 << (2 * m - 1)) - (1 << (m - 1))

    @functools.cached_property
    def betas(self) -> np.ndarray:
        return self.ctx.subfield_elements()

    @functools.cached_property
    def _beta_rank(self) -> dict:
        return {int(v): k for k, v in enumerate(self.betas)}

    @functools.cached_property
    def _full_sequence(self) -> np.ndarray:
        """T_{2m}(theta^k) for k = 0..n-1."""
        return self.ctx.full_trace_table[self.ctx.exp_table].astype(np.uint8)

    @functools.cached_property
    def _sub_sequence(self) -> np.ndarray:
        """T_m(eta^k) for k = 0..q-2."""
        q = self.ctx.q
        etas = self.ctx.exp_table[(q + 1) * np.arange(q - 1)]
        return self.ctx.subfield_trace_table[etas].astype(np.uint8)

    @functools.cached_property
    def _alpha_rows(self) -> np.ndarray:
        """Row a holds (T_{2m}(a * theta^{i+1}))_i; row 0 is zero."""
        ctx = self.ctx
        n = ctx.n
        idx = np.arange(1, n + 1)
        rows = np.zeros((ctx.size, n), dtype=np.uint8)
        logs = ctx.log_table[1:]
        rows[1:] = self._full_sequence[(logs[:, None] + idx[None, :]) % n]
        return rows

    @functools.cached_property
    def _beta_rows(self) -> np.ndarray:
        """Row k holds (T_m(beta_k * eta^{i+1}))_i for the k-th subfield element."""
        ctx = self.ctx
        q = ctx.q
        idx = np.arange(1, ctx.n + 1)
        rows = np.zeros((q, ctx.n), dtype=np.uint8)
        nonzero = self.betas[1:]
        eta_logs = ctx.log_table[nonzero] // (q + 1)
        rows[1:] = self._sub_sequence[(eta_logs[:, None] + idx[None, :]) % (q - 1)]
        return rows

    def check_beta(self, beta: FieldElement) -> None:
        if not self.ctx.is_subfield(beta):
            raise BetaNotInSubfield(f"beta={beta:#x} is not in GF(2^{self.ctx.m})")

    def pair_index(self, alpha: FieldElement, beta: FieldElement) -> int:
        self.check_beta(beta)
        return alpha * self.ctx.q + self._beta_rank[beta]

    def pair_at(self, index: int) -> Pair:
        a, k = divmod(int(index), self.ctx.q)
        return a, int(self.betas[k])

    def pairs(self) -> Iterator[Pair]:
        for alpha in range(self.ctx.size):
            for beta in self.betas:
                yield alpha, int(beta)

    def rows_for(self, indices: np.ndarray) -> np.ndarray:
        """Bit rows of the codewords at the given pair indices."""
        a, k = np.divmod(np.asarray(indices, dtype=np.int64), self.ctx.q)
        return self._alpha_rows[a] ^ self._beta_rows[k]

    def codeword_block(self, alpha_start: int, alpha_stop: int) -> np.ndarray:
        """Bit matrix of every codeword with alpha in [start, stop), in pair order."""
        a = self._alpha_rows[alpha_start:alpha_stop]
        block = a[:, None, :] ^ self._beta_rows[None, :, :]
        return block.reshape(-1, self.ctx.n)

    def all_codewords(self) -> np.ndarray:
        return self.codeword_block(0, self.ctx.size)


def codeword(alpha: FieldElement, beta: FieldElement, code: KasamiCode) -> Codeword:
    """c(alpha, beta): coordinate i is T_{2m}(alpha theta^{i+1}) + T_m(beta eta^{i+1})."""
    code.check_beta(beta)
    bits = code._alpha_rows[alpha] ^ code._beta_rows[code._beta_rank[beta]]
    return Codeword(bits=bits.copy(), origin=(alpha, beta))


def literal_codeword(alpha: FieldElement, beta: FieldElement, code: KasamiCode) -> Codeword:
    """Same vector as codeword(), evaluated element by element from the definition."""
    code.check_beta(beta)
    ctx = code.ctx
    bits = np.zeros(ctx.n, dtype=np.uint8)
    for i in range(ctx.n):
        x = ctx.exp(i + 1)
        bits[i] = ctx.trace(ctx.mul(alpha, x)) ^ ctx.trace(
            ctx.mul(beta, ctx.norm(x)), level=TraceLevel.SUBFIELD
        )
    return Codeword(bits=bits, origin=(alpha, beta))


def exp_sum_direct(alpha: FieldElement, beta: FieldElement, code: KasamiCode) -> int:
    """Sum of (-1)^{c_i} over all n coordinates of c(alpha, beta)."""
    bits = codeword(alpha, beta, code).bits.astype(np.int64)
    return int(np.sum(1 - 2 * bits))


def exp_sum_closed(alpha: FieldElement, beta: FieldElement, code: KasamiCode) -> int:
    """Four-valued closed form of S(alpha, beta) from traces and the norm."""
    code.check_beta(beta)
    ctx = code.ctx
    q = ctx.q
    if beta == 0:
        return ctx.n if alpha == 0 else -1
    ratio = ctx.div(ctx.norm(alpha), beta)
    return q - 1 if ctx.subfield_trace_table[ratio] == 1 else -q - 1


def exp_sum_closed_arrays(
    alphas: np.ndarray, betas: np.ndarray, ctx: FieldTower
) -> np.ndarray:
    """Vectorised exp_sum_closed over parallel arrays of parameters."""
    alphas = np.asarray(alphas, dtype=np.int64)
    betas = np.asarray(betas, dtype=np.int64)
    q = ctx.q
    out = np.where(alphas == 0, ctx.n, -1).astype(np.int64)
    nz = betas != 0
    if np.any(nz):
        ratios = ctx.div_arrays(ctx.norm_array(alphas[nz]), betas[nz])
        traces = ctx.subfield_trace_table[ratios]
        out[nz] = np.where(traces == 1, q - 1, -q - 1)
    return out


def hamming_weight_from_sum(s: int, code: KasamiCode) -> int:
    """w_1(c(alpha, beta)) = (q^2 - 1 - S) / 2."""
    diff = code.length - int(s)
    if diff < 0 or diff % 2:
        raise ParityViolation(f"q^2 - 1 - S = {diff} is not a nonnegative even number")
    return diff // 2


def shift_parameters(
    alpha: FieldElement, beta: FieldElement, steps: int, ctx: FieldTower
) -> Pair:
    """Parameters of tau^steps(c(alpha, beta)): (alpha theta^s, beta eta^s)."""
    return ctx.mul(alpha, ctx.exp(steps)), ctx.mul(beta, ctx.eta_pow(steps))
