"""Closed-form b-symbol weights of Kasami codewords and the hierarchy bounds.

For a combination vector u = (u_1, ..., u_{j-1}), stored as an int with bit
i-1 holding u_i, the shift combinations are

    Theta_j = 1 + sum u_i theta^i + theta^j      (in GF(2^{2m}))
    Omega_j = 1 + sum u_i eta^i + eta^j          (in GF(2^m))

Gamma_1(j) collects the u with Omega_j = 0 and Gamma_2(j) those with
Theta_j = 0. Every weight formula depends on a codeword c(alpha, beta) only
through S(alpha, beta) and the counts t_j of non-degenerate u with
T_m(lambda * Theta_j^{q+1} / Omega_j) = 1, where lambda = alpha^{q+1} / beta.
"""

from __future__ import annotations

import enum
import functools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from bsymbol import check_b
from gf2_linalg import bitmask_independent
from gf_tower import FieldElement, FieldTower
from kasami_code import KasamiCode, exp_sum_closed, exp_sum_closed_arrays
from kasami_errors import (
    BOutOfRange,
    InvalidM,
    MbUndefined,
    NonIntegerResult,
    NotABasis,
    ScanTooLarge,
    ZeroAlphaBeta,
)

logger = logging.getLogger(__name__)

# Enumerating GF(2)^{j-1} beyond this many bits is refused.
MAX_COMBINATION_BITS = 24


class Regime(enum.Enum):
    """Which range b falls in; selects the trace-condition set and weight branch."""

    SMALL = "1 <= b <= m"
    MEDIUM = "m < b <= 2m"
    LARGE = "2m < b <= 3m"
    SATURATED = "b > 3m"

    @classmethod
    def of(cls, b: int, m: int) -> "Regime":
        if b <= m:
            return cls.SMALL
        if b <= 2 * m:
            return cls.MEDIUM
        if b <= 3 * m:
            return cls.LARGE
        return cls.SATURATED


@dataclass(frozen=True)
class ThetaOmegaPair:
    j: int
    u: int
    theta_j: FieldElement
    omega_j: FieldElement


@dataclass(frozen=True)
class IndexSetReport:
    j: int
    regime: Regime
    gamma1_size: int
    gamma2_size: int
    t_count: int
    cap: int
    a_set: FrozenSet[int]


@dataclass(frozen=True)
class MbInvariant:
    b: int
    m: int
    m_of_b: Optional[int]
    witness_set: Tuple[int, ...]

    @property
    def defined(self) -> bool:
        return self.m_of_b is not None


def _u_bits(u: Union[int, Sequence[int]], j: int) -> int:
    if isinstance(u, (int, np.integer)):
        value = int(u)
    else:
        bits = list(u)
        if len(bits) != j - 1:
            raise BOutOfRange(f"u must have {j - 1} entries for j={j}, got {len(bits)}")
        value = sum((int(bit) & 1) << i for i, bit in enumerate(bits))
    if value < 0 or value >> max(j - 1, 0):
        raise BOutOfRange(f"u={value} does not fit in {j - 1} bits")
    return value


def theta_omega(j: int, u: Union[int, Sequence[int]], ctx: FieldTower) -> ThetaOmegaPair:
    if j < 1:
        raise BOutOfRange(f"j must be >= 1, got {j}")
    bits = _u_bits(u, j)
    theta = 1 ^ ctx.exp(j)
    omega = 1 ^ ctx.eta_pow(j)
    for i in range(1, j):
        if bits >> (i - 1) & 1:
            theta ^= ctx.exp(i)
            omega ^= ctx.eta_pow(i)
    return ThetaOmegaPair(j=j, u=bits, theta_j=theta, omega_j=omega)


@functools.lru_cache(maxsize=256)
def theta_omega_arrays(j: int, ctx: FieldTower) -> Tuple[np.ndarray, np.ndarray]:
    """(Theta_j, Omega_j) for every u in 0 .. 2^{j-1} - 1, indexed by u."""
    if j < 1:
        raise BOutOfRange(f"j must be >= 1, got {j}")
    if j - 1 > MAX_COMBINATION_BITS:
        raise ScanTooLarge(f"enumerating 2^{j - 1} combinations is too large")
    thetas = np.array([1 ^ ctx.exp(j)], dtype=np.int64)
    omegas = np.array([1 ^ ctx.eta_pow(j)], dtype=np.int64)
    for i in range(1, j):
        thetas = np.concatenate((thetas, thetas ^ ctx.exp(i)))
        omegas = np.concatenate((omegas, omegas ^ ctx.eta_pow(i)))
    thetas.setflags(write=False)
    omegas.setflags(write=False)
    return thetas, omegas


def gamma_sets(j: int, ctx: FieldTower) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """(Gamma_1(j), Gamma_2(j)): the u with Omega_j = 0, and the u with Theta_j = 0."""
    thetas, omegas = theta_omega_arrays(j, ctx)
    gamma1 = frozenset(int(u) for u in np.nonzero(omegas == 0)[0])
    gamma2 = frozenset(int(u) for u in np.nonzero(thetas == 0)[0])
    return gamma1, gamma2


def gamma1_size(j: int, m: int) -> int:
    if j < m:
        return 0
    if j == m:
        return 1
    return 1 << (j - m - 1)


def gamma2_size(j: int, m: int) -> int:
    if j < 2 * m:
        return 0
    if j == 2 * m:
        return 1
    return 1 << (j - 2 * m - 1)


def t_count_cap(j: int, m: int) -> int:
    """Largest possible t_j: every non-degenerate u satisfies the trace condition."""
    return (1 << (j - 1)) - gamma1_size(j, m) - gamma2_size(j, m)


@functools.lru_cache(maxsize=256)
def _quotients(j: int, ctx: FieldTower, exclude_gamma2: bool = True) -> np.ndarray:
    thetas, omegas = theta_omega_arrays(j, ctx)
    keep = omegas != 0
    if exclude_gamma2:
        keep &= thetas != 0
    out = ctx.div_arrays(ctx.norm_array(thetas[keep]), omegas[keep])
    out.setflags(write=False)
    return out


def a_set(j: int, ctx: FieldTower, kind: int = 3) -> FrozenSet[int]:
    """Quotients Theta_j^{q+1} / Omega_j over all u (kind 1), u outside Gamma_1 (kind 2)
    or u outside Gamma_1 and Gamma_2 (kind 3)."""
    if kind == 1:
        if j >= ctx.m:
            raise BOutOfRange(f"A_1({j}) needs j < m={ctx.m} so that Omega_j != 0")
        return frozenset(int(v) for v in _quotients(j, ctx, False))
    if kind == 2:
        return frozenset(int(v) for v in _quotients(j, ctx, False))
    if kind == 3:
        return frozenset(int(v) for v in _quotients(j, ctx, True))
    raise ValueError(f"kind must be 1, 2 or 3, got {kind}")


def _lambda(alpha: FieldElement, beta: FieldElement, ctx: FieldTower) -> FieldElement:
    if alpha == 0 or beta == 0:
        raise ZeroAlphaBeta(f"alpha and beta must be nonzero, got ({alpha:#x}, {beta:#x})")
    return ctx.div(ctx.norm(alpha), beta)


def _t_count_lambda(j: int, lam: FieldElement, ctx: FieldTower) -> int:
    values = ctx.mul_array(lam, _quotients(j, ctx, True))
    return int(np.count_nonzero(ctx.subfield_trace_table[values] == 1))


def t_count(j: int, alpha: FieldElement, beta: FieldElement, b: int, ctx: FieldTower) -> int:
    """Number of u outside Gamma_1(j) and Gamma_2(j) with T_m(lambda Theta^{q+1}/Omega) = 1."""
    lam = _lambda(alpha, beta, ctx)
    if not 1 <= j <= b - 1:
        raise BOutOfRange(f"j must be in 1..{b - 1}, got {j}")
    return _t_count_lambda(j, lam, ctx)


def index_set_report(
    j: int, alpha: FieldElement, beta: FieldElement, b: int, ctx: FieldTower
) -> IndexSetReport:
    regime = Regime.of(b, ctx.m)
    kind = {Regime.SMALL: 1, Regime.MEDIUM: 2}.get(regime, 3)
    return IndexSetReport(
        j=j,
        regime=regime,
        gamma1_size=gamma1_size(j, ctx.m),
        gamma2_size=gamma2_size(j, ctx.m),
        t_count=t_count(j, alpha, beta, b, ctx),
        cap=t_count_cap(j, ctx.m),
        a_set=a_set(j, ctx, kind),
    )


def _exact(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegerResult(f"{what} evaluated to non-integer {value}")
    return int(value)


def wb_closed(alpha: FieldElement, beta: FieldElement, b: int, code: KasamiCode) -> int:
    """w_b(c(alpha, beta)) from S(alpha, beta) and the counts t_j, without the codeword."""
    ctx = code.ctx
    n, m = ctx.n, ctx.m
    check_b(b, n)
    code.check_beta(beta)
    if alpha == 0 and beta == 0:
        return 0
    regime = Regime.of(b, m)
    if regime is Regime.SATURATED:
        return n
    p2b = 1 << b
    if alpha == 0:
        if regime is not Regime.SMALL:
            return n
        return (p2b - 1) * ((1 << (2 * m - b)) + (1 << (m - b)))
    if beta == 0:
        if regime is Regime.LARGE:
            return n
        return (p2b - 1) << (2 * m - b)

    s = exp_sum_closed(alpha, beta, code)
    lam = _lambda(alpha, beta, ctx)
    weighted = sum((b - j) * _t_count_lambda(j, lam, ctx) for j in range(1, b))
    q = ctx.q
    head = Fraction(b * (s + q + 1), p2b)
    if regime is Regime.SMALL:
        value = (
            (1 << (2 * m))
            + q
            - Fraction(1 << (2 * m), p2b)
            - Fraction(q, p2b)
            - head
            - Fraction(2 * q * weighted, p2b)
        )
    elif regime is Regime.MEDIUM:
        value = (
            (1 << (2 * m))
            + q
            - Fraction(1 << (2 * m), p2b)
            - 1
            - head
            - Fraction(weighted, 1 << (b - m - 1))
        )
    else:
        value = (
            (1 << (2 * m))
            + q
            - 1
            - Fraction(1 << (2 * m), p2b)
            - Fraction(b * (s + q + 1) + 2 * q * weighted, p2b)
        )
    return _exact(value, f"w_{b}(c({alpha:#x}, {beta:#x}))")


def _combination_values(
    b: int, ctx: FieldTower
) -> Tuple[np.ndarray, np.ndarray]:
    """(P(theta), P(eta)) for every P = sum_{k<b} u_k x^k, indexed by u."""
    if b > MAX_COMBINATION_BITS:
        raise ScanTooLarge(f"enumerating 2^{b} shift combinations is too large")
    thetas = np.zeros(1, dtype=np.int64)
    etas = np.zeros(1, dtype=np.int64)
    for k in range(b):
        thetas = np.concatenate((thetas, thetas ^ ctx.exp(k)))
        etas = np.concatenate((etas, etas ^ ctx.eta_pow(k)))
    return thetas, etas


def wb_parameter_span(
    alpha: FieldElement, beta: FieldElement, b: int, code: KasamiCode
) -> int:
    """w_b as the span average, with each w_1 read off S of the combined parameters.

    sum_{k<b} u_k tau^k c(alpha, beta) = c(alpha P(theta), beta P(eta)), so no
    vector is built.
    """
    ctx = code.ctx
    check_b(b, ctx.n)
    code.check_beta(beta)
    thetas, etas = _combination_values(b, ctx)
    sums = exp_sum_closed_arrays(ctx.mul_array(alpha, thetas), ctx.mul_array(beta, etas), ctx)
    total = int(np.sum(ctx.n - sums))
    return _exact(Fraction(total, 1 << b), f"span weight of c({alpha:#x}, {beta:#x})")


def wb_exp_sum_form(
    alpha: FieldElement, beta: FieldElement, b: int, code: KasamiCode
) -> int:
    """w_b = n - [n + b S(alpha, beta) + sum_j (b-j) sum_u S(alpha Theta_j, beta Omega_j)] / 2^b.

    Degenerate u (Theta_j or Omega_j zero, or both) are summed with their own
    S value, so this holds for every b.
    """
    ctx = code.ctx
    n = ctx.n
    check_b(b, n)
    code.check_beta(beta)
    total = n + b * exp_sum_closed(alpha, beta, code)
    for j in range(1, b):
        thetas, omegas = theta_omega_arrays(j, ctx)
        sums = exp_sum_closed_arrays(
            ctx.mul_array(alpha, thetas), ctx.mul_array(beta, omegas), ctx
        )
        total += (b - j) * int(np.sum(sums))
    return _exact(n - Fraction(total, 1 << b), f"w_{b}(c({alpha:#x}, {beta:#x}))")


def generalized_hierarchy(b: int, m: int) -> int:
    """Generalized Hamming weight d_b of the [2^{2m} - 1, 3m] Kasami code."""
    if m < 2:
        raise InvalidM(f"m must be >= 2, got {m}")
    if not 1 <= b <= 3 * m:
        raise BOutOfRange(f"b must be in 1..{3 * m}, got {b}")
    if b <= m:
        return ((1 << b) - 1) * ((1 << (2 * m - b)) - (1 << (m - b)))
    if b <= 2 * m:
        return (1 << (2 * m)) - (1 << m) - (1 << (2 * m - b)) + 1
    return (1 << (2 * m)) - (1 << (3 * m - b))


def d_b_range(b: int, m: int) -> Tuple[int, int]:
    """Inclusive interval that d_b(C) is known to lie in."""
    if m < 2:
        raise InvalidM(f"m must be >= 2, got {m}")
    n = (1 << (2 * m)) - 1
    if not 1 <= b <= n:
        raise BOutOfRange(f"b must be in 1..{n}, got {b}")
    if b > 3 * m:
        return n, n
    if b > 2 * m:
        return (1 << (2 * m)) - (1 << (3 * m - b)), n
    upper = ((1 << b) - 1) << (2 * m - b)
    return generalized_hierarchy(b, m), upper


def mb_invariant(b: int, ctx: FieldTower) -> MbInvariant:
    """Largest i <= b - 1 whose set {1} + A_1(1) + ... + A_1(i) has 2^i independent elements."""
    m = ctx.m
    if b < 3 or b > m:
        raise BOutOfRange(f"m(b) is defined for 3 <= b <= m={m}, got b={b}")
    witness: List[int] = [1]
    best: Optional[int] = None
    best_witness: Tuple[int, ...] = ()
    for i in range(1, b):
        witness.extend(int(v) for v in _quotients(i, ctx, False))
        distinct = set(witness)
        if len(distinct) != 1 << i or len(distinct) != len(witness):
            break
        if not bitmask_independent(witness):
            break
        best, best_witness = i, tuple(witness)
    logger.debug("m(%s) at m=%s is %s", b, m, best)
    return MbInvariant(b=b, m=m, m_of_b=best, witness_set=best_witness)


def resolved_m_of_b(b: int, ctx: FieldTower) -> int:
    """m(b) with b <= 2 read as b - 1; raises MbUndefined when nothing qualifies."""
    if 1 <= b <= 2:
        return b - 1
    inv = mb_invariant(b, ctx)
    if not inv.defined:
        raise MbUndefined(f"m({b}) is undefined at m={ctx.m}")
    return int(inv.m_of_b)


def lower_bound_thm13(b: int, ctx: FieldTower) -> int:
    """2^{2m} - 2^{2m-b} + 2^{m-b} + 2^m (1 - (b - m(b) + 1) 2^{1+m(b)-b}).

    The weight of a codeword realising m(b) is at most this value, so d_b(C)
    never exceeds it; it equals d_b (the generalized weight) when m(b) = b - 1.
    """
    m = ctx.m
    if not 1 <= b <= m:
        raise BOutOfRange(f"b must be in 1..{m}, got {b}")
    mb = resolved_m_of_b(b, ctx)
    value = (
        (1 << (2 * m))
        - (1 << (2 * m - b))
        + (1 << (m - b))
        + (1 << m)
        - (b - mb + 1) * (1 << (m + 1 + mb - b))
    )
    return value


def weighted_power_sum(b: int) -> int:
    return sum((b - j) << (j - 1) for j in range(1, b))


def weighted_prefix_sum(b: int, m_b: int) -> int:
    return sum((b - j) << (j - 1) for j in range(1, m_b + 1))


def counting_identities(b: int, m_b: Optional[int] = None) -> Dict[str, bool]:
    """Exact checks of sum (b-j) 2^{j-1} over j < b and over j <= m(b)."""
    if b < 1:
        raise BOutOfRange(f"b must be >= 1, got {b}")
    verdicts = {"full_sum": weighted_power_sum(b) == (1 << b) - 1 - b}
    if m_b is not None:
        verdicts["prefix_sum"] = weighted_prefix_sum(b, m_b) == (b - m_b + 1) * (1 << m_b) - b - 1
    return verdicts


def subfield_basis(ctx: FieldTower) -> List[int]:
    """1, eta, ..., eta^{m-1}: a GF(2)-basis of GF(2^m)."""
    return [ctx.eta_pow(i) for i in range(ctx.m)]


def basis_intersection_check(
    basis: Sequence[int], subset_mask: int, ctx: FieldTower
) -> int:
    """Number of x in GF(2^m) with T_m(x beta_i) = 1 for every i selected by subset_mask."""
    basis = [int(v) for v in basis]
    if len(basis) != ctx.m or not all(ctx.is_subfield(v) for v in basis):
        raise NotABasis(f"need {ctx.m} elements of GF(2^{ctx.m})")
    if not bitmask_independent(basis):
        raise NotABasis("elements are linearly dependent over GF(2)")
    chosen = [v for i, v in enumerate(basis) if subset_mask >> i & 1]
    xs = ctx.subfield_elements()
    ok = np.ones(xs.shape[0], dtype=bool)
    for v in chosen:
        ok &= ctx.subfield_trace_table[ctx.mul_array(v, xs)] == 1
    return int(np.count_nonzero(ok))


def t_counts(
    alpha: FieldElement, beta: FieldElement, b: int, ctx: FieldTower
) -> List[int]:
    lam = _lambda(alpha, beta, ctx)
    return [_t_count_lambda(j, lam, ctx) for j in range(1, b)]


def caps_respected(
    alpha: FieldElement, beta: FieldElement, b: int, ctx: FieldTower
) -> bool:
    return all(t <= t_count_cap(j, ctx.m) for j, t in enumerate(t_counts(alpha, beta, b, ctx), 1))


def lambdas_meeting_caps(b: int, ctx: FieldTower, js: Iterable[int]) -> List[int]:
    """lambda in GF(2^m)^* with T_m(lambda) = 1 and t_j at its cap for every j in js."""
    js = list(js)
    xs = ctx.subfield_elements()[1:]
    ok = ctx.subfield_trace_table[xs] == 1
    for j in js:
        for a in _quotients(j, ctx, True):
            ok &= ctx.subfield_trace_table[ctx.mul_array(int(a), xs)] == 1
    return [int(v) for v in xs[ok]]
