"""Unit tests for hierarchy: closed-form b-symbol weights, index sets and bounds."""

from __future__ import annotations

import os
import unittest

import numpy as np

import hierarchy
from bsymbol import wb_brute_rows
from gf_tower import build_field, primitive_moduli
from kasami_code import KasamiCode
from kasami_errors import BOutOfRange, InvalidM, NotABasis, ZeroAlphaBeta
from verify_suites import select_pairs


def long_tests_enabled() -> bool:
    return os.getenv("KASAMI_LONG_TESTS", "").strip() == "1"


class RegimeTests(unittest.TestCase):
    def test_boundaries(self) -> None:
        Regime = hierarchy.Regime
        self.assertIs(Regime.of(3, 3), Regime.SMALL)
        self.assertIs(Regime.of(4, 3), Regime.MEDIUM)
        self.assertIs(Regime.of(6, 3), Regime.MEDIUM)
        self.assertIs(Regime.of(7, 3), Regime.LARGE)
        self.assertIs(Regime.of(9, 3), Regime.LARGE)
        self.assertIs(Regime.of(10, 3), Regime.SATURATED)


class IndexSetTests(unittest.TestCase):
    def test_theta_omega_scalar_matches_arrays(self) -> None:
        ctx = build_field(3)
        for j in range(1, 6):
            thetas, omegas = hierarchy.theta_omega_arrays(j, ctx)
            for u in range(1 << (j - 1)):
                pair = hierarchy.theta_omega(j, u, ctx)
                self.assertEqual((pair.theta_j, pair.omega_j), (thetas[u], omegas[u]))

    def test_theta_omega_accepts_bit_sequence(self) -> None:
        ctx = build_field(3)
        by_bits = hierarchy.theta_omega(4, [1, 0, 1], ctx)
        self.assertEqual(by_bits, hierarchy.theta_omega(4, 0b101, ctx))
        self.assertEqual(by_bits.theta_j, 1 ^ ctx.exp(1) ^ ctx.exp(3) ^ ctx.exp(4))
        with self.assertRaises(BOutOfRange):
            hierarchy.theta_omega(4, [1, 0], ctx)

    def test_gamma_sizes(self) -> None:
        for m in (2, 3, 4, 5):
            ctx = build_field(m)
            for j in range(1, 3 * m):
                with self.subTest(m=m, j=j):
                    g1, g2 = hierarchy.gamma_sets(j, ctx)
                    self.assertEqual(len(g1), hierarchy.gamma1_size(j, m))
                    self.assertEqual(len(g2), hierarchy.gamma2_size(j, m))
                    self.assertFalse(g1 & g2)

    def test_caps(self) -> None:
        self.assertEqual(hierarchy.t_count_cap(2, 3), 2)
        self.assertEqual(hierarchy.t_count_cap(3, 3), 3)
        self.assertEqual(hierarchy.t_count_cap(5, 3), 16 - 2)
        self.assertEqual(hierarchy.t_count_cap(7, 3), 64 - 8 - 1)

    def test_t_counts_respect_caps(self) -> None:
        ctx = build_field(3)
        code = KasamiCode(ctx)
        for alpha, beta in list(code.pairs())[::5]:
            if alpha and beta:
                self.assertTrue(hierarchy.caps_respected(alpha, beta, 9, ctx))

    def test_t_count_needs_nonzero_parameters(self) -> None:
        ctx = build_field(2)
        with self.assertRaises(ZeroAlphaBeta):
            hierarchy.t_count(1, 0, 1, 3, ctx)
        with self.assertRaises(BOutOfRange):
            hierarchy.t_count(3, 1, 1, 3, ctx)

    def test_a_sets(self) -> None:
        ctx = build_field(3)
        a1 = hierarchy.a_set(1, ctx, 1)
        self.assertEqual(len(a1), 1)
        self.assertTrue(all(ctx.is_subfield(v) for v in hierarchy.a_set(5, ctx, 3)))
        self.assertLessEqual(hierarchy.a_set(7, ctx, 3), hierarchy.a_set(7, ctx, 2))
        with self.assertRaises(BOutOfRange):
            hierarchy.a_set(3, ctx, 1)

    def test_index_set_report(self) -> None:
        ctx = build_field(3)
        report = hierarchy.index_set_report(4, 5, 1, 6, ctx)
        self.assertIs(report.regime, hierarchy.Regime.MEDIUM)
        self.assertEqual(report.gamma1_size, 1)
        self.assertLessEqual(report.t_count, report.cap)


class ClosedWeightTests(unittest.TestCase):
    def _assert_matches_brute(self, code: KasamiCode, indices: np.ndarray, bs) -> None:
        rows = code.rows_for(indices)
        for b in bs:
            brute = wb_brute_rows(rows, b)
            for index, expected in zip(indices, brute):
                alpha, beta = code.pair_at(index)
                with self.subTest(alpha=alpha, beta=beta, b=b):
                    self.assertEqual(hierarchy.wb_closed(alpha, beta, b, code), int(expected))

    def test_every_codeword_m2(self) -> None:
        code = KasamiCode(build_field(2))
        self._assert_matches_brute(code, np.arange(code.size), range(1, 16))

    def test_every_codeword_m3(self) -> None:
        code = KasamiCode(build_field(3))
        self._assert_matches_brute(code, np.arange(code.size), range(1, code.length + 1))

    def test_other_modulus(self) -> None:
        code = KasamiCode(build_field(3, primitive_moduli(6)[-1]))
        self._assert_matches_brute(code, select_pairs(code, 120, 7), range(1, 11))

    def test_sampled_m4(self) -> None:
        code = KasamiCode(build_field(4))
        self._assert_matches_brute(code, select_pairs(code, 60, 1), range(1, 14))

    def test_sampled_large_fields(self) -> None:
        if not long_tests_enabled():
            self.skipTest("set KASAMI_LONG_TESTS=1 to run")
        for m in (4, 5):
            code = KasamiCode(build_field(m))
            self._assert_matches_brute(code, select_pairs(code, 800, m), range(1, 3 * m + 2))

    def test_other_forms(self) -> None:
        code = KasamiCode(build_field(2))
        rows = code.all_codewords()
        for b in range(1, 10):
            brute = wb_brute_rows(rows, b)
            for (alpha, beta), expected in zip(code.pairs(), brute):
                self.assertEqual(hierarchy.wb_parameter_span(alpha, beta, b, code), expected)
                self.assertEqual(hierarchy.wb_exp_sum_form(alpha, beta, b, code), expected)

    def test_exp_sum_form_past_saturation(self) -> None:
        code = KasamiCode(build_field(3))
        rows = code.rows_for(np.arange(0, code.size, 37))
        for b in (10, 12):
            brute = wb_brute_rows(rows, b)
            for index, expected in zip(range(0, code.size, 37), brute):
                alpha, beta = code.pair_at(index)
                self.assertEqual(hierarchy.wb_exp_sum_form(alpha, beta, b, code), expected)


class BoundTests(unittest.TestCase):
    def test_generalized_hierarchy(self) -> None:
        got = [hierarchy.generalized_hierarchy(b, 2) for b in range(1, 7)]
        self.assertEqual(got, [6, 9, 11, 12, 14, 15])
        self.assertEqual(hierarchy.generalized_hierarchy(4, 3), 53)
        self.assertEqual(hierarchy.generalized_hierarchy(3, 4), 210)
        with self.assertRaises(BOutOfRange):
            hierarchy.generalized_hierarchy(7, 2)
        with self.assertRaises(InvalidM):
            hierarchy.generalized_hierarchy(1, 1)

    def test_range(self) -> None:
        self.assertEqual(hierarchy.d_b_range(1, 2), (6, 8))
        self.assertEqual(hierarchy.d_b_range(5, 2), (14, 15))
        self.assertEqual(hierarchy.d_b_range(8, 2), (15, 15))
        for b in range(1, 7):
            low, high = hierarchy.d_b_range(b, 2)
            self.assertLessEqual(low, high)

    def test_m_of_b_table(self) -> None:
        table = {(3, 3): 1, (4, 3): 2, (4, 4): 2, (5, 4): 2, (5, 5): 2, (6, 4): 2}
        for (m, b), want in table.items():
            with self.subTest(m=m, b=b):
                inv = hierarchy.mb_invariant(b, build_field(m))
                self.assertEqual(inv.m_of_b, want)
                self.assertEqual(len(inv.witness_set), 1 << want)

    def test_m_of_b_table_large_fields(self) -> None:
        if not long_tests_enabled():
            self.skipTest("set KASAMI_LONG_TESTS=1 to run")
        table = {(7, 4): 2, (8, 4): 3, (6, 5): 2, (7, 5): 2, (8, 5): 3, (6, 6): 2, (7, 6): 2}
        for (m, b), want in table.items():
            with self.subTest(m=m, b=b):
                self.assertEqual(hierarchy.mb_invariant(b, build_field(m)).m_of_b, want)

    def test_m_of_b_domain(self) -> None:
        ctx = build_field(3)
        with self.assertRaises(BOutOfRange):
            hierarchy.mb_invariant(2, ctx)
        with self.assertRaises(BOutOfRange):
            hierarchy.mb_invariant(4, ctx)
        self.assertEqual(hierarchy.resolved_m_of_b(1, ctx), 0)
        self.assertEqual(hierarchy.resolved_m_of_b(2, ctx), 1)

    def test_m_of_b_bound(self) -> None:
        self.assertEqual(hierarchy.lower_bound_thm13(3, build_field(4)), 210)
        self.assertEqual(hierarchy.lower_bound_thm13(3, build_field(3)), 53)
        ctx = build_field(3)
        self.assertEqual(
            hierarchy.lower_bound_thm13(1, ctx), hierarchy.generalized_hierarchy(1, 3)
        )

    def test_counting_identities(self) -> None:
        self.assertEqual(hierarchy.weighted_prefix_sum(5, 3), 18)
        self.assertEqual(hierarchy.weighted_power_sum(5), 26)
        for b in range(1, 20):
            for m_b in range(1, b):
                self.assertTrue(all(hierarchy.counting_identities(b, m_b).values()))

    def test_basis_intersection(self) -> None:
        for m in range(2, 7):
            ctx = build_field(m)
            basis = hierarchy.subfield_basis(ctx)
            for mask in range(1 << m):
                got = hierarchy.basis_intersection_check(basis, mask, ctx)
                self.assertEqual(got, 1 << (m - bin(mask).count("1")))
        ctx = build_field(3)
        with self.assertRaises(NotABasis):
            hierarchy.basis_intersection_check([1, 1, ctx.eta], 1, ctx)
        with self.assertRaises(NotABasis):
            hierarchy.basis_intersection_check([1, ctx.eta], 1, ctx)


if __name__ == "__main__":
    unittest.main()
