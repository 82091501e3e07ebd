"""Unit tests for kasami_code: codewords, pair indexing and the exponential sum."""

from __future__ import annotations

import unittest

import numpy as np

from bsymbol import cyclic_shift
from gf_tower import build_field
from kasami_code import (
    Codeword,
    KasamiCode,
    codeword,
    exp_sum_closed,
    exp_sum_closed_arrays,
    exp_sum_direct,
    hamming_weight_from_sum,
    literal_codeword,
    shift_parameters,
)
from kasami_errors import BetaNotInSubfield, ParityViolation


class KasamiCodeShapeTests(unittest.TestCase):
    def test_parameters(self) -> None:
        code = KasamiCode(build_field(2))
        self.assertEqual(code.length, 15)
        self.assertEqual(code.dimension, 6)
        self.assertEqual(code.size, 64)
        self.assertEqual(code.min_distance, 6)
        self.assertEqual(KasamiCode(build_field(3)).min_distance, 28)

    def test_pair_index_round_trip(self) -> None:
        code = KasamiCode(build_field(2))
        for index, (alpha, beta) in enumerate(code.pairs()):
            self.assertEqual(code.pair_index(alpha, beta), index)
            self.assertEqual(code.pair_at(index), (alpha, beta))

    def test_block_rows_follow_pair_order(self) -> None:
        code = KasamiCode(build_field(2))
        words = code.all_codewords()
        self.assertEqual(words.shape, (64, 15))
        for index in (0, 5, 17, 63):
            alpha, beta = code.pair_at(index)
            np.testing.assert_array_equal(words[index], codeword(alpha, beta, code).bits)
        np.testing.assert_array_equal(code.rows_for(np.array([17, 5])), words[[17, 5]])

    def test_codewords_distinct_and_closed_under_addition(self) -> None:
        code = KasamiCode(build_field(2))
        words = {codeword(a, b, code).to_string() for a, b in code.pairs()}
        self.assertEqual(len(words), 64)
        x = codeword(3, 1, code).bits ^ codeword(9, 6, code).bits
        self.assertIn("".join(str(int(v)) for v in x), words)

    def test_linear_in_parameters(self) -> None:
        code = KasamiCode(build_field(2))
        words = code.all_codewords()
        pairs = list(code.pairs())
        for i, (a1, b1) in enumerate(pairs):
            for j, (a2, b2) in enumerate(pairs):
                k = code.pair_index(a1 ^ a2, b1 ^ b2)
                np.testing.assert_array_equal(words[i] ^ words[j], words[k])


class CodewordTests(unittest.TestCase):
    def test_matches_definition(self) -> None:
        for m in (2, 3):
            code = KasamiCode(build_field(m))
            for alpha, beta in code.pairs():
                self.assertEqual(codeword(alpha, beta, code), literal_codeword(alpha, beta, code))

    def test_published_codeword(self) -> None:
        ctx = build_field(2, 0x13)
        code = KasamiCode(ctx)
        c0 = codeword(ctx.exp(8), 1, code)
        self.assertEqual(c0.to_string(), "011001110010000")
        self.assertEqual(Codeword.from_string("0110 0111 0010 000"), c0)

    def test_zero_pair_is_zero_word(self) -> None:
        code = KasamiCode(build_field(3))
        self.assertEqual(codeword(0, 0, code).weight, 0)

    def test_beta_outside_subfield_rejected(self) -> None:
        ctx = build_field(2)
        code = KasamiCode(ctx)
        with self.assertRaises(BetaNotInSubfield):
            codeword(1, ctx.theta, code)

    def test_shift_parameters(self) -> None:
        ctx = build_field(3)
        code = KasamiCode(ctx)
        alpha, beta = 11, ctx.eta_pow(2)
        word = codeword(alpha, beta, code)
        for steps in (1, 2, 9, 62):
            a, b = shift_parameters(alpha, beta, steps, ctx)
            np.testing.assert_array_equal(
                codeword(a, b, code).bits, cyclic_shift(word.bits, steps)
            )


class ExpSumTests(unittest.TestCase):
    def test_closed_form_matches_direct(self) -> None:
        for m in (2, 3, 4):
            code = KasamiCode(build_field(m))
            q = code.ctx.q
            for alpha, beta in code.pairs():
                s = exp_sum_closed(alpha, beta, code)
                self.assertIn(s, (code.length, -1, q - 1, -q - 1))
                self.assertEqual(s, exp_sum_direct(alpha, beta, code))

    def test_array_form_matches_scalar(self) -> None:
        code = KasamiCode(build_field(3))
        pairs = list(code.pairs())
        alphas = np.array([a for a, _ in pairs])
        betas = np.array([b for _, b in pairs])
        got = exp_sum_closed_arrays(alphas, betas, code.ctx)
        self.assertEqual(list(got), [exp_sum_closed(a, b, code) for a, b in pairs])

    def test_weight_from_sum(self) -> None:
        code = KasamiCode(build_field(3))
        for alpha, beta in list(code.pairs())[::7]:
            s = exp_sum_direct(alpha, beta, code)
            self.assertEqual(hamming_weight_from_sum(s, code), codeword(alpha, beta, code).weight)

    def test_weight_from_sum_parity(self) -> None:
        code = KasamiCode(build_field(2))
        with self.assertRaises(ParityViolation):
            hamming_weight_from_sum(0, code)
        with self.assertRaises(ParityViolation):
            hamming_weight_from_sum(17, code)


if __name__ == "__main__":
    unittest.main()
