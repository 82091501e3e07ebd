"""Unit tests for gf_tower: field construction, arithmetic and traces."""

from __future__ import annotations

import unittest

import numpy as np

from gf_tower import (
    KNOWN_DEFAULT_MODULI,
    TraceLevel,
    build_field,
    default_modulus,
    is_irreducible,
    is_primitive,
    parse_modulus,
    poly_degree,
    primitive_moduli,
)
from kasami_errors import BadModulus, InvalidM, NotInSubfield


class BuildFieldTests(unittest.TestCase):
    def test_small_parameters(self) -> None:
        ctx = build_field(2)
        self.assertEqual(ctx.q, 4)
        self.assertEqual(ctx.n, 15)
        self.assertEqual(build_field(3).n, 63)

    def test_m_below_two_rejected(self) -> None:
        with self.assertRaises(InvalidM):
            build_field(1)

    def test_default_moduli_pinned(self) -> None:
        for degree, poly in KNOWN_DEFAULT_MODULI.items():
            with self.subTest(degree=degree):
                self.assertEqual(default_modulus(degree), poly)
        self.assertEqual(build_field(2).modulus_hex, "0x13")

    def test_reducible_override_rejected(self) -> None:
        # x^4 + x^2 + 1 = (x^2 + x + 1)^2
        with self.assertRaises(BadModulus) as ctx:
            build_field(2, 0x15)
        self.assertIn("reducible", str(ctx.exception))

    def test_non_primitive_override_rejected(self) -> None:
        # x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5.
        self.assertTrue(is_irreducible(0x1F))
        self.assertFalse(is_primitive(0x1F))
        with self.assertRaises(BadModulus) as ctx:
            build_field(2, 0x1F)
        self.assertIn("not primitive", str(ctx.exception))

    def test_wrong_degree_override_rejected(self) -> None:
        with self.assertRaises(BadModulus):
            build_field(2, 0x43)

    def test_override_used(self) -> None:
        ctx = build_field(2, 0x19)
        self.assertEqual(ctx.modulus, 0x19)
        self.assertEqual(ctx.pow(ctx.theta, ctx.n), 1)

    def test_primitive_moduli_degree_four(self) -> None:
        self.assertEqual(primitive_moduli(4), [0x13, 0x19])
        for poly in primitive_moduli(6):
            self.assertEqual(poly_degree(poly), 6)
            self.assertTrue(is_primitive(poly))


class ArithmeticTests(unittest.TestCase):
    def setUp(self) -> None:
        self.ctx = build_field(3)

    def test_theta_is_primitive(self) -> None:
        ctx = self.ctx
        self.assertEqual(ctx.pow(ctx.theta, ctx.n), 1)
        self.assertEqual(len(set(int(v) for v in ctx.exp_table)), ctx.n)

    def test_eta_is_theta_to_q_plus_one(self) -> None:
        ctx = self.ctx
        self.assertEqual(ctx.pow(ctx.theta, ctx.q + 1), ctx.eta)
        orders = [k for k in range(1, ctx.q) if ctx.pow(ctx.eta, k) == 1]
        self.assertEqual(orders, [ctx.q - 1])

    def test_zero_absorbs(self) -> None:
        for x in range(self.ctx.size):
            self.assertEqual(self.ctx.mul(x, 0), 0)

    def test_log_exp_inverse(self) -> None:
        ctx = self.ctx
        for x in range(1, ctx.size):
            self.assertEqual(ctx.exp(ctx.log(x)), x)
        with self.assertRaises(ZeroDivisionError):
            ctx.log(0)

    def test_div_and_inv(self) -> None:
        ctx = self.ctx
        for x in range(1, ctx.size):
            self.assertEqual(ctx.mul(x, ctx.inv(x)), 1)
            self.assertEqual(ctx.div(ctx.mul(x, 7), 7), x)
        with self.assertRaises(ZeroDivisionError):
            ctx.div(3, 0)

    def test_subfield_is_fixed_by_frobenius_q(self) -> None:
        ctx = self.ctx
        fixed = {x for x in range(ctx.size) if ctx.pow(x, ctx.q) == x}
        self.assertEqual(fixed, {int(v) for v in ctx.subfield_elements()})
        self.assertEqual(fixed, {x for x in range(ctx.size) if ctx.is_subfield(x)})

    def test_norm_lands_in_subfield(self) -> None:
        ctx = self.ctx
        self.assertEqual(ctx.norm(0), 0)
        for x in range(ctx.size):
            self.assertTrue(ctx.is_subfield(ctx.norm(x)))

    def test_array_ops_match_scalar(self) -> None:
        ctx = self.ctx
        xs = np.arange(ctx.size)
        ys = (xs * 5 + 3) % ctx.size
        got = ctx.mul_arrays(xs, ys)
        self.assertEqual(list(got), [ctx.mul(int(a), int(b)) for a, b in zip(xs, ys)])
        self.assertEqual(
            list(ctx.mul_array(9, xs)), [ctx.mul(9, int(a)) for a in xs]
        )
        self.assertEqual(list(ctx.norm_array(xs)), [ctx.norm(int(a)) for a in xs])
        nz = xs[1:]
        self.assertEqual(
            list(ctx.div_arrays(ys[1:], nz)),
            [ctx.div(int(a), int(b)) for a, b in zip(ys[1:], nz)],
        )

    def test_minimal_polynomial_of_theta_is_modulus(self) -> None:
        ctx = self.ctx
        self.assertEqual(ctx.minimal_polynomial(ctx.theta), ctx.modulus)
        self.assertEqual(poly_degree(ctx.minimal_polynomial(ctx.eta)), ctx.m)


class TraceTests(unittest.TestCase):
    def test_trace_of_zero(self) -> None:
        ctx = build_field(2)
        self.assertEqual(ctx.trace(0, TraceLevel.SUBFIELD), 0)
        self.assertEqual(ctx.trace(0), 0)

    def test_subfield_trace_of_one_in_characteristic_two(self) -> None:
        ctx = build_field(2)
        self.assertEqual(ctx.trace(1, TraceLevel.SUBFIELD), 0)
        self.assertEqual(build_field(3).trace(1, TraceLevel.SUBFIELD), 1)

    def test_traces_are_balanced(self) -> None:
        for m in (2, 3, 4):
            ctx = build_field(m)
            with self.subTest(m=m):
                sub = [ctx.trace(int(x), TraceLevel.SUBFIELD) for x in ctx.subfield_elements()]
                self.assertEqual(sum(sub), 1 << (m - 1))
                self.assertEqual(int(ctx.full_trace_table.sum()), 1 << (2 * m - 1))

    def test_full_trace_matches_definition(self) -> None:
        ctx = build_field(3)
        for x in range(ctx.size):
            acc = 0
            for i in range(2 * ctx.m):
                acc ^= ctx.pow(x, 1 << i)
            self.assertEqual(ctx.trace(x), acc)

    def test_traces_are_linear(self) -> None:
        ctx = build_field(4)
        rng = np.random.default_rng(4)
        xs, ys = rng.integers(0, ctx.size, size=(2, 10_000))
        for x, y in zip(xs.tolist(), ys.tolist()):
            self.assertEqual(ctx.trace(x ^ y), ctx.trace(x) ^ ctx.trace(y))
        sub = ctx.subfield_elements()
        us, vs = rng.choice(sub, size=(2, 10_000))
        for u, v in zip(us.tolist(), vs.tolist()):
            self.assertEqual(
                ctx.trace(u ^ v, TraceLevel.SUBFIELD),
                ctx.trace(u, TraceLevel.SUBFIELD) ^ ctx.trace(v, TraceLevel.SUBFIELD),
            )

    def test_subfield_trace_outside_subfield_rejected(self) -> None:
        ctx = build_field(2)
        with self.assertRaises(NotInSubfield):
            ctx.trace(ctx.theta, TraceLevel.SUBFIELD)


class ParseModulusTests(unittest.TestCase):
    def test_hex_forms(self) -> None:
        self.assertEqual(parse_modulus("0x13"), 0x13)
        self.assertEqual(parse_modulus("11d"), 0x11D)

    def test_blank_means_default(self) -> None:
        self.assertIsNone(parse_modulus(None))
        self.assertIsNone(parse_modulus("  "))

    def test_garbage_rejected(self) -> None:
        with self.assertRaises(BadModulus):
            parse_modulus("x^4+x+1")


if __name__ == "__main__":
    unittest.main()
