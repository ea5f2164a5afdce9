import math
import unittest

import numpy as np
import sympy as sp

from chaincalc.data_types.config.finite_difference import FDConfig
from chaincalc.exceptions import DerivativeBudgetError, DimensionMismatchError
from chaincalc.fields.algebra import (
    add_fields,
    constant_field,
    differentiate,
    leibniz_terms,
    lift_field,
    multiply_fields,
)
from chaincalc.fields.callback import CallbackField, ConstantField
from chaincalc.fields.finite_difference import FiniteDifferenceField, central_partial
from chaincalc.fields.symbolic import SymbolicField, coordinate_symbols


class TestSymbolicField(unittest.TestCase):
    def setUp(self):
        self.x, self.y = coordinate_symbols(2)

    def test_partials_are_exact(self):
        f = SymbolicField(self.x**2 * self.y, 2)
        self.assertEqual(f.partial((1, 0), (3.0, 2.0)), 12.0)
        self.assertEqual(f.partial((2, 1), (3.0, 2.0)), 2.0)
        self.assertEqual(f.partial((0, 2), (3.0, 2.0)), 0.0)
        self.assertEqual(f((3.0, 2.0)), 18.0)

    def test_symbols_are_shared(self):
        self.assertIs(coordinate_symbols(2)[0], self.x)

    def test_foreign_symbols_are_rejected(self):
        with self.assertRaises(ValueError):
            SymbolicField(sp.Symbol("t") * self.x, 2)

    def test_wrong_point_length(self):
        with self.assertRaises(DimensionMismatchError):
            SymbolicField(self.x, 2).partial((0, 0), (1.0,))

    def test_constant_detection(self):
        self.assertEqual(SymbolicField(sp.Integer(3), 2).constant_value(), 3.0)
        self.assertIsNone(SymbolicField(self.x, 2).constant_value())
        self.assertTrue(SymbolicField(self.x - self.x, 2).is_zero())

    def test_polynomial_degree(self):
        f = SymbolicField(self.x * self.y + 1, 2)
        self.assertTrue(f.is_polynomial())
        self.assertFalse(f.is_polynomial(1))
        self.assertFalse(SymbolicField(sp.sin(self.x), 2).is_polynomial())


class TestCallbackFields(unittest.TestCase):
    def test_value_only_callback_has_no_derivatives(self):
        f = CallbackField(lambda p: p[0] ** 2, 1)
        self.assertEqual(f.depth_budget, 0)
        self.assertEqual(f((3.0,)), 9.0)
        with self.assertRaises(DerivativeBudgetError) as ctx:
            f.partial((1,), (3.0,))
        self.assertEqual((ctx.exception.required, ctx.exception.available), (1, 0))

    def test_partial_oracle(self):
        f = CallbackField(lambda p: p[0] ** 2, 1, lambda order, p: 2 * p[0] if order == (1,) else 2.0, 2)
        self.assertEqual(f.partial((1,), (3.0,)), 6.0)
        self.assertEqual(f.partial((2,), (3.0,)), 2.0)
        with self.assertRaises(DerivativeBudgetError):
            f.partial((3,), (3.0,))

    def test_constant_field(self):
        f = ConstantField(2.5, 3)
        self.assertEqual(f((1.0, 2.0, 3.0)), 2.5)
        self.assertEqual(f.partial((0, 1, 0), (1.0, 2.0, 3.0)), 0.0)
        self.assertTrue(ConstantField(0.0, 1).is_zero())


class TestFiniteDifferences(unittest.TestCase):
    def test_central_partial_accuracy(self):
        config = FDConfig()
        p = np.array([0.4, 0.3])

        def fn(q):
            return math.sin(q[0]) * math.exp(q[1])

        self.assertAlmostEqual(central_partial(fn, (1, 0), p, config), math.cos(0.4) * math.exp(0.3), places=8)
        self.assertAlmostEqual(central_partial(fn, (1, 1), p, config), math.cos(0.4) * math.exp(0.3), places=5)
        self.assertAlmostEqual(central_partial(fn, (2, 0), p, config), -math.sin(0.4) * math.exp(0.3), places=4)

    def test_budget(self):
        f = FiniteDifferenceField(lambda p: p[0], 1, FDConfig(max_depth=1))
        self.assertAlmostEqual(f.partial((1,), (0.5,)), 1.0, places=8)
        with self.assertRaises(DerivativeBudgetError):
            f.partial((2,), (0.5,))

    def test_config_validation(self):
        with self.assertRaises(ValueError):
            FDConfig(base_step=0.0)
        with self.assertRaises(ValueError):
            FDConfig(growth=0.5)
        with self.assertRaises(ValueError):
            FDConfig(max_depth=-1)

    def test_step_grows_with_order(self):
        config = FDConfig(base_step=1e-5, growth=4.0)
        self.assertEqual(config.step(1, 0.5), 1e-5)
        self.assertAlmostEqual(config.step(3, 2.0), 2e-5 * 16)


class TestFieldAlgebra(unittest.TestCase):
    def setUp(self):
        self.x, self.y = coordinate_symbols(2)

    def test_symbolic_operands_stay_symbolic(self):
        f = SymbolicField(self.x, 2)
        g = SymbolicField(self.y, 2)
        self.assertIsInstance(add_fields([(2.0, f), (1.0, g)]), SymbolicField)
        self.assertIsInstance(multiply_fields(f, g), SymbolicField)
        self.assertIsInstance(differentiate(f, 0), SymbolicField)
        self.assertEqual(differentiate(multiply_fields(f, f), 0).expr, 2 * self.x)

    def test_mixed_product_uses_leibniz(self):
        f = FiniteDifferenceField(lambda p: p[0] ** 3, 2)
        g = SymbolicField(self.x * self.y, 2)
        h = multiply_fields(f, g)
        # h = x^4 y, ∂x h = 4 x^3 y
        self.assertAlmostEqual(h.partial((1, 0), (1.0, 2.0)), 8.0, places=5)

    def test_budgets_propagate(self):
        f = CallbackField(lambda p: p[0], 1, lambda order, p: 1.0 if order == (1,) else 0.0, 1)
        df = differentiate(f, 0)
        self.assertEqual(df.depth_budget, 0)
        with self.assertRaises(DerivativeBudgetError):
            differentiate(df, 0)

    def test_constants_fold(self):
        self.assertEqual(add_fields([(2.0, ConstantField(1.5, 1))]).constant_value(), 3.0)
        self.assertEqual(constant_field(0.5, 1).expr, sp.Float(0.5))
        self.assertTrue(multiply_fields(ConstantField(0.0, 1), CallbackField(abs, 1)).is_zero())

    def test_dimension_checks(self):
        with self.assertRaises(DimensionMismatchError):
            add_fields([(1.0, SymbolicField(self.x, 2)), (1.0, ConstantField(1.0, 3))])
        with self.assertRaises(DimensionMismatchError):
            differentiate(SymbolicField(self.x, 2), 2)
        with self.assertRaises(ValueError):
            add_fields([])

    def test_lift_field(self):
        z = coordinate_symbols(3)[2]
        lifted = lift_field(SymbolicField(coordinate_symbols(1)[0] ** 2, 1), 2, 3)
        self.assertEqual(lifted.expr, z**2)
        opaque = lift_field(FiniteDifferenceField(lambda p: p[0] ** 2, 1), 1, 3)
        self.assertAlmostEqual(opaque((5.0, 3.0, 7.0)), 9.0)
        self.assertEqual(opaque.partial((1, 0, 0), (5.0, 3.0, 7.0)), 0.0)
        with self.assertRaises(DimensionMismatchError):
            lift_field(FiniteDifferenceField(lambda p: p[0], 2), 2, 3)

    def test_leibniz_terms(self):
        terms = leibniz_terms((2,))
        self.assertEqual(terms, [(1, (0,), (2,)), (2, (1,), (1,)), (1, (2,), (0,))])


if __name__ == "__main__":
    unittest.main()
