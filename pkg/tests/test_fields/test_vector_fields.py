import unittest

import numpy as np

from chaincalc.exceptions import DimensionMismatchError
from chaincalc.fields.callback import ConstantField
from chaincalc.fields.smooth_map import SmoothMap
from chaincalc.fields.vector_field import VectorFieldSpec


class TestVectorFieldSpec(unittest.TestCase):
    def test_rotation(self):
        V = VectorFieldSpec.rotation()
        np.testing.assert_allclose(V.value((1.0, 0.0)), [0.0, 1.0])
        np.testing.assert_allclose(V.jacobian((0.3, 0.2)), [[0.0, -1.0], [1.0, 0.0]])
        self.assertTrue(V.is_affine())
        self.assertIsNone(V.constant_value())

    def test_constant_and_basis(self):
        np.testing.assert_allclose(VectorFieldSpec.constant([1.0, 2.0]).constant_value(), [1.0, 2.0])
        np.testing.assert_allclose(VectorFieldSpec.basis(3, 1).value((5.0, 5.0, 5.0)), [0.0, 1.0, 0.0])

    def test_bracket(self):
        # [X, Y] = DY·X - DX·Y
        X = VectorFieldSpec.from_expressions(["1", "0"])
        Y = VectorFieldSpec.from_expressions(["0", "x1"])
        np.testing.assert_allclose(X.bracket(Y).value((0.4, 0.7)), [0.0, 1.0])
        np.testing.assert_allclose(Y.bracket(X).value((0.4, 0.7)), [0.0, -1.0])

    def test_rotation_commutes_with_radial(self):
        R = VectorFieldSpec.rotation()
        E = VectorFieldSpec.from_expressions(["x1", "x2"])
        np.testing.assert_allclose(R.bracket(E).value((0.3, -0.8)), [0.0, 0.0])

    def test_arithmetic(self):
        V = VectorFieldSpec.from_expressions(["x1", "1"])
        W = (V + V.scaled(2.0)).value((2.0, 0.0))
        np.testing.assert_allclose(W, [6.0, 3.0])

    def test_dimension_checks(self):
        with self.assertRaises(DimensionMismatchError):
            VectorFieldSpec([ConstantField(1.0, 3), ConstantField(1.0, 3)])
        with self.assertRaises(ValueError):
            VectorFieldSpec([])
        with self.assertRaises(DimensionMismatchError):
            VectorFieldSpec.rotation().bracket(VectorFieldSpec.basis(3, 0))
        with self.assertRaises(DimensionMismatchError):
            VectorFieldSpec.linear([[1.0, 2.0]])


class TestSmoothMap(unittest.TestCase):
    def test_symbolic_map(self):
        F = SmoothMap.from_expressions(["x1*x2", "x1 + x2", "x2^2"], 2)
        self.assertEqual((F.dim_in, F.dim_out), (2, 3))
        self.assertFalse(F.affine)
        np.testing.assert_allclose(F.value((2.0, 3.0)), [6.0, 5.0, 9.0])
        np.testing.assert_allclose(F.jacobian((2.0, 3.0)), [[3.0, 2.0], [1.0, 1.0], [0.0, 6.0]])

    def test_linear_and_identity(self):
        F = SmoothMap.linear([[1.0, 2.0], [0.0, 1.0]], [1.0, -1.0])
        self.assertTrue(F.affine)
        np.testing.assert_allclose(F.value((1.0, 1.0)), [4.0, 0.0])
        np.testing.assert_allclose(SmoothMap.identity(3).jacobian((1.0, 2.0, 3.0)), np.eye(3))

    def test_callback_map_uses_finite_differences(self):
        F = SmoothMap(1, 2, lambda p: [p[0] ** 2, 3.0 * p[0]])
        np.testing.assert_allclose(F.jacobian((2.0,)), [[4.0], [3.0]], atol=1e-6)
        self.assertFalse(F.is_symbolic)

    def test_wrong_jacobian_shape(self):
        F = SmoothMap(2, 2, lambda p: p, lambda p: np.eye(3))
        with self.assertRaises(DimensionMismatchError):
            F.jacobian((0.0, 0.0))

    def test_wrong_point(self):
        with self.assertRaises(DimensionMismatchError):
            SmoothMap.identity(2).value((1.0,))
        with self.assertRaises(ValueError):
            SmoothMap(0, 1, lambda p: p)


if __name__ == "__main__":
    unittest.main()
