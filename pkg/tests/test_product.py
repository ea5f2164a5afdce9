import unittest

import numpy as np

from chaincalc.chains import DiracChain, support
from chaincalc.exterior import KVector
from chaincalc.forms import Form, integrate
from chaincalc.operators import boundary
from chaincalc.product import cartesian_wedge, lift_form, product_form
from chaincalc.represent.cubes import cube_chain
from chaincalc.sampling import random_chain, random_form

SEEDS = range(12)


class TestCartesianWedge(unittest.TestCase):
    def test_elements(self):
        a = DiracChain.element((0.5,), KVector.basis(1, (0,)))
        b = DiracChain.element((0.1, 0.2), KVector.basis(2, (1,), 3.0))
        product = cartesian_wedge(a, b)
        self.assertEqual((product.dim, product.grade), (3, 2))
        self.assertEqual(product.coefficient((0.5, 0.1, 0.2), (0, 0, 0), (0, 2)), 3.0)

    def test_unit_squares(self):
        side = cube_chain((0.0,), 1.0, (0,), level=3)
        square = cartesian_wedge(side, side)
        self.assertEqual(len(square), 64)
        self.assertTrue(square.allclose(cube_chain((0.0, 0.0), 1.0, (0, 1), level=3), 1e-15))

    def test_points_do_not_commute(self):
        a = DiracChain.element((1.0,), KVector.scalar(1, 1.0))
        b = DiracChain.element((2.0,), KVector.scalar(1, 1.0))
        self.assertEqual(cartesian_wedge(a, b).coefficient((1.0, 2.0), (0, 0), ()), 1.0)
        self.assertEqual(cartesian_wedge(b, a).coefficient((1.0, 2.0), (0, 0), ()), 0.0)

    def test_support_is_product_of_supports(self):
        for seed in SEEDS:
            with self.subTest(seed=seed):
                rng = np.random.default_rng(seed)
                J = random_chain(rng, 2, int(rng.integers(0, 3)), 1, terms=4)
                K = random_chain(rng, 1, int(rng.integers(0, 2)), 1, terms=4)
                expected = {p + q for p in support(J) for q in support(K)}
                self.assertEqual(support(cartesian_wedge(J, K)), expected)

    def test_nonzero_factors_give_nonzero_product(self):
        for seed in SEEDS:
            with self.subTest(seed=seed):
                rng = np.random.default_rng(seed)
                J = random_chain(rng, 2, 1, 2, terms=3)
                K = random_chain(rng, 2, 1, 2, terms=3)
                if J.is_zero() or K.is_zero():
                    continue
                product = cartesian_wedge(J, K)
                self.assertFalse(product.is_zero())
                self.assertEqual(len(product), len(J) * len(K))
        zero = DiracChain.zero(2, 1)
        self.assertTrue(cartesian_wedge(zero, random_chain(np.random.default_rng(0), 1, 0)).is_zero())

    def test_boundary_leibniz(self):
        for seed in SEEDS:
            with self.subTest(seed=seed):
                rng = np.random.default_rng(seed)
                k, l = int(rng.integers(0, 3)), int(rng.integers(0, 2))
                J = random_chain(rng, 2, k, 2, terms=3)
                K = random_chain(rng, 1, l, 2, terms=3)
                sign = -1.0 if k % 2 else 1.0
                lhs = boundary(cartesian_wedge(J, K))
                rhs = cartesian_wedge(boundary(J), K) + cartesian_wedge(J, boundary(K)) * sign
                self.assertTrue(lhs.allclose(rhs, 1e-12))

    def test_boundary_of_points_times_chain(self):
        J = DiracChain.element((0.3,), KVector.scalar(1, 2.0))
        K = cube_chain((0.0,), 1.0, (0,), level=2)
        self.assertTrue(boundary(cartesian_wedge(J, K)).allclose(cartesian_wedge(J, boundary(K)), 1e-15))
        self.assertTrue(boundary(cartesian_wedge(K, J)).allclose(cartesian_wedge(boundary(K), J), 1e-15))


class TestProductForms(unittest.TestCase):
    def test_lift_form(self):
        lifted = lift_form(Form.parse("x^2 @ 1", 1), 1, 3)
        self.assertEqual(lifted.grade, 1)
        self.assertEqual([index for index, _ in lifted.items()], [(1,)])
        value = lifted.evaluate((7.0, 3.0, 5.0), KVector.basis(3, (1,)))
        self.assertAlmostEqual(value, 9.0)

    def test_fubini(self):
        for seed in SEEDS:
            with self.subTest(seed=seed):
                rng = np.random.default_rng(seed)
                n1, n2 = int(rng.integers(1, 3)), int(rng.integers(1, 3))
                k, l = int(rng.integers(0, n1 + 1)), int(rng.integers(0, n2 + 1))
                J = random_chain(rng, n1, k, 2, terms=3)
                K = random_chain(rng, n2, l, 2, terms=3)
                w, eta = random_form(rng, n1, k), random_form(rng, n2, l)
                lhs = integrate(product_form(w, eta), cartesian_wedge(J, K))
                rhs = integrate(w, J) * integrate(eta, K)
                self.assertAlmostEqual(lhs, rhs, delta=1e-10 * max(1.0, abs(rhs)))

    def test_area_of_product(self):
        side = cube_chain((0.0,), 2.0, (0,), level=2)
        x = Form.parse("x @ 1", 1)
        self.assertAlmostEqual(integrate(product_form(x, x), cartesian_wedge(side, side)), 4.0)


if __name__ == "__main__":
    unittest.main()
