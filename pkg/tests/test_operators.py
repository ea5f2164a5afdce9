import logging
import unittest

import numpy as np

from chaincalc.chains import DiracChain
from chaincalc.exceptions import DimensionMismatchError, UnsupportedOrderError
from chaincalc.exterior import KVector
from chaincalc.fields.smooth_map import SmoothMap
from chaincalc.fields.vector_field import VectorFieldSpec
from chaincalc.forms import integrate, pullback
from chaincalc.operators import (
    anticommutator,
    boundary,
    cobound,
    commutator,
    dir_boundary,
    dirac_op,
    extrude,
    extrude_kvector,
    laplace,
    mult,
    mult_closed_form,
    operator_report,
    perp_chain,
    prederiv,
    pushforward,
    retract,
)
from chaincalc.sampling import random_chain, random_field, random_form, random_scalar

SEEDS = range(8)


class TestPrimitives(unittest.TestCase):
    def test_boundary_of_segment_element(self):
        chain = DiracChain.element((0.0, 0.0), KVector.basis(2, (0,)))
        out = boundary(chain)
        self.assertEqual(out.grade, 0)
        self.assertEqual(out.coefficient((0.0, 0.0), (1, 0), ()), 1.0)

    def test_boundary_of_zero_chain_element(self):
        out = boundary(DiracChain.element((0.0,), KVector.scalar(1)))
        self.assertTrue(out.is_zero())
        self.assertEqual(out.grade, -1)

    def test_retract_example(self):
        chain = DiracChain.element((0.0, 0.0), KVector.basis(2, (0, 1)))
        out = retract((1.0, 1.0), chain)
        self.assertEqual(out.coefficient((0.0, 0.0), (0, 0), (1,)), 1.0)
        self.assertEqual(out.coefficient((0.0, 0.0), (0, 0), (0,)), -1.0)

    def test_extrude_top_grade_is_zero(self):
        chain = DiracChain.element((0.0, 0.0), KVector.volume(2))
        out = extrude((1.0, 2.0), chain)
        self.assertTrue(out.is_zero())
        self.assertEqual(out.grade, 3)

    def test_prederiv_constant_raises_degree(self):
        chain = DiracChain.element((0.0, 0.0), KVector.scalar(2))
        out = prederiv((2.0, 0.0), chain)
        self.assertEqual(out.coefficient((0.0, 0.0), (1, 0), ()), 2.0)
        self.assertEqual(out.order, 1)

    def test_extrude_kvector(self):
        chain = DiracChain.element((0.0, 0.0, 0.0), KVector.basis(3, (2,)))
        out = extrude_kvector(KVector.basis(3, (0, 1)), chain)
        self.assertEqual(out.coefficient((0.0, 0.0, 0.0), (0, 0, 0), (0, 1, 2)), 1.0)
        with self.assertRaises(DimensionMismatchError):
            extrude_kvector(KVector.basis(2, (0,)), chain)

    def test_field_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            extrude(VectorFieldSpec.rotation(), DiracChain.zero(3, 1))

    def test_operator_report(self):
        chain = DiracChain.element((0.0, 0.0), KVector.basis(2, (0,)))
        report = operator_report("boundary", chain, boundary(chain))
        self.assertEqual((report.grade_in, report.grade_out), (1, 0))
        self.assertEqual((report.order_in, report.order_out), (0, 1))
        self.assertIn("grade 1->0", str(report))

    def test_debug_logging(self):
        chain = DiracChain.element((0.0, 0.0), KVector.basis(2, (0,)))
        with self.assertLogs("chaincalc.operators", level=logging.DEBUG) as logs:
            boundary(chain)
        self.assertTrue(any("boundary" in line for line in logs.output))


class TestNilpotency(unittest.TestCase):
    def test_squares_vanish(self):
        for seed in SEEDS:
            with self.subTest(seed=seed):
                rng = np.random.default_rng(seed)
                dim = int(rng.integers(1, 4))
                grade = int(rng.integers(0, dim + 1))
                chain = random_chain(rng, dim, grade, max_order=2)
                v = rng.integers(-3, 4, size=dim).astype(float)
                self.assertTrue(boundary(boundary(chain)).is_zero())
                self.assertTrue(cobound(cobound(chain)).is_zero())
                self.assertTrue(extrude(v, extrude(v, chain)).is_zero())
                self.assertTrue(retract(v, retract(v, chain)).is_zero())


class TestRelations(unittest.TestCase):
    def test_cartan_for_constant_vectors(self):
        for seed in SEEDS:
            with self.subTest(seed=seed):
                rng = np.random.default_rng(seed)
                chain = random_chain(rng, 3, 1, max_order=1)
                v = rng.integers(-3, 4, size=3).astype(float)
                cartan = anticommutator(boundary, lambda c: extrude(v, c), chain)
                self.assertTrue(cartan.allclose(prederiv(v, chain)))

    def test_directional_boundaries_sum_to_boundary(self):
        rng = np.random.default_rng(3)
        chain = random_chain(rng, 3, 2, max_order=1)
        total = DiracChain.zero(3, 1)
        for axis in range(3):
            total = total + dir_boundary(np.eye(3)[axis], chain)
        self.assertTrue(total.allclose(boundary(chain)))

    def test_constant_prederivatives_commute(self):
        rng = np.random.default_rng(5)
        chain = random_chain(rng, 2, 1, max_order=1)
        out = commutator(lambda c: prederiv((1.0, 2.0), c), lambda c: prederiv((0.5, -1.0), c), chain)
        self.assertTrue(out.is_zero())

    def test_perp_chain_involution(self):
        for seed in SEEDS:
            with self.subTest(seed=seed):
                rng = np.random.default_rng(seed)
                dim = int(rng.integers(1, 5))
                grade = int(rng.integers(0, dim + 1))
                chain = random_chain(rng, dim, grade, max_order=1)
                sign = -1.0 if (dim + grade * (dim - grade)) % 2 else 1.0
                self.assertTrue(perp_chain(perp_chain(chain)).allclose(chain * sign))

    def test_dirac_squared_is_laplace(self):
        for seed in SEEDS:
            with self.subTest(seed=seed):
                rng = np.random.default_rng(seed)
                dim = int(rng.integers(1, 4))
                grade = int(rng.integers(0, dim + 1))
                chain = random_chain(rng, dim, grade, max_order=1)
                twice = dirac_op(dirac_op({grade: chain}))
                expected = laplace(chain)
                self.assertTrue(twice.get(grade, DiracChain.zero(dim, grade)).allclose(expected, 1e-9))
                self.assertEqual(set(twice) - {grade}, set())

    def test_mult_matches_leibniz_expansion(self):
        for seed in SEEDS:
            with self.subTest(seed=seed):
                rng = np.random.default_rng(seed)
                chain = random_chain(rng, 2, 1, max_order=3)
                f = random_scalar(rng, 2, degree=3)
                self.assertTrue(mult(f, chain).allclose(mult_closed_form(f, chain), 1e-9))

    def test_nonconstant_extrusion_is_mult_of_components(self):
        rng = np.random.default_rng(9)
        chain = random_chain(rng, 2, 0, max_order=1)
        V = random_field(rng, 2)
        direct = extrude(V, chain)
        by_parts = mult(V.components[0], extrude((1.0, 0.0), chain)) + mult(
            V.components[1], extrude((0.0, 1.0), chain)
        )
        self.assertTrue(direct.allclose(by_parts))


class TestPushforward(unittest.TestCase):
    def test_affine_map_on_dipoles(self):
        F = SmoothMap.from_expressions(["2*x1 + x2 + 1", "x2 - x1"], 2)
        self.assertTrue(F.affine)
        for seed in SEEDS:
            with self.subTest(seed=seed):
                rng = np.random.default_rng(seed)
                chain = random_chain(rng, 2, 1, max_order=2)
                w = random_form(rng, 2, 1, degree=3)
                lhs = integrate(w, pushforward(F, chain))
                rhs = integrate(pullback(F, w), chain)
                self.assertAlmostEqual(lhs, rhs, delta=1e-9 * (1 + abs(lhs)))

    def test_nonaffine_map_rejects_dipoles(self):
        F = SmoothMap.from_expressions(["x1^2", "x2"], 2)
        chain = DiracChain.element((1.0, 0.0), KVector.scalar(2), degree=(1, 0))
        with self.assertRaises(UnsupportedOrderError):
            pushforward(F, chain)

    def test_nonaffine_map_on_points(self):
        F = SmoothMap.from_expressions(["x1^2", "x1*x2"], 2)
        chain = DiracChain.element((2.0, 3.0), KVector.basis(2, (0,)))
        out = pushforward(F, chain)
        self.assertEqual(out.coefficient((4.0, 6.0), (0, 0), (0,)), 4.0)
        self.assertEqual(out.coefficient((4.0, 6.0), (0, 0), (1,)), 3.0)

    def test_dimension_mismatch(self):
        F = SmoothMap.from_expressions(["x1", "x2"], 2)
        with self.assertRaises(DimensionMismatchError):
            pushforward(F, DiracChain.zero(3, 0))


if __name__ == "__main__":
    unittest.main()
